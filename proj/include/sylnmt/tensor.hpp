#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sylnmt/error.hpp"

namespace sylnmt {

// Dense row-major tensor. Working precision is float; gradient verification
// instantiates the same code with double. Integer specializations carry token
// ids and masks.
template <typename S>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<std::size_t> shape)
      : shape_(std::move(shape)), data_(count(shape_), S(0)) {}

  Tensor(std::vector<std::size_t> shape, std::vector<S> values)
      : shape_(std::move(shape)), data_(std::move(values)) {
    if (count(shape_) != data_.size())
      fail(ErrorKind::ShapeMismatch,
           "tensor data length does not match shape product");
  }

  static Tensor zeros(std::vector<std::size_t> shape) {
    return Tensor(std::move(shape));
  }

  static Tensor full(std::vector<std::size_t> shape, S value) {
    Tensor t(std::move(shape));
    for (auto& v : t.data_) v = value;
    return t;
  }

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  std::size_t dim(std::size_t axis) const { return shape_[axis]; }

  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }

  S& operator[](std::size_t flat) { return data_[flat]; }
  const S& operator[](std::size_t flat) const { return data_[flat]; }

  S& at(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
  const S& at(std::size_t i, std::size_t j) const {
    return data_[i * shape_[1] + j];
  }

  S& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }
  const S& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * shape_[1] + j) * shape_[2] + k];
  }

  void fill(S value) {
    for (auto& v : data_) v = value;
  }

  bool all_finite() const {
    if constexpr (std::is_floating_point_v<S>) {
      for (S v : data_)
        if (!std::isfinite(v)) return false;
    }
    return true;
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  static std::size_t count(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return shape.empty() ? 0 : n;
  }

 private:
  std::vector<std::size_t> shape_;
  std::vector<S> data_;
};

using TensorF = Tensor<float>;
using TensorD = Tensor<double>;
using TensorI = Tensor<std::int32_t>;
using TensorB = Tensor<std::uint8_t>;

inline std::string shape_string(const std::vector<std::size_t>& shape) {
  std::string s = "(";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shape[i]);
  }
  return s + ")";
}

// C = alpha * op(A) * op(B) + beta * C, row-major.
// op(A) is (m x k), op(B) is (k x n), C is (m x n). The NN case runs in
// i-k-j order so the inner loop streams both B and C rows.
template <typename S>
void gemm(bool trans_a, bool trans_b, std::size_t m, std::size_t n,
          std::size_t k, S alpha, const S* a, std::size_t lda, const S* b,
          std::size_t ldb, S beta, S* c, std::size_t ldc) {
  for (std::size_t i = 0; i < m; ++i) {
    S* crow = c + i * ldc;
    if (beta == S(0)) {
      for (std::size_t j = 0; j < n; ++j) crow[j] = S(0);
    } else if (beta != S(1)) {
      for (std::size_t j = 0; j < n; ++j) crow[j] *= beta;
    }
  }
  if (!trans_a && !trans_b) {
    for (std::size_t i = 0; i < m; ++i) {
      const S* arow = a + i * lda;
      S* crow = c + i * ldc;
      for (std::size_t p = 0; p < k; ++p) {
        const S av = alpha * arow[p];
        const S* brow = b + p * ldb;
        for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
    }
  } else if (!trans_a && trans_b) {
    for (std::size_t i = 0; i < m; ++i) {
      const S* arow = a + i * lda;
      S* crow = c + i * ldc;
      for (std::size_t j = 0; j < n; ++j) {
        const S* brow = b + j * ldb;
        S acc = S(0);
        for (std::size_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
        crow[j] += alpha * acc;
      }
    }
  } else if (trans_a && !trans_b) {
    for (std::size_t p = 0; p < k; ++p) {
      const S* arow = a + p * lda;
      const S* brow = b + p * ldb;
      for (std::size_t i = 0; i < m; ++i) {
        const S av = alpha * arow[i];
        S* crow = c + i * ldc;
        for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      S* crow = c + i * ldc;
      for (std::size_t j = 0; j < n; ++j) {
        S acc = S(0);
        for (std::size_t p = 0; p < k; ++p)
          acc += a[p * lda + i] * b[j * ldb + p];
        crow[j] += alpha * acc;
      }
    }
  }
}

}  // namespace sylnmt
