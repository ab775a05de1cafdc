#pragma once

#include <algorithm>
#include <cmath>

#include "sylnmt/tensor.hpp"

namespace sylnmt {

enum class ActKind { Sigmoid, Tanh, SoftmaxRows };

// Numerically safe logistic: never exponentiates a positive argument.
template <typename S>
inline S sigmoid_scalar(S x) {
  if (x >= S(0)) {
    const S e = std::exp(-x);
    return S(1) / (S(1) + e);
  }
  const S e = std::exp(x);
  return e / (S(1) + e);
}

// Softmax over the last axis, with row-max subtraction for stability.
template <typename S>
void softmax_rows_inplace(Tensor<S>& x) {
  if (x.empty()) fail(ErrorKind::EmptyTensor, "softmax of empty tensor");
  const std::size_t width = x.shape().back();
  const std::size_t rows = x.size() / width;
  S* d = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    S* row = d + r * width;
    S mx = row[0];
    for (std::size_t j = 1; j < width; ++j) mx = std::max(mx, row[j]);
    S sum = S(0);
    for (std::size_t j = 0; j < width; ++j) {
      row[j] = std::exp(row[j] - mx);
      sum += row[j];
    }
    const S inv = S(1) / sum;
    for (std::size_t j = 0; j < width; ++j) row[j] *= inv;
  }
}

template <typename S>
Tensor<S> activation(ActKind kind, const Tensor<S>& x) {
  if (x.empty()) fail(ErrorKind::EmptyTensor, "activation of empty tensor");
  Tensor<S> y = x;
  switch (kind) {
    case ActKind::Sigmoid:
      for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = sigmoid_scalar(y[i]);
      break;
    case ActKind::Tanh:
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = std::tanh(y[i]);
      break;
    case ActKind::SoftmaxRows:
      softmax_rows_inplace(y);
      break;
  }
  return y;
}

}  // namespace sylnmt
