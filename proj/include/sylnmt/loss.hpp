#pragma once

#include <cmath>
#include <cstdint>

#include "sylnmt/tensor.hpp"

namespace sylnmt {

// Probabilities below this are clamped before the log so confident mistakes
// cannot produce -inf.
inline constexpr double kProbFloor = 1e-12;

// Mean negative log-likelihood over unmasked positions.
// probs: (B,T,V) rows summing to 1 (caller's contract), targets: (B,T),
// mask: optional (B,T), nonzero = counted.
template <typename S>
double cross_entropy(const Tensor<S>& probs, const TensorI& targets,
                     const TensorB* mask = nullptr) {
  if (probs.empty()) fail(ErrorKind::EmptyTensor, "cross_entropy on empty tensor");
  if (probs.rank() != 3)
    fail(ErrorKind::ShapeMismatch, "cross_entropy expects probs of rank 3");
  const std::size_t batch = probs.dim(0), steps = probs.dim(1),
                    vocab = probs.dim(2);
  if (targets.rank() != 2 || targets.dim(0) != batch || targets.dim(1) != steps)
    fail(ErrorKind::ShapeMismatch, "targets shape does not match probs");
  if (mask && (mask->rank() != 2 || mask->dim(0) != batch || mask->dim(1) != steps))
    fail(ErrorKind::ShapeMismatch, "mask shape does not match targets");

  double total = 0.0;
  std::size_t counted = 0;
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t t = 0; t < steps; ++t) {
      if (mask && (*mask).at(b, t) == 0) continue;
      const std::int32_t target = targets.at(b, t);
      if (target < 0 || static_cast<std::size_t>(target) >= vocab)
        fail(ErrorKind::IdOutOfRange,
             "target id " + std::to_string(target) + " >= vocab " +
                 std::to_string(vocab));
      const double p = std::max(static_cast<double>(probs.at(b, t, target)),
                                kProbFloor);
      total -= std::log(p);
      ++counted;
    }
  }
  if (counted == 0) fail(ErrorKind::EmptyMask, "all positions masked");
  return total / static_cast<double>(counted);
}

// Gradient of cross_entropy(softmax(logits)) with respect to the logits:
// (p - onehot) / n_unmasked on counted positions, zero elsewhere.
template <typename S>
Tensor<S> softmax_xent_backward(const Tensor<S>& probs, const TensorI& targets,
                                const TensorB* mask = nullptr) {
  const std::size_t batch = probs.dim(0), steps = probs.dim(1),
                    vocab = probs.dim(2);
  std::size_t counted = 0;
  for (std::size_t b = 0; b < batch; ++b)
    for (std::size_t t = 0; t < steps; ++t)
      if (!mask || (*mask).at(b, t) != 0) ++counted;
  if (counted == 0) fail(ErrorKind::EmptyMask, "all positions masked");

  Tensor<S> grad(probs.shape());
  const S scale = S(1) / static_cast<S>(counted);
  for (std::size_t b = 0; b < batch; ++b) {
    for (std::size_t t = 0; t < steps; ++t) {
      if (mask && (*mask).at(b, t) == 0) continue;
      const std::int32_t target = targets.at(b, t);
      for (std::size_t v = 0; v < vocab; ++v)
        grad.at(b, t, v) = probs.at(b, t, v) * scale;
      grad.at(b, t, static_cast<std::size_t>(target)) -= scale;
    }
  }
  return grad;
}

}  // namespace sylnmt
