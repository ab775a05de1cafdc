#pragma once

#include <cmath>

#include "sylnmt/rng.hpp"
#include "sylnmt/tensor.hpp"

namespace sylnmt {

enum class InitScheme { GlorotUniform, Zeros };

// Glorot/Xavier uniform: U(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
// Rank >= 2 uses (shape[0], shape[1]) as the fans; a vector is treated as an
// (n, 1) matrix. Draws happen in double and are cast to the target scalar so
// float and double tensors see the same sample sequence.
template <typename S>
Tensor<S> init_params(std::vector<std::size_t> shape, InitScheme scheme,
                      std::uint64_t rng_seed) {
  Tensor<S> t(std::move(shape));
  if (scheme == InitScheme::Zeros) return t;
  const std::size_t fan_in = t.rank() >= 1 ? t.dim(0) : 1;
  const std::size_t fan_out = t.rank() >= 2 ? t.dim(1) : 1;
  const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  Xoshiro256 rng(rng_seed);
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = static_cast<S>((2.0 * rng.uniform() - 1.0) * bound);
  return t;
}

inline double glorot_bound(std::size_t fan_in, std::size_t fan_out) {
  return std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
}

}  // namespace sylnmt
