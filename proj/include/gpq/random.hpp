#pragma once

#include <cstdint>
#include <random>

#include "gpq/linalg.hpp"

namespace gpq {

using Rng = std::mt19937_64;

// Bounds for sampled elements: polynomial degree over F_2(t) (and an
// optional small denominator), integer height for quaternion components.
struct SampleBounds {
  int degree = 4;
  bool fractions = false;
  int height = 6;
};

Scalar random_scalar(const Ring& r, Rng& rng, const SampleBounds& b = {});
Scalar random_nonzero(const Ring& r, Rng& rng, const SampleBounds& b = {});
Vec random_vec(const Ring& r, std::size_t n, Rng& rng, const SampleBounds& b = {});
// product of random elementary matrices; invertible by construction
Mat random_invertible(const Ring& r, std::size_t n, Rng& rng, const SampleBounds& b = {}, int steps = 6);

}  // namespace gpq
