#pragma once

// Deterministic random inputs for property checks.

#include <cstddef>
#include <random>
#include <vector>

#include "partexp/rational.hpp"
#include "partexp/sequences.hpp"
#include "partexp/toeplitz.hpp"

namespace partexp {

/// Small signed fraction; zero shows up often enough to exercise sparse bands.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  return make_rational(num(rng), den(rng));
}

inline SeedSequence random_seed(std::mt19937_64& rng, std::size_t length) {
  std::vector<Rational> terms(length);
  for (std::size_t n = 1; n < length; ++n) terms[n] = random_rational(rng);
  return SeedSequence(std::move(terms));
}

inline TransformedSequence random_transform(std::mt19937_64& rng, std::size_t length) {
  std::vector<Rational> terms(length);
  terms[0] = 1;
  for (std::size_t n = 1; n < length; ++n) terms[n] = random_rational(rng);
  return TransformedSequence(std::move(terms));
}

inline BandMatrix random_band(std::mt19937_64& rng, std::size_t order, bool strictly_upper) {
  std::vector<Rational> band(order);
  for (std::size_t k = strictly_upper ? 1 : 0; k < order; ++k) band[k] = random_rational(rng);
  return BandMatrix(std::move(band));
}

}  // namespace partexp
