#pragma once

// Upper-triangular Toeplitz matrices of finite order, stored by band.
//
// An order-N matrix M with M[i][j] = band[j - i] for j >= i and 0 below the
// diagonal is determined by band[0..N-1]. Products of such matrices stay in
// the class and reduce to a truncated convolution of bands, so exp and log
// never touch a dense array. Entry (i, i+n) of any result depends only on
// band entries <= n; truncating at order N is therefore exact.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "partexp/rational.hpp"
#include "partexp/sequences.hpp"

namespace partexp {

class BandMatrix {
 public:
  /// Order is band.size(). Throws std::domain_error on an empty band.
  explicit BandMatrix(std::vector<Rational> band);

  static BandMatrix identity(std::size_t order);
  static BandMatrix zero(std::size_t order);

  std::size_t order() const { return band_.size(); }
  std::span<const Rational> band() const { return band_; }
  const Rational& operator[](std::size_t distance) const { return band_[distance]; }

  bool operator==(const BandMatrix&) const = default;

 private:
  std::vector<Rational> band_;
};

using BandProduct = BandMatrix (*)(const BandMatrix&, const BandMatrix&);

/// band[0] = 0, band[n] = s[n]/n. Throws std::domain_error when order is 0 or
/// exceeds s.size().
BandMatrix seed_matrix(const SeedSequence& s, std::size_t order);

/// Recovers the seed from a strictly upper band: s[n] = n * band[n].
/// Throws std::domain_error when band[0] != 0.
SeedSequence seed_from_band(const BandMatrix& s);

/// Band of the matrix product; C[n] = sum_k A[k] B[n-k].
/// Throws std::domain_error on order mismatch.
BandMatrix band_mul(const BandMatrix& a, const BandMatrix& b);

BandMatrix band_add(const BandMatrix& a, const BandMatrix& b);
BandMatrix band_scale(const BandMatrix& a, const Rational& factor);

/// sum_{r=0}^{N-1} S^r / r!. S must be strictly upper triangular (band[0] = 0),
/// which makes it nilpotent and the series finite; otherwise std::domain_error.
/// `mul` exists so verification can substitute the product kernel.
BandMatrix toeplitz_exp(const BandMatrix& s, BandProduct mul = band_mul);

/// sum_{r=1}^{N-1} (-1)^{r-1} (T - E)^r / r. Requires band[0] = 1.
BandMatrix toeplitz_log(const BandMatrix& t, BandProduct mul = band_mul);

/// M[i][j] in the dense picture. Throws std::out_of_range for i or j >= order.
Rational entry(const BandMatrix& m, std::size_t i, std::size_t j);

/// {"order": N, "band": ["0/1", "1/1", "3/2", ...]}
std::string band_to_json(const BandMatrix& m);

/// Accepts "num/den" or bare integers in the band. Throws std::invalid_argument
/// on malformed documents or when "order" disagrees with the band length.
BandMatrix band_from_json(std::string_view text);

}  // namespace partexp
