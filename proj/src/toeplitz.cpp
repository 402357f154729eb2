#include "partexp/toeplitz.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace partexp {

BandMatrix::BandMatrix(std::vector<Rational> band) : band_(std::move(band)) {
  if (band_.empty()) throw std::domain_error("band matrix order must be positive");
}

BandMatrix BandMatrix::identity(std::size_t order) {
  std::vector<Rational> band(order);
  if (order > 0) band[0] = 1;
  return BandMatrix(std::move(band));
}

BandMatrix BandMatrix::zero(std::size_t order) { return BandMatrix(std::vector<Rational>(order)); }

BandMatrix seed_matrix(const SeedSequence& s, std::size_t order) {
  if (order == 0) throw std::domain_error("seed_matrix: order must be positive");
  if (order > s.size()) {
    throw std::domain_error("seed_matrix: order " + std::to_string(order) +
                            " exceeds seed length " + std::to_string(s.size()));
  }
  std::vector<Rational> band(order);
  for (std::size_t n = 1; n < order; ++n) band[n] = s[n] / static_cast<unsigned long>(n);
  return BandMatrix(std::move(band));
}

SeedSequence seed_from_band(const BandMatrix& s) {
  if (s[0] != 0) throw std::domain_error("seed_from_band: band[0] must be 0");
  std::vector<Rational> terms(s.order());
  for (std::size_t n = 1; n < s.order(); ++n) terms[n] = s[n] * static_cast<unsigned long>(n);
  return SeedSequence(std::move(terms));
}

BandMatrix band_mul(const BandMatrix& a, const BandMatrix& b) {
  if (a.order() != b.order()) {
    throw std::domain_error("band_mul: order mismatch " + std::to_string(a.order()) + " vs " +
                            std::to_string(b.order()));
  }
  const std::size_t order = a.order();
  std::vector<Rational> c(order);
  for (std::size_t k = 0; k < order; ++k) {
    if (sgn(a[k]) == 0) continue;
    for (std::size_t m = 0; k + m < order; ++m) {
      if (sgn(b[m]) == 0) continue;
      c[k + m] += a[k] * b[m];
    }
  }
  return BandMatrix(std::move(c));
}

BandMatrix band_add(const BandMatrix& a, const BandMatrix& b) {
  if (a.order() != b.order()) throw std::domain_error("band_add: order mismatch");
  std::vector<Rational> c(a.band().begin(), a.band().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return BandMatrix(std::move(c));
}

BandMatrix band_scale(const BandMatrix& a, const Rational& factor) {
  std::vector<Rational> c(a.band().begin(), a.band().end());
  for (auto& x : c) x *= factor;
  return BandMatrix(std::move(c));
}

BandMatrix toeplitz_exp(const BandMatrix& s, BandProduct mul) {
  if (s[0] != 0) {
    throw std::domain_error("toeplitz_exp: band[0] must be 0 (strictly upper triangular)");
  }
  const std::size_t order = s.order();
  BandMatrix result = BandMatrix::identity(order);
  BandMatrix power = BandMatrix::identity(order);
  BigInt fact = 1;
  // S^r vanishes for r >= order.
  for (std::size_t r = 1; r < order; ++r) {
    power = mul(power, s);
    fact *= static_cast<unsigned long>(r);
    result = band_add(result, band_scale(power, Rational(1, fact)));
  }
  return result;
}

BandMatrix toeplitz_log(const BandMatrix& t, BandProduct mul) {
  if (t[0] != 1) throw std::domain_error("toeplitz_log: band[0] must be 1");
  const std::size_t order = t.order();
  const BandMatrix shifted = band_add(t, band_scale(BandMatrix::identity(order), -1));
  BandMatrix result = BandMatrix::zero(order);
  BandMatrix power = BandMatrix::identity(order);
  for (std::size_t r = 1; r < order; ++r) {
    power = mul(power, shifted);
    Rational coeff(1, static_cast<unsigned long>(r));
    if (r % 2 == 0) coeff = -coeff;
    result = band_add(result, band_scale(power, coeff));
  }
  return result;
}

Rational entry(const BandMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.order() || j >= m.order()) {
    throw std::out_of_range("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside order " + std::to_string(m.order()));
  }
  return j >= i ? m[j - i] : Rational(0);
}

std::string band_to_json(const BandMatrix& m) {
  nlohmann::json band = nlohmann::json::array();
  for (const auto& x : m.band()) band.push_back(format_rational_full(x));
  nlohmann::json doc;
  doc["order"] = m.order();
  doc["band"] = std::move(band);
  return doc.dump();
}

BandMatrix band_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("band matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("band") ||
      !doc["order"].is_number_unsigned() || !doc["band"].is_array()) {
    throw std::invalid_argument("band matrix JSON needs {\"order\": N, \"band\": [...]}");
  }
  std::vector<Rational> band;
  for (const auto& item : doc["band"]) {
    if (!item.is_string()) throw std::invalid_argument("band entries must be rational strings");
    band.push_back(parse_rational(item.get<std::string>()));
  }
  if (doc["order"].get<std::size_t>() != band.size()) {
    throw std::invalid_argument("band matrix JSON: order does not match band length");
  }
  if (band.empty()) throw std::invalid_argument("band matrix JSON: empty band");
  return BandMatrix(std::move(band));
}

}  // namespace partexp
