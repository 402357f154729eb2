#include "partexp/sequences.hpp"

#include <string>
#include <utility>

namespace partexp {

DivisorFlavor DivisorFlavor::not_divisible_by(std::int64_t q) {
  if (q < 2) {
    throw std::domain_error("NOT_DIV modulus must be >= 2, got " + std::to_string(q));
  }
  return DivisorFlavor(Kind::NotDivisible, q);
}

SeedSequence::SeedSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::domain_error("seed sequence must hold at least s_0");
  if (terms_[0] != 0) {
    throw std::domain_error("seed sequence requires s_0 = 0, got " + format_rational(terms_[0]));
  }
}

TransformedSequence::TransformedSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::domain_error("transformed sequence must hold at least t_0");
  if (terms_[0] != 1) {
    throw std::domain_error("transformed sequence requires t_0 = 1, got " +
                            format_rational(terms_[0]));
  }
}

BigInt divisor_sum(std::int64_t n, DivisorFlavor flavor) {
  if (n < 1) throw std::domain_error("divisor_sum needs n >= 1, got " + std::to_string(n));
  BigInt total = 0;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    const std::int64_t co = n / d;
    if (flavor.admits(d)) total += d;
    if (co != d && flavor.admits(co)) total += co;
  }
  return total;
}

Rational sigma_bar(std::int64_t n) {
  return make_rational(divisor_sum(n, DivisorFlavor::all()), BigInt(static_cast<long>(n)));
}

SeedSequence seed_from_flavor(std::size_t max_index, DivisorFlavor flavor) {
  std::vector<Rational> terms;
  terms.reserve(max_index + 1);
  terms.emplace_back(0);
  for (std::size_t n = 1; n <= max_index; ++n) {
    terms.emplace_back(divisor_sum(static_cast<std::int64_t>(n), flavor));
  }
  return SeedSequence(std::move(terms));
}

TransformedSequence t_from_s(const SeedSequence& s) {
  std::vector<Rational> t;
  t.reserve(s.size());
  t.emplace_back(1);
  for (std::size_t n = 1; n < s.size(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += s[n - k] * t[k];
    acc /= static_cast<unsigned long>(n);
    t.push_back(std::move(acc));
  }
  return TransformedSequence(std::move(t));
}

SeedSequence s_from_t(const TransformedSequence& t) {
  std::vector<Rational> s;
  s.reserve(t.size());
  s.emplace_back(0);
  for (std::size_t n = 1; n < t.size(); ++n) {
    Rational acc = t[n] * static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < n; ++k) acc -= s[n - k] * t[k];
    s.push_back(std::move(acc));
  }
  return SeedSequence(std::move(s));
}

std::vector<BigInt> partition_count(std::size_t max_index, DivisorFlavor flavor) {
  const TransformedSequence t = t_from_s(seed_from_flavor(max_index, flavor));
  std::vector<BigInt> out;
  out.reserve(t.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    if (!is_integral(t[n])) {
      throw InternalError("partition count at n = " + std::to_string(n) +
                          " is not integral: " + format_rational(t[n]));
    }
    out.push_back(t[n].get_num());
  }
  return out;
}

}  // namespace partexp
