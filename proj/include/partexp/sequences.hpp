#pragma once

// Divisor-sum generators and the seed <-> transform recurrence
//
//   t_0 = 1,   t_n = (1/n) * sum_{k=0}^{n-1} s_{n-k} t_k,   s_0 = 0.
//
// With s_n = sigma(n) the transform is the partition function p(n); with the
// odd-divisor sum it counts partitions into odd parts, and with divisors not
// divisible by q it counts partitions avoiding multiples of q.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "partexp/rational.hpp"

namespace partexp {

/// Raised when a result that must be integral is not. Signals an arithmetic
/// bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Which divisors of n enter the divisor sum (and, equivalently, which parts a
/// partition may use).
class DivisorFlavor {
 public:
  enum class Kind { All, Odd, NotDivisible };

  static DivisorFlavor all() { return DivisorFlavor(Kind::All, 0); }
  static DivisorFlavor odd() { return DivisorFlavor(Kind::Odd, 0); }
  /// Divisors not divisible by q. Throws std::domain_error for q < 2.
  static DivisorFlavor not_divisible_by(std::int64_t q);

  Kind kind() const { return kind_; }
  /// Modulus of NotDivisible; 0 otherwise.
  std::int64_t modulus() const { return q_; }

  bool admits(std::int64_t d) const {
    switch (kind_) {
      case Kind::All: return true;
      case Kind::Odd: return d % 2 != 0;
      case Kind::NotDivisible: return d % q_ != 0;
    }
    return false;
  }

  bool operator==(const DivisorFlavor&) const = default;

 private:
  DivisorFlavor(Kind kind, std::int64_t q) : kind_(kind), q_(q) {}

  Kind kind_;
  std::int64_t q_;
};

/// s_0..s_N with s_0 = 0.
class SeedSequence {
 public:
  /// Throws std::domain_error when terms is empty or terms[0] != 0.
  explicit SeedSequence(std::vector<Rational> terms);

  std::size_t size() const { return terms_.size(); }
  const Rational& operator[](std::size_t i) const { return terms_[i]; }
  std::span<const Rational> terms() const { return terms_; }

  bool operator==(const SeedSequence&) const = default;

 private:
  std::vector<Rational> terms_;
};

/// t_0..t_N with t_0 = 1.
class TransformedSequence {
 public:
  /// Throws std::domain_error when terms is empty or terms[0] != 1.
  explicit TransformedSequence(std::vector<Rational> terms);

  std::size_t size() const { return terms_.size(); }
  const Rational& operator[](std::size_t i) const { return terms_[i]; }
  std::span<const Rational> terms() const { return terms_; }

  bool operator==(const TransformedSequence&) const = default;

 private:
  std::vector<Rational> terms_;
};

/// Sum of the divisors of n admitted by flavor. Throws std::domain_error for n < 1.
BigInt divisor_sum(std::int64_t n, DivisorFlavor flavor);

/// Sum of reciprocals of the divisors of n, i.e. sigma(n)/n.
Rational sigma_bar(std::int64_t n);

/// [0, sigma_f(1), ..., sigma_f(N)]. Holds sigma_f(n), not sigma_f(n)/n.
SeedSequence seed_from_flavor(std::size_t max_index, DivisorFlavor flavor);

TransformedSequence t_from_s(const SeedSequence& s);

/// Inverse of t_from_s: s_n = n t_n - sum_{k=1}^{n-1} s_{n-k} t_k.
SeedSequence s_from_t(const TransformedSequence& t);

/// [p_f(0), ..., p_f(N)] through the recurrence. Throws InternalError if a
/// term comes out non-integral.
std::vector<BigInt> partition_count(std::size_t max_index, DivisorFlavor flavor);

}  // namespace partexp
