#pragma once

// Explicit partition enumeration and the two partition-sum closed forms:
//
//   t_n     = sum over partitions of n of prod_{distinct parts h} (s_h / h)^rho / rho!
//   s_n / n = sum over partitions of n of (-1)^{r-1} (r-1)! prod_{distinct h} t_h^rho / rho!
//
// where rho is the multiplicity of h and r the number of summands. Both are
// exponential in n; they exist to cross-check the recurrences, and are
// practical up to n of about 30.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partexp/rational.hpp"
#include "partexp/sequences.hpp"

namespace partexp {

struct PartBlock {
  std::int64_t part;
  std::int64_t multiplicity;

  bool operator==(const PartBlock&) const = default;
};

/// A partition as (part, multiplicity) blocks in strictly decreasing part order.
class Partition {
 public:
  /// Throws std::domain_error unless parts are strictly decreasing and every
  /// part and multiplicity is positive.
  explicit Partition(std::vector<PartBlock> blocks);

  /// Groups a non-increasing list of summands, e.g. {2, 1, 1} -> 2^1 1^2.
  static Partition from_summands(const std::vector<std::int64_t>& summands);

  const std::vector<PartBlock>& blocks() const { return blocks_; }
  std::int64_t total() const { return total_; }
  std::int64_t summand_count() const { return count_; }

  /// Summands in non-increasing order.
  std::vector<std::int64_t> summands() const;
  /// "2+1+1"
  std::string to_string() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<PartBlock> blocks_;
  std::int64_t total_ = 0;
  std::int64_t count_ = 0;
};

/// Every partition of n (with exactly `summands` parts when given) whose parts
/// are all admitted by `filter`; All admits everything. Output is in
/// lexicographically decreasing order of the summand list.
/// Throws std::domain_error for n < 1 or summands < 1.
std::vector<Partition> enumerate_partitions(std::int64_t n,
                                            std::optional<std::int64_t> summands = std::nullopt,
                                            DivisorFlavor filter = DivisorFlavor::all());

/// Number of distinct orderings of the summands: r! / prod rho!.
BigInt ordering_count(const Partition& p);

/// t_n from the seed by summing over partitions of n. Requires 1 <= n < s.size().
Rational eq3_eval(const SeedSequence& s, std::int64_t n);

/// s_n / n from the transform by summing over partitions of n.
/// Requires 1 <= n < t.size().
Rational eq7_eval(const TransformedSequence& t, std::int64_t n);

}  // namespace partexp
