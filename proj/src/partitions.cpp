#include "partexp/partitions.hpp"

#include <stdexcept>
#include <utility>

namespace partexp {

Partition::Partition(std::vector<PartBlock> blocks) : blocks_(std::move(blocks)) {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.part < 1 || b.multiplicity < 1) {
      throw std::domain_error("partition parts and multiplicities must be positive");
    }
    if (i > 0 && blocks_[i - 1].part <= b.part) {
      throw std::domain_error("partition parts must be strictly decreasing");
    }
    total_ += b.part * b.multiplicity;
    count_ += b.multiplicity;
  }
}

Partition Partition::from_summands(const std::vector<std::int64_t>& summands) {
  std::vector<PartBlock> blocks;
  for (auto h : summands) {
    if (!blocks.empty() && blocks.back().part == h) {
      ++blocks.back().multiplicity;
    } else {
      blocks.push_back({h, 1});
    }
  }
  return Partition(std::move(blocks));
}

std::vector<std::int64_t> Partition::summands() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (const auto& b : blocks_) out.insert(out.end(), static_cast<std::size_t>(b.multiplicity), b.part);
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (auto h : summands()) {
    if (!out.empty()) out += '+';
    out += std::to_string(h);
  }
  return out;
}

namespace {

struct Enumerator {
  std::optional<std::int64_t> summands;
  DivisorFlavor filter;
  std::vector<std::int64_t> current;
  std::vector<Partition> out;

  // Largest parts first, so output is lexicographically decreasing.
  void run(std::int64_t remaining, std::int64_t max_part) {
    const auto used = static_cast<std::int64_t>(current.size());
    if (remaining == 0) {
      if (!summands || *summands == used) out.push_back(Partition::from_summands(current));
      return;
    }
    if (summands) {
      const std::int64_t left = *summands - used;
      // Need at least one summand, and left parts of size <= max_part must cover remaining.
      if (left <= 0 || left > remaining || left * max_part < remaining) return;
    }
    for (std::int64_t h = std::min(remaining, max_part); h >= 1; --h) {
      if (!filter.admits(h)) continue;
      current.push_back(h);
      run(remaining - h, h);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<Partition> enumerate_partitions(std::int64_t n, std::optional<std::int64_t> summands,
                                            DivisorFlavor filter) {
  if (n < 1) throw std::domain_error("enumerate_partitions needs n >= 1");
  if (summands && *summands < 1) throw std::domain_error("summand count must be >= 1");
  Enumerator e{summands, filter, {}, {}};
  e.run(n, n);
  return std::move(e.out);
}

BigInt ordering_count(const Partition& p) {
  BigInt out = factorial(static_cast<unsigned long>(p.summand_count()));
  for (const auto& b : p.blocks()) out /= factorial(static_cast<unsigned long>(b.multiplicity));
  return out;
}

namespace {

void check_index(std::int64_t n, std::size_t length, const char* who) {
  if (n < 1 || static_cast<std::size_t>(n) >= length) {
    throw std::domain_error(std::string(who) + ": index " + std::to_string(n) +
                            " outside 1.." + std::to_string(length) + "-1");
  }
}

// prod over blocks of value(h)^rho / rho!
template <typename Value>
Rational block_product(const Partition& p, Value value) {
  Rational prod = 1;
  for (const auto& b : p.blocks()) {
    const Rational base = value(b.part);
    const auto rho = static_cast<unsigned long>(b.multiplicity);
    // Powers of a reduced fraction stay reduced.
    Rational pw;
    mpz_pow_ui(mpq_numref(pw.get_mpq_t()), base.get_num_mpz_t(), rho);
    mpz_pow_ui(mpq_denref(pw.get_mpq_t()), base.get_den_mpz_t(), rho);
    prod *= pw;
    prod /= Rational(factorial(rho));
  }
  return prod;
}

}  // namespace

Rational eq3_eval(const SeedSequence& s, std::int64_t n) {
  check_index(n, s.size(), "eq3_eval");
  Rational total = 0;
  for (const auto& p : enumerate_partitions(n)) {
    total += block_product(p, [&](std::int64_t h) {
      return Rational(s[static_cast<std::size_t>(h)] / static_cast<unsigned long>(h));
    });
  }
  return total;
}

Rational eq7_eval(const TransformedSequence& t, std::int64_t n) {
  check_index(n, t.size(), "eq7_eval");
  Rational total = 0;
  for (const auto& p : enumerate_partitions(n)) {
    const auto r = static_cast<unsigned long>(p.summand_count());
    Rational term = block_product(p, [&](std::int64_t h) { return t[static_cast<std::size_t>(h)]; });
    term *= Rational(factorial(r - 1));
    if (r % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace partexp
