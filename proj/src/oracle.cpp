#include "partexp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace partexp::oracle {

BigInt brute_partition_count(std::int64_t n, DivisorFlavor filter) {
  if (n < 0) return 0;
  // memo[remaining][max_part], local to this call.
  const auto size = static_cast<std::size_t>(n) + 1;
  std::vector<std::vector<std::optional<BigInt>>> memo(size, std::vector<std::optional<BigInt>>(size));
  std::function<BigInt(std::int64_t, std::int64_t)> count = [&](std::int64_t remaining,
                                                                std::int64_t max_part) -> BigInt {
    if (remaining == 0) return 1;
    auto& slot = memo[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(max_part)];
    if (slot) return *slot;
    BigInt total = 0;
    for (std::int64_t h = std::min(remaining, max_part); h >= 1; --h) {
      if (filter.admits(h)) total += count(remaining - h, h);
    }
    slot = total;
    return total;
  };
  return count(n, n);
}

DenseMatrix dense_expand(const BandMatrix& m) {
  const std::size_t order = m.order();
  DenseMatrix out(order, std::vector<Rational>(order));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i; j < order; ++j) out[i][j] = m[j - i];
  }
  return out;
}

namespace {

void require_square(const DenseMatrix& m, const char* who) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::domain_error(std::string(who) + ": matrix not square");
  }
}

}  // namespace

DenseMatrix dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
  require_square(a, "dense_mul");
  require_square(b, "dense_mul");
  if (a.size() != b.size()) throw std::domain_error("dense_mul: size mismatch");
  const std::size_t n = a.size();
  DenseMatrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  }
  return c;
}

DenseMatrix dense_exp(const DenseMatrix& m) {
  require_square(m, "dense_exp");
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (m[i][j] != 0) {
        throw std::domain_error("dense_exp: matrix must be zero on and below the diagonal");
      }
    }
  }
  DenseMatrix result(n, std::vector<Rational>(n));
  DenseMatrix power(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = power[i][i] = 1;
  BigInt fact = 1;
  for (std::size_t r = 1; r < n; ++r) {
    power = dense_mul(power, m);
    fact *= static_cast<unsigned long>(r);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) result[i][j] += power[i][j] / fact;
    }
  }
  return result;
}

std::map<std::vector<std::int64_t>, BigInt> composition_tally(std::int64_t n) {
  std::map<std::vector<std::int64_t>, BigInt> tally;
  if (n < 1) return tally;
  // Bit i of mask set means a cut after position i+1.
  const std::uint64_t masks = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<std::int64_t> parts;
    std::int64_t run = 1;
    for (std::int64_t i = 0; i < n - 1; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    tally[parts] += 1;
  }
  return tally;
}

}  // namespace partexp::oracle
