#include "partexp/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>

#include "partexp/oracle.hpp"
#include "partexp/partitions.hpp"
#include "partexp/random_sequences.hpp"
#include "partexp/sequences.hpp"

namespace partexp {

namespace {

using Witness = std::optional<std::string>;

struct Check {
  std::string name;
  std::function<Witness(const VerifyConfig&, std::mt19937_64&)> run;
};

std::vector<DivisorFlavor> flavors_with(std::initializer_list<std::int64_t> moduli) {
  std::vector<DivisorFlavor> out{DivisorFlavor::all(), DivisorFlavor::odd()};
  for (auto q : moduli) out.push_back(DivisorFlavor::not_divisible_by(q));
  return out;
}

std::string flavor_name(const DivisorFlavor& f) {
  switch (f.kind()) {
    case DivisorFlavor::Kind::All: return "ALL";
    case DivisorFlavor::Kind::Odd: return "ODD";
    case DivisorFlavor::Kind::NotDivisible: return "NOT_DIV(" + std::to_string(f.modulus()) + ")";
  }
  return "?";
}

std::string mismatch(const std::string& where, std::size_t index, const Rational& expected,
                     const Rational& got) {
  std::ostringstream os;
  os << where << ": index " << index << " expected " << format_rational(expected) << " got "
     << format_rational(got);
  return os.str();
}

// Divisor-flavored seeds of the given length followed by `randomized` random ones
// with lengths in 1..max_length.
std::vector<std::pair<std::string, SeedSequence>> seed_corpus(std::mt19937_64& rng,
                                                              std::size_t flavored_length,
                                                              std::size_t max_length,
                                                              int randomized) {
  std::vector<std::pair<std::string, SeedSequence>> out;
  for (const auto& f : flavors_with({3})) {
    out.emplace_back("seed " + flavor_name(f), seed_from_flavor(flavored_length - 1, f));
  }
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  for (int i = 0; i < randomized; ++i) {
    out.emplace_back("random seed #" + std::to_string(i), random_seed(rng, len(rng)));
  }
  return out;
}

Witness round_trip(const VerifyConfig&, std::mt19937_64& rng) {
  for (const auto& [label, s] : seed_corpus(rng, 50, 50, 100)) {
    const SeedSequence back = s_from_t(t_from_s(s));
    for (std::size_t n = 0; n < s.size(); ++n) {
      if (back[n] != s[n]) return mismatch(label, n, s[n], back[n]);
    }
  }
  return std::nullopt;
}

Witness integrality(const VerifyConfig& c, std::mt19937_64&) {
  for (const auto& f : flavors_with({2, 3, 5, 7})) {
    try {
      partition_count(static_cast<std::size_t>(c.recurrence_n), f);
    } catch (const InternalError& e) {
      return flavor_name(f) + ": " + e.what();
    }
  }
  return std::nullopt;
}

Witness divisor_recurrence(const VerifyConfig& c, std::mt19937_64&) {
  for (const auto& f : flavors_with({2, 3, 5, 7})) {
    const auto p = partition_count(static_cast<std::size_t>(c.recurrence_n), f);
    for (std::int64_t n = 1; n <= c.recurrence_n; ++n) {
      BigInt rhs = 0;
      for (std::int64_t h = 1; h <= n; ++h) rhs += divisor_sum(h, f) * p[static_cast<std::size_t>(n - h)];
      const BigInt lhs = p[static_cast<std::size_t>(n)] * n;
      if (lhs != rhs) {
        return flavor_name(f) + ": n = " + std::to_string(n) + " n*p(n) = " + lhs.get_str() +
               " but divisor sum side = " + rhs.get_str();
      }
    }
  }
  return std::nullopt;
}

Witness flavor_consistency(const VerifyConfig&, std::mt19937_64&) {
  const auto not2 = DivisorFlavor::not_divisible_by(2);
  for (std::int64_t n = 1; n <= 500; ++n) {
    if (divisor_sum(n, not2) != divisor_sum(n, DivisorFlavor::odd())) {
      return "n = " + std::to_string(n) + ": NOT_DIV(2) and ODD divisor sums differ";
    }
  }
  return std::nullopt;
}

Witness monotone_growth(const VerifyConfig& c, std::mt19937_64&) {
  for (const auto& f : flavors_with({2, 3, 5, 7})) {
    const auto p = partition_count(static_cast<std::size_t>(c.recurrence_n), f);
    for (std::size_t n = 2; n < p.size(); ++n) {
      if (p[n] < p[n - 1]) return flavor_name(f) + ": p(" + std::to_string(n) + ") < p(n-1)";
    }
  }
  return std::nullopt;
}

Witness exp_matches_recurrence(const VerifyConfig& c, std::mt19937_64& rng) {
  const std::size_t order = std::max<std::size_t>(c.order, 1);
  // Flavored seeds at length 50, random ones up to the configured order.
  for (const auto& [label, s] : seed_corpus(rng, 50, order, 200)) {
    const std::size_t n = s.size();
    const BandMatrix t = toeplitz_exp(seed_matrix(s, n), c.product);
    const TransformedSequence expected = t_from_s(s);
    for (std::size_t k = 0; k < n; ++k) {
      if (t[k] != expected[k]) return mismatch(label, k, expected[k], t[k]);
    }
  }
  return std::nullopt;
}

Witness toeplitz_closure(const VerifyConfig& c, std::mt19937_64& rng) {
  for (std::size_t order = 1; order <= c.order; ++order) {
    for (int trial = 0; trial < 5; ++trial) {
      const BandMatrix a = random_band(rng, order, false);
      const BandMatrix b = random_band(rng, order, false);
      const auto dense = oracle::dense_mul(oracle::dense_expand(a), oracle::dense_expand(b));
      if (dense != oracle::dense_expand(c.product(a, b))) {
        return "order " + std::to_string(order) + ": band product differs from dense product";
      }
    }
  }
  return std::nullopt;
}

Witness nilpotency(const VerifyConfig& c, std::mt19937_64& rng) {
  for (std::size_t order = 1; order <= std::min<std::size_t>(c.order, 10); ++order) {
    const auto s = oracle::dense_expand(random_band(rng, order, true));
    auto power = oracle::dense_expand(BandMatrix::identity(order));
    for (std::size_t r = 1; r <= order; ++r) {
      power = oracle::dense_mul(power, s);
      for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order && j < i + r; ++j) {
          if (power[i][j] != 0) {
            return "order " + std::to_string(order) + ": S^" + std::to_string(r) + " nonzero at (" +
                   std::to_string(i) + ", " + std::to_string(j) + ")";
          }
        }
      }
    }
  }
  return std::nullopt;
}

Witness exp_log_inverse(const VerifyConfig& c, std::mt19937_64& rng) {
  for (std::size_t order = 1; order <= std::max<std::size_t>(c.order, 1); ++order) {
    const BandMatrix s = random_band(rng, order, true);
    const BandMatrix s_back = toeplitz_log(toeplitz_exp(s, c.product), c.product);
    for (std::size_t k = 0; k < order; ++k) {
      if (s_back[k] != s[k]) return mismatch("log(exp(S)) order " + std::to_string(order), k, s[k], s_back[k]);
    }
    const BandMatrix t = toeplitz_exp(seed_matrix(s_from_t(random_transform(rng, order)), order), c.product);
    const BandMatrix t_back = toeplitz_exp(toeplitz_log(t, c.product), c.product);
    for (std::size_t k = 0; k < order; ++k) {
      if (t_back[k] != t[k]) return mismatch("exp(log(T)) order " + std::to_string(order), k, t[k], t_back[k]);
    }
  }
  return std::nullopt;
}

Witness diagonal_independence(const VerifyConfig& c, std::mt19937_64& rng) {
  const std::size_t order = std::max<std::size_t>(c.order, 1);
  std::vector<SeedSequence> seeds{seed_from_flavor(order - 1, DivisorFlavor::all()),
                                  random_seed(rng, order)};
  for (const auto& s : seeds) {
    const auto dense = oracle::dense_exp(oracle::dense_expand(seed_matrix(s, order)));
    for (std::size_t n = 0; n < order; ++n) {
      for (std::size_t i = 1; i + n < order; ++i) {
        if (dense[i][i + n] != dense[0][n]) {
          return mismatch("entry (" + std::to_string(i) + ", " + std::to_string(i + n) + ")", n,
                          dense[0][n], dense[i][i + n]);
        }
      }
    }
  }
  return std::nullopt;
}

Witness partition_sum_formula(const VerifyConfig& c, std::mt19937_64& rng) {
  const auto len = static_cast<std::size_t>(c.max_n) + 1;
  for (const auto& [label, s] : seed_corpus(rng, len, len, 10)) {
    const TransformedSequence t = t_from_s(s);
    for (std::size_t n = 1; n < s.size(); ++n) {
      const Rational v = eq3_eval(s, static_cast<std::int64_t>(n));
      if (v != t[n]) return mismatch(label, n, t[n], v);
    }
  }
  return std::nullopt;
}

Witness partition_sum_recurrence(const VerifyConfig& c, std::mt19937_64& rng) {
  const auto len = static_cast<std::size_t>(c.max_n) + 1;
  for (const auto& [label, s] : seed_corpus(rng, len, len, 3)) {
    std::vector<Rational> tau{Rational(1)};
    for (std::size_t n = 1; n < s.size(); ++n) tau.push_back(eq3_eval(s, static_cast<std::int64_t>(n)));
    for (std::size_t big = 1; big < s.size(); ++big) {
      Rational rhs = 0;
      for (std::size_t n = 0; n < big; ++n) rhs += s[big - n] * tau[n];
      rhs /= static_cast<unsigned long>(big);
      if (rhs != tau[big]) return mismatch(label, big, rhs, tau[big]);
    }
  }
  return std::nullopt;
}

Witness inverse_partition_sum(const VerifyConfig& c, std::mt19937_64& rng) {
  const auto len = static_cast<std::size_t>(c.max_n) + 1;
  std::vector<std::pair<std::string, TransformedSequence>> corpus;
  for (const auto& f : flavors_with({3})) {
    const auto p = partition_count(len - 1, f);
    corpus.emplace_back("p " + flavor_name(f), TransformedSequence({p.begin(), p.end()}));
  }
  for (int i = 0; i < 10; ++i) corpus.emplace_back("random t #" + std::to_string(i), random_transform(rng, len));
  for (const auto& [label, t] : corpus) {
    const SeedSequence s = s_from_t(t);
    for (std::size_t n = 1; n < t.size(); ++n) {
      const Rational v = eq7_eval(t, static_cast<std::int64_t>(n)) * static_cast<unsigned long>(n);
      if (v != s[n]) return mismatch(label, n, s[n], v);
    }
  }
  return std::nullopt;
}

Witness counting_consistency(const VerifyConfig& c, std::mt19937_64&) {
  const std::int64_t bound = std::min<std::int64_t>(c.max_n, 30);
  for (const auto& f : flavors_with({3, 5})) {
    const auto p = partition_count(static_cast<std::size_t>(bound), f);
    for (std::int64_t n = 1; n <= bound; ++n) {
      const auto expected = p[static_cast<std::size_t>(n)];
      if (expected != enumerate_partitions(n, std::nullopt, f).size()) {
        return flavor_name(f) + ": n = " + std::to_string(n) + " enumeration count differs";
      }
      if (f.kind() == DivisorFlavor::Kind::All) {
        std::size_t by_r = 0;
        for (std::int64_t r = 1; r <= n; ++r) by_r += enumerate_partitions(n, r).size();
        if (expected != by_r) return "n = " + std::to_string(n) + ": sum over r of |X_r(n)| differs";
      }
    }
  }
  return std::nullopt;
}

Witness multinomial(const VerifyConfig& c, std::mt19937_64&) {
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(c.max_n, 12); ++n) {
    const auto tally = oracle::composition_tally(n);
    for (const auto& p : enumerate_partitions(n)) {
      const auto it = tally.find(p.summands());
      const BigInt seen = it == tally.end() ? BigInt(0) : it->second;
      if (seen != ordering_count(p)) {
        return p.to_string() + ": " + seen.get_str() + " compositions, r!/prod rho! = " +
               ordering_count(p).get_str();
      }
    }
  }
  return std::nullopt;
}

Witness oracle_counting(const VerifyConfig& c, std::mt19937_64&) {
  for (const auto& f : flavors_with({2, 3, 4, 5, 6, 7})) {
    const auto p = partition_count(static_cast<std::size_t>(c.oracle_count_n), f);
    for (std::int64_t n = 0; n <= c.oracle_count_n; ++n) {
      const BigInt brute = oracle::brute_partition_count(n, f);
      if (brute != p[static_cast<std::size_t>(n)]) {
        return flavor_name(f) + ": n = " + std::to_string(n) + " brute " + brute.get_str() +
               " recurrence " + p[static_cast<std::size_t>(n)].get_str();
      }
    }
  }
  return std::nullopt;
}

Witness oracle_exponential(const VerifyConfig& c, std::mt19937_64& rng) {
  for (std::size_t order = 1; order <= c.order; ++order) {
    const BandMatrix s = random_band(rng, order, true);
    if (oracle::dense_exp(oracle::dense_expand(s)) != oracle::dense_expand(toeplitz_exp(s, c.product))) {
      return "order " + std::to_string(order) + ": dense exp differs from band exp";
    }
  }
  return std::nullopt;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"seed/transform round trip", round_trip},
      {"integrality of partition counts", integrality},
      {"divisor-sum recurrence identity", divisor_recurrence},
      {"flavor consistency NOT_DIV(2) = ODD", flavor_consistency},
      {"monotone growth", monotone_growth},
      {"Theorem 1 equivalence", exp_matches_recurrence},
      {"Toeplitz closure", toeplitz_closure},
      {"nilpotency", nilpotency},
      {"exp/log inverse pair", exp_log_inverse},
      {"diagonal-distance independence", diagonal_independence},
      {"partition-sum formula for t_n", partition_sum_formula},
      {"partition-sum formula satisfies the recurrence", partition_sum_recurrence},
      {"inverse partition-sum formula for s_n", inverse_partition_sum},
      {"counting consistency", counting_consistency},
      {"multinomial coefficient", multinomial},
      {"oracle agreement: counting", oracle_counting},
      {"oracle agreement: exponential", oracle_exponential},
  };
  return all;
}

CheckResult run_one(const Check& check, const VerifyConfig& config, std::size_t index) {
  std::mt19937_64 rng(config.rng_seed + index);
  CheckResult result{check.name, true, {}};
  try {
    if (auto witness = check.run(config, rng)) {
      result.passed = false;
      result.witness = *witness;
    }
  } catch (const std::exception& e) {
    result.passed = false;
    result.witness = std::string("exception: ") + e.what();
  }
  return result;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  const auto& all = checks();
  std::vector<CheckResult> results;
  results.reserve(all.size());
  if (!config.parallel) {
    for (std::size_t i = 0; i < all.size(); ++i) results.push_back(run_one(all[i], config, i));
    return results;
  }
  std::vector<std::future<CheckResult>> pending;
  pending.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    pending.push_back(std::async(std::launch::async, run_one, std::cref(all[i]), std::cref(config), i));
  }
  for (auto& f : pending) results.push_back(f.get());
  return results;
}

}  // namespace partexp
