// Acceptance suite: one test per exit criterion, exact comparisons throughout.
// A summary line per criterion is printed after the run.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "partexp/cli.hpp"
#include "partexp/oracle.hpp"
#include "partexp/partitions.hpp"
#include "partexp/random_sequences.hpp"
#include "partexp/sequences.hpp"
#include "partexp/toeplitz.hpp"

using namespace partexp;

namespace {

// Published tables for n = 1..20: partitions into odd parts, odd-divisor sums.
const long kOddPartitions[] = {1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32, 38, 46, 54, 64};
const long kOddDivisorSums[] = {1, 1, 4, 1, 6, 4, 8, 1, 13, 6, 12, 4, 14, 8, 24, 1, 18, 13, 20, 6};

// First row of the displayed 7x7 matrices.
const long kPartitionRow[] = {1, 1, 2, 3, 5, 7, 11};
const Rational kSigmaBarRow[] = {0, 1, Rational(3, 2), Rational(4, 3), Rational(7, 4), Rational(6, 5), make_rational(12, 6)};

std::vector<DivisorFlavor> all_flavors() {
  std::vector<DivisorFlavor> out{DivisorFlavor::all(), DivisorFlavor::odd()};
  for (std::int64_t q = 2; q <= 7; ++q) out.push_back(DivisorFlavor::not_divisible_by(q));
  return out;
}

BandMatrix delta(std::size_t order) { return seed_matrix(seed_from_flavor(order, DivisorFlavor::all()), order); }

TransformedSequence as_transform(const std::vector<BigInt>& p) { return TransformedSequence({p.begin(), p.end()}); }

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(PARTEXP_GOLDEN_DIR) / name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cli(std::vector<std::string> args, std::string* out = nullptr, const CliHooks& hooks = {}) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e, hooks);
  if (out) *out = o.str();
  return code;
}

BandMatrix faulty_mul(const BandMatrix& a, const BandMatrix& b) {
  const BandMatrix good = band_mul(a, b);
  std::vector<Rational> band(good.band().begin(), good.band().end());
  if (band.size() > 1) band.back() += 1;
  return BandMatrix(std::move(band));
}

}  // namespace

TEST(Acceptance, C1_ExpOfSigmaBarMatrixIsPartitionMatrix) {
  const BandMatrix d = delta(7);
  for (std::size_t n = 0; n < 7; ++n) EXPECT_EQ(d[n], kSigmaBarRow[n]) << n;

  const BandMatrix p = toeplitz_exp(d);
  for (std::size_t n = 0; n < 7; ++n) EXPECT_EQ(p[n], kPartitionRow[n]) << n;

  const auto dense_p = oracle::dense_exp(oracle::dense_expand(d));
  EXPECT_EQ(dense_p, oracle::dense_expand(p));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      EXPECT_EQ(dense_p[i][j], j >= i ? Rational(kPartitionRow[j - i]) : Rational(0)) << i << "," << j;
    }
  }
}

TEST(Acceptance, C2_OddPartTables) {
  const auto p = partition_count(20, DivisorFlavor::odd());
  EXPECT_EQ(p[0], 1);
  for (int n = 1; n <= 20; ++n) {
    EXPECT_EQ(p[n], kOddPartitions[n - 1]) << n;
    EXPECT_EQ(divisor_sum(n, DivisorFlavor::odd()), kOddDivisorSums[n - 1]) << n;
  }
}

TEST(Acceptance, C3_ExpOfSeedMatrixMatchesRecurrence) {
  std::mt19937_64 rng(1003);
  std::uniform_int_distribution<std::size_t> len(1, 30);
  std::vector<SeedSequence> seeds;
  for (int i = 0; i < 200; ++i) seeds.push_back(random_seed(rng, len(rng)));
  for (const auto& f : {DivisorFlavor::all(), DivisorFlavor::odd(), DivisorFlavor::not_divisible_by(3)}) {
    seeds.push_back(seed_from_flavor(49, f));
  }
  for (const auto& s : seeds) {
    const BandMatrix t = toeplitz_exp(seed_matrix(s, s.size()));
    const auto expected = t_from_s(s);
    for (std::size_t n = 0; n < s.size(); ++n) ASSERT_EQ(t[n], expected[n]) << "length " << s.size() << " n " << n;
  }
}

TEST(Acceptance, C4_PartitionSumFormulaForTransform) {
  std::mt19937_64 rng(1004);
  std::vector<SeedSequence> seeds;
  for (const auto& f : all_flavors()) seeds.push_back(seed_from_flavor(25, f));
  for (int i = 0; i < 50; ++i) seeds.push_back(random_seed(rng, 26));
  for (const auto& s : seeds) {
    const auto t = t_from_s(s);
    std::vector<Rational> tau{Rational(1)};
    for (std::int64_t n = 1; n <= 25; ++n) {
      tau.push_back(eq3_eval(s, n));
      ASSERT_EQ(tau.back(), t[n]) << n;
    }
    for (std::size_t big = 1; big <= 25; ++big) {
      Rational rhs = 0;
      for (std::size_t n = 0; n < big; ++n) rhs += s[big - n] * tau[n];
      rhs /= static_cast<unsigned long>(big);
      ASSERT_EQ(tau[big], rhs) << big;
    }
  }
}

TEST(Acceptance, C5_InversePartitionSumAndLogOfExp) {
  std::mt19937_64 rng(1005);
  std::vector<TransformedSequence> ts;
  for (const auto& f : all_flavors()) ts.push_back(as_transform(partition_count(25, f)));
  for (int i = 0; i < 50; ++i) ts.push_back(random_transform(rng, 26));
  for (const auto& t : ts) {
    const auto s = s_from_t(t);
    for (std::int64_t n = 1; n <= 25; ++n) ASSERT_EQ(eq7_eval(t, n) * n, s[n]) << n;
  }
  for (std::size_t order = 1; order <= 30; ++order) {
    for (int trial = 0; trial < 3; ++trial) {
      const BandMatrix s = random_band(rng, order, true);
      ASSERT_EQ(toeplitz_log(toeplitz_exp(s)), s) << order;
    }
  }
}

TEST(Acceptance, C6_OracleEquivalence) {
  for (const auto& f : all_flavors()) {
    const auto p = partition_count(40, f);
    for (std::int64_t n = 0; n <= 40; ++n) ASSERT_EQ(oracle::brute_partition_count(n, f), p[n]) << n;
  }
  std::mt19937_64 rng(1006);
  for (std::size_t order = 1; order <= 12; ++order) {
    for (int trial = 0; trial < 4; ++trial) {
      const BandMatrix s = random_band(rng, order, true);
      ASSERT_EQ(oracle::dense_exp(oracle::dense_expand(s)), oracle::dense_expand(toeplitz_exp(s))) << order;
    }
  }
}

TEST(Acceptance, C7_DivisorSumRecurrenceIdentities) {
  std::vector<DivisorFlavor> flavors{DivisorFlavor::all(), DivisorFlavor::odd()};
  for (std::int64_t q : {2, 3, 5, 7}) flavors.push_back(DivisorFlavor::not_divisible_by(q));
  for (const auto& f : flavors) {
    const auto p = partition_count(200, f);
    for (std::int64_t n = 1; n <= 200; ++n) {
      BigInt rhs = 0;
      for (std::int64_t h = 1; h <= n; ++h) rhs += divisor_sum(h, f) * p[n - h];
      ASSERT_EQ(p[n] * n, rhs) << n;
    }
  }
}

TEST(Acceptance, C8_OrderingCountsAreMultinomial) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    const auto tally = oracle::composition_tally(n);
    for (const auto& p : enumerate_partitions(n)) {
      ASSERT_EQ(tally.at(p.summands()), ordering_count(p)) << p.to_string();
    }
  }
}

TEST(Acceptance, C9_CliContract) {
  std::string out;
  EXPECT_EQ(cli({"verify"}, &out), 0) << out;

  EXPECT_EQ(cli({"table", "--kind", "p", "--n", "6"}, &out), 0);
  EXPECT_EQ(out, golden("table_p_6.txt"));
  EXPECT_EQ(cli({"table", "--kind", "p", "--odd", "--n", "20"}, &out), 0);
  EXPECT_EQ(out, golden("table_p_odd_20.txt"));
  EXPECT_EQ(cli({"table", "--kind", "sigma", "--odd", "--n", "20"}, &out), 0);
  EXPECT_EQ(out, golden("table_sigma_odd_20.txt"));
  EXPECT_EQ(cli({"exp", "--seed", "sigma", "--order", "7"}, &out), 0);
  EXPECT_EQ(out, golden("exp_sigma_7.txt"));
  EXPECT_EQ(cli({"exp", "--seed", "sigma-odd", "--order", "11"}, &out), 0);
  EXPECT_EQ(out, golden("exp_sigma_odd_11.txt"));

  EXPECT_EQ(cli({"verify", "--max-n", "12", "--order", "8"}, &out, CliHooks{faulty_mul}), 1);
  EXPECT_NE(out.find("FAIL  Theorem 1 equivalence"), std::string::npos) << out;
}

namespace {

class CriterionSummary : public ::testing::EmptyTestEventListener {
 public:
  void OnTestEnd(const ::testing::TestInfo& info) override {
    lines_.push_back(std::string(info.result()->Passed() ? "PASS" : "FAIL") + "  " + info.name());
  }
  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::cout << "\nacceptance criteria:\n";
    for (const auto& line : lines_) std::cout << "  " << line << '\n';
  }

 private:
  std::vector<std::string> lines_;
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new CriterionSummary);
  return RUN_ALL_TESTS();
}
