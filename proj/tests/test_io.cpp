#include <gtest/gtest.h>

#include <random>

#include "partexp/io.hpp"
#include "partexp/random_sequences.hpp"

using namespace partexp;

TEST(SequenceText, ParsesOneTermPerLine) {
  const auto terms = parse_sequence_text("0\n1\n3/2\n-4\n\n\n");
  EXPECT_EQ(terms, (std::vector<Rational>{0, 1, Rational(3, 2), -4}));
  EXPECT_EQ(parse_sequence_text("1\r\n2\r\n"), (std::vector<Rational>{1, 2}));
}

TEST(SequenceText, ReportsBadLine) {
  try {
    parse_sequence_text("0\n1\nx\n");
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_sequence_text("0\n\n1\n"), std::invalid_argument);
  EXPECT_THROW(parse_sequence_text("\n\n"), std::invalid_argument);
}

TEST(SequenceJson, Format) {
  const std::vector<Rational> terms{1, Rational(3, 2), -4};
  EXPECT_EQ(sequence_to_json(terms), R"(["1","3/2","-4"])");
  EXPECT_EQ(sequence_to_text(terms), "1\n3/2\n-4\n");
}

TEST(SequenceJson, RoundTrip) {
  std::mt19937_64 rng(17);
  for (std::size_t len = 1; len <= 30; ++len) {
    const auto s = random_seed(rng, len);
    const std::vector<Rational> terms(s.terms().begin(), s.terms().end());
    EXPECT_EQ(sequence_from_json(sequence_to_json(terms)), terms);
    EXPECT_EQ(parse_sequence_text(sequence_to_text(terms)), terms);
  }
}

TEST(SequenceJson, AcceptsIntegersRejectsOthers) {
  EXPECT_EQ(sequence_from_json("[1, \"1/2\"]"), (std::vector<Rational>{1, Rational(1, 2)}));
  EXPECT_THROW(sequence_from_json("[1.5]"), std::invalid_argument);
  EXPECT_THROW(sequence_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(sequence_from_json("[1,"), std::invalid_argument);
}
