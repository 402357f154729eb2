#pragma once

// Text forms of sequences.
//
// Sequence file: one rational per line ("num/den" or a bare integer); line k
// holds the term with index k. Trailing blank lines are ignored.
// Sequence JSON: an array of reduced rational strings, ["1", "3/2", ...].

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partexp/rational.hpp"

namespace partexp {

/// Throws std::invalid_argument naming the offending line.
std::vector<Rational> parse_sequence_text(std::string_view text);

std::string sequence_to_text(std::span<const Rational> terms);

std::string sequence_to_json(std::span<const Rational> terms);

/// Accepts strings or integers as array elements.
std::vector<Rational> sequence_from_json(std::string_view text);

}  // namespace partexp
