#include "partexp/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace partexp {

std::vector<Rational> parse_sequence_text(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos) {
    lines.pop_back();
  }
  std::vector<Rational> terms;
  terms.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      terms.push_back(parse_rational(lines[i]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (terms.empty()) throw std::invalid_argument("sequence file holds no terms");
  return terms;
}

std::string sequence_to_text(std::span<const Rational> terms) {
  std::string out;
  for (const auto& x : terms) out += format_rational(x) + "\n";
  return out;
}

std::string sequence_to_json(std::span<const Rational> terms) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& x : terms) doc.push_back(format_rational(x));
  return doc.dump();
}

std::vector<Rational> sequence_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sequence JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("sequence JSON must be an array");
  std::vector<Rational> terms;
  for (const auto& item : doc) {
    if (item.is_string()) {
      terms.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      terms.push_back(parse_rational(item.dump()));
    } else {
      throw std::invalid_argument("sequence JSON entries must be strings or integers");
    }
  }
  return terms;
}

}  // namespace partexp
