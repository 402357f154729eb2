#include "partexp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace partexp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  const std::string_view body = trim(text);
  std::string_view num = body;
  std::string_view den = "1";
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num = trim(body.substr(0, slash));
    den = trim(body.substr(slash + 1));
  }
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  const BigInt d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

std::string format_rational_full(const Rational& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace partexp
