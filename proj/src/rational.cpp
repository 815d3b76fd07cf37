#include "propa/rational.hpp"

#include <cctype>

namespace propa {

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational fraction_from_string(const std::string& text) {
  const auto bad = [&] {
    return validation_error("not a fraction: '" + text + "' (expected p/q or an integer)");
  };
  if (text.empty()) throw bad();

  const auto parse_int = [&](const std::string& part, bool allow_sign) -> BigInt {
    if (part.empty()) throw bad();
    std::size_t start = 0;
    bool negative = false;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) {
      negative = part[0] == '-';
      start = 1;
    }
    if (start == part.size()) throw bad();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
    }
    BigInt magnitude(part.substr(start));
    return negative ? BigInt(-magnitude) : magnitude;
  };

  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text, true));
  }
  const BigInt num = parse_int(text.substr(0, slash), true);
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw bad();
  return Rational(num, den);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integral(const Rational& value) { return denominator(value) == 1; }

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace propa
