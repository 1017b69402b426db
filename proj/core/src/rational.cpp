#include "mopoly/rational.hpp"

#include <cctype>

#include "mopoly/error.hpp"

namespace mopoly {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw ContractError("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

std::optional<Rational> parse_rational(const std::string& text) {
  auto digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!digits(text, start, text.size())) return std::nullopt;
    return Rational(Integer(text), 1);
  }
  if (!digits(text, start, slash)) return std::nullopt;
  if (!digits(text, slash + 1, text.size())) return std::nullopt;
  Integer den(text.substr(slash + 1));
  if (den == 0) return std::nullopt;
  return make_rational(Integer(text.substr(0, slash)), std::move(den));
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string decimal_approx(const Rational& value, const Rational& width) {
  if (width <= 0) throw ContractError("decimal_approx: width must be > 0");
  // Smallest d >= 0 with 10^-d <= width, i.e. scale * width >= 1.
  int digits = 0;
  Rational scale = 1;
  while (scale * width < 1) {
    scale *= 10;
    ++digits;
  }
  // Nearest integer to value * scale; error <= (1/2) 10^-d <= width.
  Rational scaled = value * scale;
  Integer twice_num = 2 * scaled.get_num() + scaled.get_den();
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), twice_num.get_mpz_t(),
             Integer(2 * scaled.get_den()).get_mpz_t());

  bool negative = rounded < 0;
  Integer mag = abs(rounded);
  std::string s = mag.get_str();
  if (digits == 0) return (negative ? "-" : "") + s;
  if (s.size() <= static_cast<size_t>(digits))
    s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

}  // namespace mopoly
