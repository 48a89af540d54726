#include "lpat/bigint.hpp"

#include "lpat/errors.hpp"

#include <cctype>

namespace lpat {

BigInt isqrt(const BigInt& v) {
  if (sgn(v) < 0) throw DomainError("isqrt: negative argument");
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), v.get_mpz_t());
  return s;
}

BigInt pow2(std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

BigInt parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw DomainError("malformed rational: '" + std::string(whole) + "'");
  }
  return BigInt(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, text));
  return make_rational(parse_natural(text.substr(0, slash), text),
                       parse_natural(text.substr(slash + 1), text));
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int places) {
  const bool negative = sgn(q) < 0;
  Rational a = negative ? Rational(-q) : q;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round half up on the scaled magnitude
  BigInt scaled = (2 * a.get_num() * scale + a.get_den()) / (2 * a.get_den());
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (places > 0) {
    std::string f = frac.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace lpat
