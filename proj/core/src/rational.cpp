#include "kal/rational.hpp"

#include <cctype>

namespace kal {

namespace {

// Validates "±digits" and returns an mpz. ParseError on anything else.
mpz_class parse_integer_part(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    throw ParseError("rational: missing digits in '" + std::string(whole) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("rational: invalid character in '" + std::string(whole) + "'");
  }
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

} // namespace

Rational::Rational(long n, long d) {
  if (d == 0) throw ParamError("rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw ParamError("rational: zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("rational: empty string");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpz_class(parse_integer_part(text, text)));
  }
  const mpz_class num = parse_integer_part(text.substr(0, slash), text);
  const mpz_class den = parse_integer_part(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("rational: zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ParamError("rational: division by zero");
  v_ /= o.v_;
  return *this;
}

mpz_class Rational::floor_int() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

mpz_class Rational::ceil_int() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational pow(const Rational& r, unsigned long e) {
  Rational acc(1);
  Rational base = r;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

} // namespace kal
