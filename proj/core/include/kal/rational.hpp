#ifndef KAL_RATIONAL_HPP
#define KAL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "kal/error.hpp"

namespace kal {

/// Arbitrary-precision exact fraction. Every numeric quantity in the system
/// is one of these; there is no floating point on any verification path.
///
/// The value is always stored in lowest terms with a positive denominator
/// (GMP canonical form). Arithmetic, comparison and floor are exact.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(unsigned long n) : v_(n) {} // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}         // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "±int" or "±int/±int" (base 10, no whitespace). Signs on either
  /// part are accepted and normalized; "1.5" and friends are rejected.
  static Rational parse(std::string_view text);

  /// Canonical serialization "num/den" (always includes the denominator,
  /// e.g. "0/1", "176/1", "-8/13"). parse(str()) round-trips exactly.
  std::string str() const;

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  /// ⌊num/den⌋, rounding toward −∞ (so (-7/2).floor_int() == -4).
  mpz_class floor_int() const;
  /// ⌈num/den⌉, rounding toward +∞.
  mpz_class ceil_int() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpq_class v_;
};

/// r^e for e ≥ 0, by repeated multiplication (exact).
Rational pow(const Rational& r, unsigned long e);

} // namespace kal

#endif // KAL_RATIONAL_HPP
