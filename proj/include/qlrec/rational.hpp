#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qlrec/error.hpp"

namespace qlrec {

// Arbitrary-precision rational. Always reduced, denominator > 0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v);

    // Parses "p", "p/q" or "-p/q". Returns nullopt on malformed input or zero denominator.
    static std::optional<Rational> parse(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational pow(long e) const;

    // "p/q" (or "p" when the denominator is 1).
    std::string str() const;
    // Decimal rendering with the given number of significant digits. Cosmetic only.
    std::string decimal(int significant_digits = 30) const;

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// gcd of |a|,|b| as nonnegative integers (gcd(0,0) = 0).
mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

} // namespace qlrec
