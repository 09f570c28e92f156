#pragma once

#include <map>
#include <string>

#include "qlrec/multipoly.hpp"

namespace qlrec {

// Rational function num/den over MultiPoly.
//
// Not kept fully reduced (no multivariate gcd). Normalization: the denominator is
// a genuine polynomial (min exponent 0 per variable), primitive with integer
// coprime coefficients, and has positive leading coefficient; common rational and
// monomial content is folded into the numerator. Equality is decided by
// cross-multiplication.
class RatFunc {
  public:
    RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
    RatFunc(const Rational& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(1)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    Rational eval(const std::map<std::string, Rational>& bindings) const;
    bool depends_on(const std::string& var) const {
        return num_.depends_on(var) || den_.depends_on(var);
    }

    std::string str() const;

  private:
    void normalize();

    MultiPoly num_, den_;
};

// Exact equality of values: a.num * b.den == b.num * a.den.
bool ratfunc_eq(const RatFunc& a, const RatFunc& b);

// Simultaneous substitution of variables by rational functions. Unbound
// variables stay. Throws DivisionByZero when a binding makes a negative power
// of zero or a vanishing denominator.
RatFunc substitute(const MultiPoly& p, const std::map<std::string, RatFunc>& bindings);
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& bindings);

inline RatFunc operator*(const Rational& c, const RatFunc& f) { return RatFunc(c) * f; }

} // namespace qlrec
