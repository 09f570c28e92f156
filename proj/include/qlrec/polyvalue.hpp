#pragma once

#include <string>
#include <vector>

#include "qlrec/ratfunc.hpp"

namespace qlrec {

// Dense polynomial in one main variable with RatFunc coefficients, stored as
// numerator coefficients over one shared denominator. The main variable must
// not occur in the coefficients.
class PolyValue {
  public:
    explicit PolyValue(std::string var = "x") : var_(std::move(var)), den_(MultiPoly::constant(1)) {}
    static PolyValue constant(const RatFunc& c, const std::string& var = "x");
    static PolyValue variable(const std::string& var = "x");
    static PolyValue from_coeffs(const std::vector<RatFunc>& coeffs, const std::string& var = "x");

    const std::string& main_var() const { return var_; }
    const std::vector<MultiPoly>& nums() const { return nums_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return nums_.empty(); }
    int degree() const { return static_cast<int>(nums_.size()) - 1; } // -1 for zero
    RatFunc coeff(std::size_t i) const;
    RatFunc leading_coeff() const { return is_zero() ? RatFunc() : coeff(nums_.size() - 1); }

    PolyValue operator-() const;
    friend PolyValue operator+(const PolyValue& a, const PolyValue& b);
    friend PolyValue operator-(const PolyValue& a, const PolyValue& b);
    friend PolyValue operator*(const PolyValue& a, const PolyValue& b);
    PolyValue& operator+=(const PolyValue& o) { return *this = *this + o; }
    PolyValue& operator-=(const PolyValue& o) { return *this = *this - o; }
    PolyValue& operator*=(const PolyValue& o) { return *this = *this * o; }

    PolyValue scaled(const RatFunc& c) const;
    // substitutes main var -> factor * main var (factor free of the main var)
    PolyValue arg_scaled(const RatFunc& factor) const;
    // multiplies by main_var^k (k >= 0)
    PolyValue times_var_pow(int k) const;
    // divides exactly by the main variable; requires zero constant coefficient
    PolyValue div_var() const;

    RatFunc eval(const RatFunc& x) const;
    // collapse to a RatFunc with the main variable as a polynomial symbol
    RatFunc as_ratfunc() const;
    static PolyValue from_ratfunc(const RatFunc& f, const std::string& var);

    // true iff all coefficients are identically zero (exact)
    bool identically_zero() const { return nums_.empty(); }

    std::string str() const;

  private:
    void trim();

    std::string var_;
    std::vector<MultiPoly> nums_; // nums_[i] / den_ is the coefficient of var^i
    MultiPoly den_;
};

} // namespace qlrec
