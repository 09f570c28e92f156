#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlrec/rational.hpp"

namespace qlrec {

// Exponent vector aligned to a variable list. Negative exponents allowed (Laurent).
using Exponents = std::vector<int32_t>;

// Graded lexicographic order: first by total degree, then lexicographically.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate Laurent polynomial over Rational.
//
// Canonical form: variable list sorted and deduplicated, no zero coefficients,
// no variable with all-zero exponents. Two values are equal iff their variable
// lists and term maps are identical.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLex>;

    MultiPoly() = default; // zero
    static MultiPoly constant(const Rational& c);
    static MultiPoly constant(long c) { return constant(Rational(c)); }
    static MultiPoly var(const std::string& name, int32_t exp = 1);
    static MultiPoly monomial(const Rational& coeff,
                              const std::vector<std::pair<std::string, int32_t>>& pows);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (vars_.empty() && terms_.size() == 1); }
    Rational constant_value() const; // requires is_constant()
    bool is_one() const { return is_constant() && !is_zero() && constant_value().is_one(); }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Leading term in graded lex order.
    const std::pair<const Exponents, Rational>& leading() const;
    Rational leading_coeff() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    // Exact division; nullopt when q does not divide p.
    static std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q);

    // Positive rational c such that (*this)/c has coprime integer coefficients.
    Rational content() const; // requires !is_zero()
    // this / (content * sign of leading coefficient)
    MultiPoly primitive_part() const;

    int32_t degree_in(const std::string& var) const;   // 0 for absent var or zero poly
    int32_t min_exponent_in(const std::string& var) const;
    // Coefficients of powers of `var` (each free of `var`); empty map for zero.
    std::map<int32_t, MultiPoly> coefficients_in(const std::string& var) const;
    MultiPoly coefficient_of(const std::string& var, int32_t power) const;

    // Multiplies by the monomial prod var_i^{e_i}.
    MultiPoly shifted(const std::vector<std::pair<std::string, int32_t>>& pows) const;

    bool depends_on(const std::string& var) const;

    // Full evaluation; every variable must be bound. Throws DivisionByZero when a
    // negative exponent meets a zero value.
    Rational eval(const std::map<std::string, Rational>& bindings) const;

    std::string str() const;

    // Builds a canonical value from raw parts (normalizes).
    static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

    friend std::vector<std::string> align_universe(MultiPoly& a, MultiPoly& b);

  private:
    void normalize();

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Aligns both polynomials to the union variable list; returns the shared list.
std::vector<std::string> align_universe(MultiPoly& a, MultiPoly& b);

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p.scaled(c); }

} // namespace qlrec
