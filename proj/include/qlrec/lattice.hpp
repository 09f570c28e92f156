#pragma once

#include <optional>

#include "qlrec/polyvalue.hpp"
#include "qlrec/ratfunc.hpp"

namespace qlrec {

// Reserved symbol names. t = q^{1/2}, u = q^{nu/2} for the symbolic base index,
// X = q^z, S = q^s. Half-integer powers of q are integer powers of t.
inline const std::string sym_t = "t";
inline const std::string sym_u = "u";
inline const std::string sym_X = "X";
inline const std::string sym_S = "S";

// Index of the form nu_base + offset, where nu_base is the shared symbolic base
// (carried by u) or absent. q^{value/2} = u^{symbolic} * t^{offset}.
struct NuIndex {
    bool symbolic = false;
    int offset = 0;

    static NuIndex integer(int n) { return {false, n}; }
    static NuIndex sym(int off = 0) { return {true, off}; }
    NuIndex operator+(int d) const { return {symbolic, offset + d}; }
    NuIndex operator-(int d) const { return {symbolic, offset - d}; }
};

// q^{k/2} as a Laurent monomial in (u, t).
RatFunc qpow_half(NuIndex k);
// q^{k} = qpow_half(k)^2
RatFunc qpow(NuIndex k);

// Symmetric q-number [k]_q = (q^{k/2} - q^{-k/2})/(q^{1/2} - q^{-1/2}).
RatFunc q_number(NuIndex k);
// alpha_q(k) = (q^{k/2} + q^{-k/2})/2.
RatFunc alpha_q(NuIndex k);

struct LatticeSpec {
    enum class Kind { QLinear, Linear };
    Kind kind = Kind::QLinear;
    RatFunc c1{Rational(1)};
    RatFunc c2{Rational(0)};
    // when set, t is bound to this numeric value (q = t_value^2)
    std::optional<Rational> t_value;

    static LatticeSpec canonical_q() { return LatticeSpec{}; }
    static LatticeSpec canonical_q_numeric(const Rational& t);
    static LatticeSpec linear();
};

// Bind t (and nothing else) when the lattice carries a numeric q.
RatFunc bind_lattice(const LatticeSpec& l, const RatFunc& f);

// x_nu(s) = x(s + nu/2). For the q-linear lattice `s_code` carries the value of
// q^s (the symbol S by default); for the linear lattice it carries s itself.
RatFunc x_shifted(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code);
inline RatFunc x_shifted(const LatticeSpec& l, NuIndex nu) {
    return x_shifted(l, nu, RatFunc(MultiPoly::var(sym_S)));
}

// nabla x_nu(s) = x_nu(s) - x_nu(s-1)
RatFunc nabla_x(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code);
// delta x_nu(s) = x_nu(s+1) - x_nu(s)
RatFunc delta_x(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code);

// Generalized power [x_k(s) - x_k(z)]^{(n)} for integer n >= 0.
RatFunc gen_power_int(const LatticeSpec& l, NuIndex k, const RatFunc& s_code,
                      const RatFunc& z_code, int n);

// q-Pochhammer (a;q)_n = prod_{m=0}^{n-1} (1 - a q^m).
RatFunc q_pochhammer(const RatFunc& a, int n);
// [n]_q! = prod_{m=1}^{n} [m]_q.
RatFunc q_factorial(int n);

// k-th difference derivative on the canonical q-lattice, acting on polynomials
// in x = q^s: step j maps f(x) -> t^{-j} (f(qx) - f(x)) / ((q-1) x).
PolyValue k_delta(const PolyValue& p, int k);

// nabla f / nabla x = (f(x) - f(x/q)) / ((1 - q^{-1}) x) on x = q^s.
PolyValue nabla_over_nabla_x(const PolyValue& p);

// Delta f / Delta x(s - 1/2) = (f(qx) - f(x)) / ((t - t^{-1}) x).
PolyValue delta_over_delta_x_half(const PolyValue& p);

} // namespace qlrec
