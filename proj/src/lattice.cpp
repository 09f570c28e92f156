#include "qlrec/lattice.hpp"

namespace qlrec {

RatFunc qpow_half(NuIndex k) {
    std::vector<std::pair<std::string, int32_t>> pows;
    if (k.symbolic) pows.emplace_back(sym_u, 1);
    if (k.offset != 0) pows.emplace_back(sym_t, k.offset);
    return RatFunc(MultiPoly::monomial(Rational(1), pows));
}

RatFunc qpow(NuIndex k) {
    std::vector<std::pair<std::string, int32_t>> pows;
    if (k.symbolic) pows.emplace_back(sym_u, 2);
    if (k.offset != 0) pows.emplace_back(sym_t, 2 * k.offset);
    return RatFunc(MultiPoly::monomial(Rational(1), pows));
}

namespace {

// q^{-k/2}
RatFunc qpow_half_neg(NuIndex k) {
    std::vector<std::pair<std::string, int32_t>> pows;
    if (k.symbolic) pows.emplace_back(sym_u, -1);
    if (k.offset != 0) pows.emplace_back(sym_t, -k.offset);
    return RatFunc(MultiPoly::monomial(Rational(1), pows));
}

} // namespace

RatFunc q_number(NuIndex k) {
    if (!k.symbolic && k.offset == 0) return RatFunc();
    RatFunc dd = RatFunc(MultiPoly::var(sym_t)) - RatFunc(MultiPoly::var(sym_t, -1));
    return (qpow_half(k) - qpow_half_neg(k)) / dd;
}

RatFunc alpha_q(NuIndex k) {
    return (qpow_half(k) + qpow_half_neg(k)) * RatFunc(Rational(1, 2));
}

LatticeSpec LatticeSpec::canonical_q_numeric(const Rational& t) {
    LatticeSpec l;
    l.t_value = t;
    return l;
}

LatticeSpec LatticeSpec::linear() {
    LatticeSpec l;
    l.kind = Kind::Linear;
    return l;
}

RatFunc bind_lattice(const LatticeSpec& l, const RatFunc& f) {
    if (!l.t_value) return f;
    return substitute(f, {{sym_t, RatFunc(*l.t_value)}});
}

RatFunc x_shifted(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code) {
    if (l.kind == LatticeSpec::Kind::Linear) {
        if (nu.symbolic)
            fail(ErrorCode::UnsupportedLattice, "symbolic index on the linear lattice");
        return l.c1 * (s_code + RatFunc(Rational(nu.offset, 2))) + l.c2;
    }
    return bind_lattice(l, l.c1 * qpow_half(nu) * s_code + l.c2);
}

RatFunc nabla_x(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code) {
    if (l.kind == LatticeSpec::Kind::Linear) return l.c1;
    // x(s+nu/2) - x(s-1+nu/2) = c1 q^{nu/2} q^s (1 - q^{-1})
    RatFunc one_minus = RatFunc(Rational(1)) - qpow(NuIndex::integer(-1));
    return bind_lattice(l, l.c1 * qpow_half(nu) * s_code * one_minus);
}

RatFunc delta_x(const LatticeSpec& l, NuIndex nu, const RatFunc& s_code) {
    if (l.kind == LatticeSpec::Kind::Linear) return l.c1;
    RatFunc qm1 = qpow(NuIndex::integer(1)) - RatFunc(Rational(1));
    return bind_lattice(l, l.c1 * qpow_half(nu) * s_code * qm1);
}

RatFunc gen_power_int(const LatticeSpec& l, NuIndex k, const RatFunc& s_code,
                      const RatFunc& z_code, int n) {
    if (n < 0) fail(ErrorCode::BadInput, "generalized power with negative order");
    if (n == 0) return RatFunc(Rational(1));
    if (l.kind == LatticeSpec::Kind::Linear) {
        // c1^n (s-z)_n, rising factorial
        RatFunc acc(Rational(1));
        for (int j = 0; j < n; ++j)
            acc *= (s_code - z_code + RatFunc(Rational(j)));
        return l.c1.pow(n) * acc;
    }
    // (-1)^n c1^n q^{-n(n-1)/2} q^{n(z + k/2)} (q^{s-z}; q)_n  with q^z, q^s from codes
    RatFunc acc(Rational(n % 2 == 0 ? 1 : -1));
    acc *= l.c1.pow(n);
    acc *= qpow(NuIndex::integer(1)).pow(-n * (n - 1) / 2);
    acc *= z_code.pow(n) * qpow_half(k).pow(n);
    RatFunc ratio = s_code / z_code;
    for (int m = 0; m < n; ++m)
        acc *= (RatFunc(Rational(1)) - ratio * qpow(NuIndex::integer(m)));
    return bind_lattice(l, acc);
}

RatFunc q_pochhammer(const RatFunc& a, int n) {
    if (n < 0) fail(ErrorCode::BadInput, "q_pochhammer with negative order");
    RatFunc acc(Rational(1));
    for (int m = 0; m < n; ++m)
        acc *= (RatFunc(Rational(1)) - a * qpow(NuIndex::integer(m)));
    return acc;
}

RatFunc q_factorial(int n) {
    if (n < 0) fail(ErrorCode::BadInput, "q_factorial with negative order");
    RatFunc acc(Rational(1));
    for (int m = 1; m <= n; ++m) acc *= q_number(NuIndex::integer(m));
    return acc;
}

namespace {

// geometric sum 1 + q + ... + q^{m-1} as a polynomial in t
MultiPoly geo_sum(int m) {
    MultiPoly::TermMap terms;
    for (int i = 0; i < m; ++i)
        terms.emplace(Exponents{2 * i}, Rational(1));
    if (m == 0) return MultiPoly();
    return MultiPoly::from_terms({sym_t}, std::move(terms));
}

} // namespace

PolyValue k_delta(const PolyValue& p, int k) {
    if (k < 0) fail(ErrorCode::BadInput, "k_delta with negative order");
    PolyValue cur = p;
    for (int j = 0; j < k; ++j) {
        // x^m -> t^{-j} (1 + q + ... + q^{m-1}) x^{m-1}
        PolyValue next(cur.main_var());
        std::vector<RatFunc> coeffs;
        int d = cur.degree();
        for (int m = 1; m <= d; ++m) {
            MultiPoly factor = geo_sum(m).shifted({{sym_t, -j}});
            coeffs.push_back(RatFunc(cur.nums()[static_cast<std::size_t>(m)] * factor, cur.den()));
        }
        cur = PolyValue::from_coeffs(coeffs, cur.main_var());
    }
    return cur;
}

PolyValue nabla_over_nabla_x(const PolyValue& p) {
    // x^m -> q^{1-m} (1 + q + ... + q^{m-1}) x^{m-1}
    std::vector<RatFunc> coeffs;
    int d = p.degree();
    for (int m = 1; m <= d; ++m) {
        MultiPoly factor = geo_sum(m).shifted({{sym_t, 2 * (1 - m)}});
        coeffs.push_back(RatFunc(p.nums()[static_cast<std::size_t>(m)] * factor, p.den()));
    }
    return PolyValue::from_coeffs(coeffs, p.main_var());
}

PolyValue delta_over_delta_x_half(const PolyValue& p) {
    // x^m -> t (1 + q + ... + q^{m-1}) x^{m-1}
    std::vector<RatFunc> coeffs;
    int d = p.degree();
    for (int m = 1; m <= d; ++m) {
        MultiPoly factor = geo_sum(m).shifted({{sym_t, 1}});
        coeffs.push_back(RatFunc(p.nums()[static_cast<std::size_t>(m)] * factor, p.den()));
    }
    return PolyValue::from_coeffs(coeffs, p.main_var());
}

} // namespace qlrec
