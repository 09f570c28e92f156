#include "qlrec/hyperspec.hpp"

namespace qlrec {

HyperSpec HyperSpec::symbolic() {
    HyperSpec h;
    h.a = RatFunc(MultiPoly::var("a"));
    h.b = RatFunc(MultiPoly::var("b"));
    h.c = RatFunc(MultiPoly::var("c"));
    h.d = RatFunc(MultiPoly::var("d"));
    h.e = RatFunc(MultiPoly::var("e"));
    return h;
}

RatFunc HyperSpec::sigma_at(const RatFunc& s_code) const {
    return a * s_code * s_code + b * s_code + c;
}

RatFunc HyperSpec::tau_at(const RatFunc& s_code) const { return d * s_code + e; }

std::pair<RatFunc, RatFunc> tau_nu_coeffs(const HyperSpec& h, NuIndex nu) {
    if (h.lattice.kind != LatticeSpec::Kind::QLinear)
        fail(ErrorCode::UnsupportedLattice, "tau_nu requires the q-linear lattice");
    // N(S) = sigma(s+nu) - sigma(s) + tau(s+nu) * Delta x(s+nu-1/2)
    //      = [a(q^{2nu}-1) + d q^{2nu}(t - 1/t)] S^2 + [b(q^{nu}-1) + e q^{nu}(t - 1/t)] S
    // denominator Delta x_{nu-1}(s) = q^{(nu-1)/2} (q-1) S
    RatFunc U2 = qpow(nu);           // q^{nu}
    RatFunc U4 = U2 * U2;            // q^{2nu}
    RatFunc dd = RatFunc(MultiPoly::var(sym_t)) - RatFunc(MultiPoly::var(sym_t, -1));
    RatFunc n2 = h.a * (U4 - RatFunc(Rational(1))) + h.d * U4 * dd;
    RatFunc n1 = h.b * (U2 - RatFunc(Rational(1))) + h.e * U2 * dd;
    RatFunc den = qpow_half(nu - 1) * (qpow(NuIndex::integer(1)) - RatFunc(Rational(1)));
    return {n2 / den, n1 / den};
}

PhiCoeffs phi_nu_coeffs(const HyperSpec& h, NuIndex nu) {
    auto [dn, en] = tau_nu_coeffs(h, nu);
    // Delta x_nu(s-1/2) = q^{nu/2} (t - 1/t) S
    RatFunc dd = RatFunc(MultiPoly::var(sym_t)) - RatFunc(MultiPoly::var(sym_t, -1));
    RatFunc step = qpow_half(nu) * dd;
    PhiCoeffs p;
    p.nu = nu;
    p.f = h.a + dn * step;
    p.g = h.b + en * step;
    p.h = h.c;
    return p;
}

RatFunc lambda_nu(const HyperSpec& h, NuIndex nu) {
    TildeSplit ts = tilde_split(h);
    return -(q_number(nu) * (alpha_q(nu - 1) * ts.tau_tilde_1 + q_number(nu - 1) * ts.sigma_tilde_2));
}

RatFunc pearson_ratio(const HyperSpec& h, NuIndex nu) {
    if (h.a.is_zero() && h.b.is_zero() && h.c.is_zero())
        fail(ErrorCode::DegenerateSigma, "sigma is identically zero");
    RatFunc S(MultiPoly::var(sym_S));
    PhiCoeffs p = phi_nu_coeffs(h, nu);
    RatFunc qS = qpow(NuIndex::integer(1)) * S;
    return p.at(S) / h.sigma_at(qS);
}

RatFunc rho_shift_product(const HyperSpec& h, NuIndex nu0, int offset, const RatFunc& s_code) {
    if (offset < 0) fail(ErrorCode::BadInput, "rho_shift_product needs a nonnegative offset");
    PhiCoeffs p0 = phi_nu_coeffs(h, NuIndex::integer(0));
    RatFunc acc(Rational(1));
    for (int j = 0; j < offset; ++j) {
        // phi(s + nu0 + j): substitute S -> q^{nu0+j} S
        RatFunc arg = qpow(nu0 + j) * s_code;
        acc *= p0.at(arg);
    }
    return acc;
}

TildeSplit tilde_split(const HyperSpec& h) {
    if (h.lattice.kind != LatticeSpec::Kind::QLinear)
        fail(ErrorCode::UnsupportedLattice, "tilde_split requires the q-linear lattice");
    RatFunc dd = RatFunc(MultiPoly::var(sym_t)) - RatFunc(MultiPoly::var(sym_t, -1));
    RatFunc half(Rational(1, 2));
    TildeSplit ts;
    ts.tau_tilde_1 = h.d;
    ts.tau_tilde_0 = h.e;
    ts.sigma_tilde_2 = h.a + half * h.d * dd;
    ts.sigma_tilde_1 = h.b + half * h.e * dd;
    ts.sigma_tilde_0 = h.c;
    return ts;
}

} // namespace qlrec
