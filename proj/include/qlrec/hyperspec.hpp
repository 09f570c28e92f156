#pragma once

#include "qlrec/lattice.hpp"

namespace qlrec {

// Difference-equation data on the canonical q-lattice:
//   sigma(s) = a q^{2s} + b q^s + c,   tau(s) = d q^s + e.
// Coefficients are rational functions free of S, X and u (they may contain t
// and family parameters).
struct HyperSpec {
    RatFunc a, b, c, d, e;
    LatticeSpec lattice = LatticeSpec::canonical_q();

    // generic spec with symbolic coefficients a..e
    static HyperSpec symbolic();

    RatFunc sigma_at(const RatFunc& s_code) const;
    RatFunc tau_at(const RatFunc& s_code) const;
};

// phi_nu(s) = sigma(s) + tau_nu(s) Delta x_nu(s - 1/2) = f q^{2s} + g q^s + h.
struct PhiCoeffs {
    RatFunc f, g, h;
    NuIndex nu;

    RatFunc at(const RatFunc& s_code) const { return f * s_code * s_code + g * s_code + h; }
};

// sigma(s) = sigma_tilde(x(s)) - 1/2 tau_tilde(x(s)) Delta x(s-1/2),
// tau_tilde = tau. Coefficients of sigma_tilde and tau_tilde in x.
struct TildeSplit {
    RatFunc sigma_tilde_2, sigma_tilde_1, sigma_tilde_0;
    RatFunc tau_tilde_1, tau_tilde_0;
};

// tau_nu coefficients (d_nu, e_nu), computed by expanding
//   [sigma(s+nu) - sigma(s) + tau(s+nu) Delta x(s+nu-1/2)] / Delta x_{nu-1}(s).
std::pair<RatFunc, RatFunc> tau_nu_coeffs(const HyperSpec& h, NuIndex nu);

PhiCoeffs phi_nu_coeffs(const HyperSpec& h, NuIndex nu);

// lambda_nu = -[nu]_q (alpha_q(nu-1) tau_tilde' + [nu-1]_q sigma_tilde''/2).
RatFunc lambda_nu(const HyperSpec& h, NuIndex nu);

// rho_nu(s+1)/rho_nu(s) = phi_nu(s)/sigma(s+1), as a rational function of S.
RatFunc pearson_ratio(const HyperSpec& h, NuIndex nu);

// rho_{nu0+offset}(s)/rho_{nu0}(s) = prod_{j=0}^{offset-1} phi(s + nu0 + j),
// phi = phi_0. Empty product for offset = 0.
RatFunc rho_shift_product(const HyperSpec& h, NuIndex nu0, int offset,
                          const RatFunc& s_code);
inline RatFunc rho_shift_product(const HyperSpec& h, NuIndex nu0, int offset) {
    return rho_shift_product(h, nu0, offset, RatFunc(MultiPoly::var(sym_S)));
}

TildeSplit tilde_split(const HyperSpec& h);

} // namespace qlrec
