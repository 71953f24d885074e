#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qm/enumerate.hpp"
#include "qm/gaussian.hpp"

namespace qm {

/// Normalized incomplete Gamma function Gamma(1/2, xi) = erfc(sqrt(xi)).
double incomplete_gamma_half(double xi);

/// Cutoff Xi = max(40, ln(1/tol) + 10) on the Gamma-factor arguments.
double afe_cutoff(double tol);

/// Default AFE parameter sqrt(4 N(c)).
double default_afe_x(const Gaussian64& c);

/// Largest ideal norm either AFE sum needs for the given conductor norm.
std::int64_t afe_norm_bound(std::int64_t c_norm, double x, double tol);

struct LValue {
    std::complex<double> value;
    std::complex<double> first_sum;   ///< sum over chi_c(A), including the polar terms at c = 1
    std::complex<double> second_sum;  ///< root-number side, already multiplied by W / N(c)^(1/2)
    std::int64_t conductor_norm = 1;
    double x_used = 0.0;
    std::int64_t truncation_terms = 0;
    double est_error = 0.0;
};

/// L(1/2, chi_c) by the approximate functional equation; `conjugate` runs it
/// for the conjugate character. c is 1 or squarefree with c = 1 (mod 16).
LValue L_half(const Gaussian64& c, double x, double tol, bool conjugate = false);

/// As above with a caller-supplied ideal list, sorted by norm and complete up
/// to `covered_norm` >= afe_norm_bound(N(c), x, tol).
LValue L_half(const Gaussian64& c, double x, double tol, bool conjugate, const std::vector<IdealGen>& ideals,
              std::int64_t covered_norm);

/// Lambda(1/2, chi) = (4 N(c))^(1/4) (2 pi)^(-1/2) Gamma(1/2) L(1/2, chi).
std::complex<double> lambda_from_L(std::complex<double> L, std::int64_t c_norm);
std::complex<double> lambda_half(const Gaussian64& c, double tol = 1e-10, bool conjugate = false);

struct FunctionalEquationCheck {
    std::complex<double> lambda;       ///< Lambda(1/2, chi_c) at x
    std::complex<double> lambda_conj;  ///< Lambda(1/2, conj chi_c) at a different x
    std::complex<double> root_number;  ///< W(chi_c) / N(c)^(1/2)
    double discrepancy = 0.0;          ///< |lambda - root_number * lambda_conj|
};

/// Checks Lambda(1/2, chi_c) = W(chi_c) N(c)^(-1/2) Lambda(1/2, conj chi_c),
/// evaluating the two sides with AFE parameters x and 1.5 x.
FunctionalEquationCheck functional_equation_check(const Gaussian64& c, double tol);

/// Alternating series by the Cohen-Villegas-Zagier acceleration.
double dirichlet_eta(double s);
/// Riemann zeta for s > 0, s != 1, through eta.
double riemann_zeta(double s);
/// L(s, chi_4) = sum (-1)^n (2n+1)^(-s) for s > 0.
double dirichlet_beta(double s);

/// Dedekind zeta of Q(i), zeta(s) beta(s), for s > 1.
double zeta_K(double s);
/// Residue of zeta_K at s = 1, which is beta(1).
double zeta_K_residue();

}  // namespace qm
