#include "qm/lfunc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qm/gauss_sum.hpp"
#include "qm/kahan.hpp"
#include "qm/quartic.hpp"

namespace qm {

double incomplete_gamma_half(double xi) {
    if (!(xi >= 0.0)) throw std::domain_error("incomplete_gamma_half: argument must be nonnegative");
    return std::erfc(std::sqrt(xi));
}

double afe_cutoff(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("AFE tolerance must be positive");
    return std::max(40.0, std::log(1.0 / tol) + 10.0);
}

double default_afe_x(const Gaussian64& c) { return std::sqrt(4.0 * static_cast<double>(c.norm())); }

std::int64_t afe_norm_bound(std::int64_t c_norm, double x, double tol) {
    const double xi = afe_cutoff(tol);
    const double two_pi = 2.0 * std::numbers::pi;
    const double first = xi * x / two_pi;
    const double second = xi * 4.0 * static_cast<double>(c_norm) / (two_pi * x);
    return static_cast<std::int64_t>(std::floor(std::max(first, second)));
}

namespace {

void validate(const Gaussian64& c, double x) {
    require_conductor(c);
    if (!(x > 1.0)) throw std::domain_error("AFE parameter x must exceed 1");
}

// Tail of sum_{N(A) > K} N(A)^(-1/2) Gamma(1/2, a N(A)) with a K = Xi, using
// at most pi/4 + 1 ideals per unit of norm and Gamma(1/2, t) <= e^(-t).
double tail_estimate(double a, double K, double xi) {
    return 2.0 * (std::numbers::pi / 4.0 + 1.0) * std::exp(-xi) / (a * std::sqrt(std::max(K, 1.0)));
}

}  // namespace

LValue L_half(const Gaussian64& c, double x, double tol, bool conjugate, const std::vector<IdealGen>& ideals,
              std::int64_t covered_norm) {
    validate(c, x);
    const std::int64_t N = c.norm();
    const double xi = afe_cutoff(tol);
    const double two_pi = 2.0 * std::numbers::pi;
    const double a1 = two_pi / x;
    const double a2 = two_pi * x / (4.0 * static_cast<double>(N));
    const auto K1 = static_cast<std::int64_t>(std::floor(xi / a1));
    const auto K2 = static_cast<std::int64_t>(std::floor(xi / a2));
    const std::int64_t K = std::max(K1, K2);
    if (covered_norm < K) throw std::invalid_argument("L_half: ideal table does not cover the AFE range");

    const bool principal = c.is_unit();
    QuarticCharacter chi(principal ? Gaussian64{1, 0} : c, /*with_tables=*/true);

    ComplexCompensatedSum s1, s2;
    std::int64_t terms = 0;
    std::size_t idx = 0;
    while (idx < ideals.size() && ideals[idx].norm <= K) {
        // Exact Gaussian-integer count of the character over ideals of one norm.
        const std::int64_t m = ideals[idx].norm;
        std::int64_t cr = 0, ci = 0;
        for (; idx < ideals.size() && ideals[idx].norm == m; ++idx) {
            ++terms;
            QuarticValue v = principal ? QuarticValue::one() : chi(ideals[idx].a);
            if (v.is_zero()) continue;
            if (conjugate) v = v.conj();
            switch (v.exponent()) {
                case 0: ++cr; break;
                case 1: ++ci; break;
                case 2: --cr; break;
                default: --ci; break;
            }
        }
        if (cr == 0 && ci == 0) continue;
        const std::complex<double> count{static_cast<double>(cr), static_cast<double>(ci)};
        const double md = static_cast<double>(m);
        const double w = 1.0 / std::sqrt(md);
        if (m <= K1) s1.add(count * (w * incomplete_gamma_half(a1 * md)));
        if (m <= K2) s2.add(std::conj(count) * (w * incomplete_gamma_half(a2 * md)));
    }

    LValue out;
    out.conductor_norm = N;
    out.x_used = x;
    out.truncation_terms = terms;
    std::complex<double> first = s1.value();
    if (principal) {
        // Poles of zeta_K at s = 1 and s = 0 contribute to the contour shift.
        first -= std::sqrt(x) / (2.0 * std::numbers::sqrt2) + 1.0 / std::sqrt(2.0 * x);
    }
    std::complex<double> eps{1.0, 0.0};
    if (!principal) {
        eps = root_number(c) / std::sqrt(static_cast<double>(N));
        if (conjugate) eps = std::conj(eps);
    }
    out.first_sum = first;
    out.second_sum = eps * s2.value();
    out.value = out.first_sum + out.second_sum;
    out.est_error = tail_estimate(a1, static_cast<double>(K1), xi) + tail_estimate(a2, static_cast<double>(K2), xi);
    return out;
}

LValue L_half(const Gaussian64& c, double x, double tol, bool conjugate) {
    validate(c, x);
    const std::int64_t bound = std::max<std::int64_t>(1, afe_norm_bound(c.norm(), x, tol));
    return L_half(c, x, tol, conjugate, enumerate_ideals(bound), bound);
}

std::complex<double> lambda_from_L(std::complex<double> L, std::int64_t c_norm) {
    const double gamma_half = std::sqrt(std::numbers::pi);
    return std::pow(4.0 * static_cast<double>(c_norm), 0.25) / std::sqrt(2.0 * std::numbers::pi) * gamma_half * L;
}

std::complex<double> lambda_half(const Gaussian64& c, double tol, bool conjugate) {
    return lambda_from_L(L_half(c, default_afe_x(c), tol, conjugate).value, c.norm());
}

FunctionalEquationCheck functional_equation_check(const Gaussian64& c, double tol) {
    require_conductor(c);
    const double x = std::max(default_afe_x(c), 1.5);
    FunctionalEquationCheck out;
    out.lambda = lambda_from_L(L_half(c, x, tol, false).value, c.norm());
    out.lambda_conj = lambda_from_L(L_half(c, 1.5 * x, tol, true).value, c.norm());
    out.root_number = c.is_unit() ? std::complex<double>{1.0, 0.0}
                                  : root_number(c) / std::sqrt(static_cast<double>(c.norm()));
    out.discrepancy = std::abs(out.lambda - out.root_number * out.lambda_conj);
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// sum_{k >= 0} (-1)^k a(k) for completely monotone a, Cohen-Villegas-Zagier
// Algorithm 1 with n terms (error about 5.8^(-n)).
template <class Fn>
double alternating_sum(Fn&& a, int n = 40) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    CompensatedSum s;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s.add(c * a(k));
        b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
            ((static_cast<double>(k) + 0.5) * (static_cast<double>(k) + 1.0));
    }
    return s.value() / d;
}

}  // namespace

double dirichlet_eta(double s) {
    if (!(s > 0.0)) throw std::domain_error("dirichlet_eta: s must be positive");
    return alternating_sum([s](int k) { return std::pow(static_cast<double>(k + 1), -s); });
}

double riemann_zeta(double s) {
    if (!(s > 0.0) || s == 1.0) throw std::domain_error("riemann_zeta: s must be positive and not 1");
    return dirichlet_eta(s) / (1.0 - std::pow(2.0, 1.0 - s));
}

double dirichlet_beta(double s) {
    if (!(s > 0.0)) throw std::domain_error("dirichlet_beta: s must be positive");
    return alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

double zeta_K(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta_K: s must exceed 1");
    return riemann_zeta(s) * dirichlet_beta(s);
}

double zeta_K_residue() { return dirichlet_beta(1.0); }

}  // namespace qm
