#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/lfunc.hpp"

using namespace qm;

namespace {

Gaussian64 g(std::int64_t re, std::int64_t im) { return {re, im}; }

double gamma_half_quadrature(double xi) {
    boost::math::quadrature::exp_sinh<double> integrator;
    const auto f = [xi](double u) {
        const double t = xi + u;
        return std::exp(-t) / std::sqrt(t);
    };
    return integrator.integrate(f) / std::sqrt(std::numbers::pi);
}

// Repeated averaging of consecutive partial sums of sum (-1)^k a_k.
template <class Term>
double averaged_alternating(Term a, int n) {
    std::vector<double> s(static_cast<std::size_t>(n));
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        acc += (k % 2 == 0 ? 1.0 : -1.0) * a(k);
        s[static_cast<std::size_t>(k)] = acc;
    }
    for (int level = 0; level < n - 1; ++level)
        for (std::size_t k = 0; k + 1 < s.size() - static_cast<std::size_t>(level); ++k) s[k] = 0.5 * (s[k] + s[k + 1]);
    return s[0];
}

double beta_oracle(double s) {
    return averaged_alternating([s](int k) { return std::pow(2.0 * k + 1.0, -s); }, 60);
}

}  // namespace

TEST_CASE("incomplete gamma against quadrature") {
    CHECK(incomplete_gamma_half(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    for (const double xi : {0.01, 0.1, 1.0, 5.0, 20.0}) {
        const double ref = gamma_half_quadrature(xi);
        CHECK(std::abs(incomplete_gamma_half(xi) - ref) <= 1e-10 * std::max(ref, 1e-300) + 1e-16);
        CHECK(std::abs(incomplete_gamma_half(xi) - boost::math::gamma_q(0.5, xi)) <= 1e-13 * ref + 1e-18);
    }
    CHECK(incomplete_gamma_half(1.0) == doctest::Approx(0.157299207050285).epsilon(1e-12));
    CHECK(incomplete_gamma_half(40.0) < 1e-17);
}

TEST_CASE("AFE cutoff") {
    CHECK(afe_cutoff(1e-10) == 40.0);
    CHECK(afe_cutoff(1e-20) == doctest::Approx(std::log(1e20) + 10.0));
    CHECK(default_afe_x(g(17, 0)) == doctest::Approx(std::sqrt(4.0 * 289.0)));
}

TEST_CASE("alternating series against independent oracles") {
    for (const double s : {0.5, 2.0, 3.5}) {
        CHECK(std::abs(dirichlet_eta(s) - (1.0 - std::pow(2.0, 1.0 - s)) * boost::math::zeta(s)) < 1e-12);
        CHECK(std::abs(riemann_zeta(s) - boost::math::zeta(s)) < 1e-12);
        CHECK(std::abs(dirichlet_beta(s) - beta_oracle(s)) < 1e-12);
    }
    CHECK(std::abs(dirichlet_beta(1.0) - std::numbers::pi / 4.0) < 1e-13);
    CHECK(std::abs(zeta_K_residue() - std::numbers::pi / 4.0) < 1e-13);
    const double G = boost::math::constants::catalan<double>();
    CHECK(std::abs(zeta_K(2.0) - std::numbers::pi * std::numbers::pi / 6.0 * G) < 1e-13);
    CHECK(std::abs(dirichlet_beta(2.0) - G) < 1e-14);
}

TEST_CASE("L at the principal character") {
    const double ref = boost::math::zeta(0.5) * beta_oracle(0.5);
    for (const double x : {2.0, 10.0, 50.0}) {
        const LValue v = L_half(g(1, 0), x, 1e-12);
        CHECK(std::abs(v.value - std::complex<double>(ref, 0.0)) < 2e-10);
        CHECK(v.conductor_norm == 1);
        CHECK(v.x_used == x);
    }
    CHECK(ref == doctest::Approx(-0.9751).epsilon(1e-4));
}

TEST_CASE("L at conductor 17") {
    const Gaussian64 c{17, 0};
    const double tol = 1e-10;
    const auto a = L_half(c, 10.0, tol).value;
    const auto b = L_half(c, std::sqrt(4.0 * 289.0), tol).value;
    const auto d = L_half(c, 2.0 * 289.0, tol).value;
    CHECK(std::abs(a - b) < 2e-8);
    CHECK(std::abs(a - d) < 2e-8);
    CHECK(std::abs(L_half(c, 34.0, tol, true).value - std::conj(b)) < 2e-8);
    const auto fe = functional_equation_check(c, tol);
    CHECK(fe.discrepancy <= 1e-6 * (1.0 + std::abs(fe.lambda)));
    CHECK(std::abs(std::abs(fe.root_number) - 1.0) < 1e-9);
    const auto one = functional_equation_check(g(1, 0), tol);
    CHECK(std::abs(one.root_number - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(one.discrepancy <= 1e-6 * (1.0 + std::abs(one.lambda)));
}

TEST_CASE("AFE with a supplied ideal table") {
    const Gaussian64 c{1, 16};
    const double x = default_afe_x(c);
    const std::int64_t K = afe_norm_bound(c.norm(), x, 1e-10);
    const auto ideals = enumerate_ideals(K);
    const auto own = L_half(c, x, 1e-10);
    const auto shared = L_half(c, x, 1e-10, false, ideals, K);
    CHECK(own.value == shared.value);
    CHECK_THROWS_AS(L_half(c, x, 1e-10, false, ideals, K - 1), std::invalid_argument);
    CHECK_THROWS_AS(L_half(g(3, 2), 10.0, 1e-10), std::domain_error);
}
