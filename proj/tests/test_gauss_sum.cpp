#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/quartic.hpp"

using namespace qm;

namespace {

Gaussian64 g(std::int64_t re, std::int64_t im) { return {re, im}; }

// Every class mod n is hit exactly N(n) times by a + bi with 0 <= a, b < N(n).
std::complex<double> brute_gauss(const Gaussian64& r, const Gaussian64& n, int power = 1) {
    const std::int64_t N = n.norm();
    std::complex<double> acc = 0.0;
    for (std::int64_t a = 0; a < N; ++a) {
        for (std::int64_t b = 0; b < N; ++b) {
            const Gaussian64 x{a, b};
            const QuarticValue chi = oracle::quartic_symbol(to_big(x), to_big(n)).pow(power);
            if (chi.is_zero()) continue;
            const double t = static_cast<double>((r * x * n.conj()).im) / static_cast<double>(N);
            acc += chi.to_complex() * std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * t));
        }
    }
    return acc / static_cast<double>(N);
}

double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("e-tilde exponent") {
    CHECK(e_tilde_exponent(g(1, 0), g(1, 1)) == 1);
    CHECK(e_tilde_exponent(g(3, 2), g(3, 2)) == 0);
    for (const auto& n : {g(3, 2), g(-3, 0), g(5, 4)})
        for (const auto& x : {g(1, 0), g(2, 7), g(-4, 1)}) CHECK(e_tilde_exponent(x, n) == e_tilde_exponent(x + n, n));
}

TEST_CASE("direct Gauss sums match a brute-force sum over a full box") {
    for (const auto& n : {g(3, 2), g(-1, 2), g(-3, 0), g(5, 4), g(1, 4), g(-1, 2) * g(-1, 2), g(3, 2) * g(-1, -2)}) {
        for (const auto& r : {g(1, 0), g(2, 1), g(0, 3), g(5, 0), n}) {
            CHECK(rel(gauss_sum(r, n).value, brute_gauss(r, n)) < 1e-9);
            CHECK(rel(gauss_sum_fast(r, n).value, brute_gauss(r, n)) < 1e-9);
        }
        CHECK(rel(gauss_sum_g2(n).value, brute_gauss(g(1, 0), n, 2)) < 1e-9);
    }
    CHECK(gauss_sum(g(1, 0)).value == std::complex<double>(1.0, 0.0));
}

TEST_CASE("magnitude law") {
    for (const auto& n : enumerate_primary(600)) {
        const double mag = std::norm(gauss_sum(n).value);
        const double expected = is_squarefree(n) ? static_cast<double>(n.norm()) : 0.0;
        REQUIRE(std::abs(mag - expected) <= 1e-6 * static_cast<double>(n.norm()));
    }
}

TEST_CASE("prime-power table branches") {
    auto& cache = GaussPrimeCache::global();
    const Gaussian64 pi{-1, 2};
    const double N = 5.0;
    const auto c = gauss_prime_power_table(pi, 3, 4, cache);
    CHECK(std::abs(c.value - std::complex<double>(-std::pow(N, 3), 0.0)) < 1e-9);
    const auto phi = gauss_prime_power_table(pi, 4, 4, cache);
    CHECK(std::abs(phi.value - std::complex<double>(static_cast<double>(euler_phi_ideal(pi, 4)), 0.0)) < 1e-9);
    CHECK(gauss_prime_power_table(pi, 1, 3, cache).exact_zero);
    const auto direct = gauss_sum(pow(pi, 3), pow(pi, 4));
    CHECK(std::abs(direct.value - c.value) < 1e-9);
}

TEST_CASE("twist and multiplicativity on random inputs") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> d(-20, 20);
    const auto primes = primary_primes(60);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    for (int k = 0; k < 60; ++k) {
        const Gaussian64 n1 = primes[pick(rng)];
        Gaussian64 n2 = primes[pick(rng)];
        if (n1 == n2) continue;
        const Gaussian64 r{d(rng), d(rng)};
        const Gaussian64 s = primary_associate(Gaussian64{2 * d(rng) + 1, 2 * d(rng)}).primary;
        const auto lhs = gauss_sum(r * s, n1).value;
        const auto rhs = quartic_symbol(s, n1).conj().to_complex() * gauss_sum(r, n1).value;
        REQUIRE(rel(lhs, rhs) < 1e-9);
        const auto prod = gauss_sum(r, n1 * n2).value;
        const auto split = (quartic_symbol(n2, n1) * quartic_symbol(n1, n2)).to_complex() * gauss_sum(r, n1).value *
                           gauss_sum(r, n2).value;
        REQUIRE(rel(prod, split) < 1e-9);
    }
}

TEST_CASE("root number") {
    CHECK(std::abs(root_number(g(1, 0)) - std::complex<double>(1.0, 0.0)) < 1e-12);
    const auto r17 = root_number_routes(g(17, 0));
    CHECK(r17.relative_difference < 1e-9);
    CHECK(std::abs(std::abs(r17.via_gauss_sum) - 17.0) < 1e-9);
    CHECK_THROWS_AS(require_conductor(g(3, 2)), std::domain_error);
    CHECK_THROWS_AS(require_conductor(g(17, 0) * g(17, 0)), std::domain_error);
}
