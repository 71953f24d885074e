#include <random>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/quartic.hpp"
#include "qm/ray_class.hpp"

using namespace qm;

namespace {

Gaussian64 g(std::int64_t re, std::int64_t im) { return {re, im}; }

// x^e mod pi by repeated multiplication and Euclidean reduction.
Gaussian64 power_mod(Gaussian64 x, std::int64_t e, const Gaussian64& pi) {
    Gaussian64 acc{1, 0};
    x = divrem(x, pi).remainder;
    for (std::int64_t k = 0; k < e; ++k) acc = divrem(acc * x, pi).remainder;
    return acc;
}

QuarticValue brute_prime_symbol(const Gaussian64& a, const Gaussian64& pi) {
    if (divides(pi, a)) return QuarticValue::zero();
    const Gaussian64 v = power_mod(a, (pi.norm() - 1) / 4, pi);
    for (int k = 0; k < 4; ++k)
        if (divides(pi, v - Gaussian64::unit(k))) return QuarticValue::i_pow(k);
    throw std::logic_error("not a fourth root of unity");
}

QuarticValue brute_symbol(const Gaussian64& a, const Gaussian64& n) {
    QuarticValue v = QuarticValue::one();
    for (const auto& [pi, e] : factor(n).factors) v *= brute_prime_symbol(a, pi).pow(e);
    return v;
}

Gaussian64 random_primary(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    for (;;) {
        const Gaussian64 z{d(rng), d(rng)};
        if (!z.is_zero() && z.is_odd() && !z.is_unit()) return primary_associate(z).primary;
    }
}

}  // namespace

TEST_CASE("QuarticValue arithmetic") {
    CHECK(QuarticValue::i_pow(5) == QuarticValue::i_pow(1));
    CHECK(QuarticValue::i_pow(-1) == QuarticValue::i_pow(3));
    CHECK((QuarticValue::i_pow(1) * QuarticValue::i_pow(3)) == QuarticValue::one());
    CHECK(QuarticValue::i_pow(1).conj() == QuarticValue::i_pow(3));
    CHECK(QuarticValue::zero().pow(0) == QuarticValue::one());
    CHECK((QuarticValue::zero() * QuarticValue::one()).is_zero());
    CHECK(QuarticValue::i_pow(2).to_string() == "-1");
    CHECK(QuarticValue::i_pow(3).to_string() == "-i");
    CHECK(QuarticValue::zero().to_string() == "0");
}

TEST_CASE("symbol examples") {
    CHECK(quartic_symbol(g(0, 1), g(3, 2)) == QuarticValue::i_pow(3));
    CHECK(quartic_symbol(g(2, 0), g(-1, 2)) == QuarticValue::i_pow(3));
    CHECK(quartic_symbol(g(5, 0), g(1, 0)) == QuarticValue::one());
    CHECK(quartic_symbol(g(3, 2), g(15, 10)).is_zero());
    CHECK(quartic_symbol(g(3, 2), g(3, 2) * g(-1, 2)).is_zero());
    const GaussianInt n = to_big(g(3, 2));
    CHECK(supplement_i(n) == QuarticValue::i_pow(3));
    CHECK(supplement_1plusi(n) == QuarticValue::i_pow(3));
    CHECK(supplement_i(to_big(g(1, 0))) == QuarticValue::one());
    CHECK(supplement_1plusi(to_big(g(1, 0))) == QuarticValue::one());
    CHECK(reciprocity_check(to_big(g(3, 2)), to_big(g(-1, 2))));
    CHECK(psi(g(3, 2), g(-1, 2)) == -1);
}

TEST_CASE("prime symbols agree with brute-force powering") {
    for (const auto& pi : primary_primes(800)) {
        for (std::int64_t x = -6; x <= 6; ++x) {
            for (std::int64_t y = -6; y <= 6; ++y) {
                const Gaussian64 a{x, y};
                const QuarticValue expected = brute_prime_symbol(a, pi);
                REQUIRE(quartic_symbol(a, pi) == expected);
                REQUIRE(oracle::quartic_symbol_prime(to_big(a), to_big(pi)) == expected);
                REQUIRE(PrimeField(pi).symbol(a) == expected);
            }
        }
    }
}

TEST_CASE("composite symbols are multiplicative in both arguments") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 300; ++k) {
        const Gaussian64 a = random_primary(rng, 40);
        const Gaussian64 b = random_primary(rng, 40);
        const Gaussian64 n = random_primary(rng, 25);
        const Gaussian64 m = random_primary(rng, 25);
        REQUIRE(quartic_symbol(a * b, n) == quartic_symbol(a, n) * quartic_symbol(b, n));
        REQUIRE(quartic_symbol(a, n * m) == quartic_symbol(a, n) * quartic_symbol(a, m));
        REQUIRE(quartic_symbol(a, n) == brute_symbol(a, n));
        REQUIRE(quartic_symbol(a, n) == quartic_symbol(a + n * g(3, -7), n));
        REQUIRE(QuarticCharacter(n)(a) == quartic_symbol(a, n));
        REQUIRE(QuarticCharacter(n, true)(a) == quartic_symbol(a, n));
    }
}

TEST_CASE("reciprocity and supplements on random primary pairs") {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 200) {
        const Gaussian64 m = random_primary(rng, 60);
        const Gaussian64 n = random_primary(rng, 60);
        if (!coprime(m, n)) continue;
        ++tested;
        const auto lhs = quartic_symbol(m, n);
        const auto rhs = quartic_symbol(n, m);
        const std::int64_t e = ((m.norm() - 1) / 4) * ((n.norm() - 1) / 4);
        REQUIRE(lhs == rhs * QuarticValue::i_pow(e % 2 == 0 ? 0 : 2));
        REQUIRE(reciprocity_check(to_big(m), to_big(n)));
        REQUIRE(supplement_i(to_big(n)) == brute_symbol(g(0, 1), n));
        REQUIRE(supplement_1plusi(to_big(n)) == brute_symbol(g(1, 1), n));
        if (m.norm() % 8 == 1) REQUIRE(lhs == rhs);
    }
}

TEST_CASE("big-integer symbol matches the 64-bit path") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 100; ++k) {
        const Gaussian64 a = random_primary(rng, 1000);
        const Gaussian64 n = random_primary(rng, 200);
        REQUIRE(quartic_symbol(to_big(a), to_big(n)) == quartic_symbol(a, n));
        REQUIRE(oracle::quartic_symbol(to_big(a), to_big(n)) == quartic_symbol(a, n));
    }
}

TEST_CASE("psi depends only on residues mod 16") {
    CHECK(psi(g(17, 0), g(3, 2)) == 1);
    for (const auto& a : enumerate_primary(60)) {
        for (std::int64_t x = 0; x < 16; ++x) {
            for (std::int64_t y = 0; y < 16; ++y) {
                const Gaussian64 c{x, y};
                if (!c.is_odd()) continue;
                const int v = psi(a, c);
                REQUIRE(v == psi(a, c + g(16, 0)));
                REQUIRE(v == psi(a, c + g(0, 16) * g(x - 3, y + 2)));
                if (a.norm() % 8 == 1) REQUIRE(v == 1);
            }
        }
    }
}

TEST_CASE("ray class group mod 16") {
    const auto& G = RayClassGroup::instance();
    CHECK(G.residue_unit_count() == 128);
    CHECK(G.order() == 32);
    CHECK(G.characters().size() == 32);
    CHECK(G.principal().is_principal());
    for (const auto& r : G.representatives()) CHECK(G.principal()(r) == std::complex<double>(1.0, 0.0));
    int residues = 0;
    for (std::int64_t x = 0; x < 16; ++x)
        for (std::int64_t y = 0; y < 16; ++y) residues += Gaussian64{x, y}.is_odd() ? 1 : 0;
    CHECK(residues == 128);
    for (const auto& chi : G.characters()) {
        CHECK(chi.exponent_at(g(1, 1)) == -1);
        for (std::int64_t x = -9; x <= 9; ++x) {
            for (std::int64_t y = -9; y <= 9; ++y) {
                const Gaussian64 n{x, y};
                if (!n.is_odd()) continue;
                REQUIRE(chi.exponent_at(n) == chi.exponent_at(n * g(0, 1)));
                REQUIRE(chi.exponent_at(n) == chi.exponent_at(n + g(16, 16)));
                const Gaussian64 m{y + 2, x};
                if (!m.is_odd()) continue;
                REQUIRE((chi.exponent_at(n) + chi.exponent_at(m)) % 8 == chi.exponent_at(n * m));
            }
        }
    }
}
