#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/hfunc.hpp"
#include "qm/quartic.hpp"
#include "qm/ray_class.hpp"

using namespace qm;

namespace {

Gaussian64 g(std::int64_t re, std::int64_t im) { return {re, im}; }

const HSeries& series_1e4() {
    static const HSeries s(10000);
    return s;
}

// The product with j < i in the quotient, read literally.
QuarticValue P_strict(const std::vector<Gaussian64>& primes) {
    Gaussian64 a{1, 0};
    for (const auto& p : primes) a *= p;
    QuarticValue v = QuarticValue::one();
    Gaussian64 prefix{1, 0};
    for (const auto& p : primes) {
        const Gaussian64 q = exact_div(a, prefix);
        v *= quartic_symbol(q * q, p * p * p).conj();
        prefix *= p;
    }
    return v;
}

}  // namespace

TEST_CASE("decompose_r") {
    const Gaussian64 p{3, 2}, q{-1, 2};
    const auto d1 = decompose_r(p);
    CHECK(d1.r1 == p);
    CHECK(d1.r2 == g(1, 0));
    CHECK(d1.r3 == g(1, 0));
    CHECK(d1.r4 == g(1, 0));
    const auto d5 = decompose_r(pow(p, 5));
    CHECK(d5.r1 == p);
    CHECK(d5.r4 == p);
    CHECK(d5.r4_star == p);
    const auto d23 = decompose_r(p * p * q * q * q);
    CHECK(d23.r2 == p);
    CHECK(d23.r3 == q);
    for (const auto& r : enumerate_primary(3000)) {
        const auto d = decompose_r(r);
        const Gaussian64 back = d.r1 * pow(d.r2, 2) * pow(d.r3, 3) * pow(d.r4, 4);
        REQUIRE(back == r);
        REQUIRE(is_squarefree(d.r1 * d.r2 * d.r3));
        REQUIRE(d.r4_star == odd_radical(d.r4));
    }
}

TEST_CASE("P(a) read with j < i vanishes identically") {
    for (const auto& a : enumerate_primary(400)) {
        if (a.is_unit() || !is_squarefree(a)) continue;
        std::vector<Gaussian64> primes;
        for (const auto& [pi, e] : factor(a).factors) primes.push_back(pi);
        REQUIRE(P_strict(primes).is_zero());
        REQUIRE_FALSE(P_of(a).is_zero());
    }
}

TEST_CASE("P(a) of a prime is 1") {
    for (const auto& pi : primary_primes(500)) REQUIRE(P_of(pi) == QuarticValue::one());
}

TEST_CASE("P(a) is independent of the prime order") {
    const auto primes = primary_primes(60);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            REQUIRE(P_of_ordered({primes[i], primes[j]}) == P_of_ordered({primes[j], primes[i]}));
            for (std::size_t k = j + 1; k < primes.size() && k < j + 4; ++k) {
                std::vector<Gaussian64> v = {primes[i], primes[j], primes[k]};
                std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
                const QuarticValue ref = P_of_ordered(v);
                REQUIRE(ref == P_of(v[0] * v[1] * v[2]));
                while (std::next_permutation(v.begin(), v.end(),
                                             [](const auto& a, const auto& b) { return canonical_less(a, b); }))
                    REQUIRE(P_of_ordered(v) == ref);
            }
        }
    }
}

TEST_CASE("tail bound formula") {
    CHECK(h_tail_bound(10000, 2.5) == doctest::Approx(50.0 * std::pow(10000.0, -1.0) * std::log(10002.0)));
    CHECK(h_tail_bound(20000, 2.5) < h_tail_bound(10000, 2.5));
}

TEST_CASE("h-series matches a naive sum") {
    const HSeries series(200);
    const auto& G = RayClassGroup::instance();
    for (const auto& chi : {G.principal(), G.characters()[5]}) {
        for (const auto& [r, m] : std::vector<std::pair<Gaussian64, Gaussian64>>{
                 {g(1, 0), g(1, 0)}, {g(3, 2), g(3, 2)}, {g(3, 2), g(5, 0)}, {g(-1, 2), g(1, 0)}}) {
            const std::complex<double> s{2.25, 0.5};
            std::complex<double> naive = 0.0;
            for (const auto& n : enumerate_primary(200)) {
                if (!coprime(n, m)) continue;
                naive += chi(n) * gauss_sum(r, n).value * std::pow(static_cast<double>(n.norm()), -s);
            }
            const HValue h = series.sum(r, m, s, chi);
            CHECK(std::abs(h.value - naive) < 1e-10);
            CHECK(h.truncation_T == 200);
            CHECK(h.sigma == 2.25);
        }
    }
    CHECK_THROWS_AS(series.sum(g(1, 0), g(1, 0), {1.5, 0.0}, G.principal()), std::domain_error);
    CHECK_THROWS_AS(HSeries(50), std::domain_error);
}

TEST_CASE("h* with r2 = 1 is a single h term") {
    const auto& series = series_1e4();
    const auto& chi = RayClassGroup::instance().principal();
    const Gaussian64 r1{3, 2}, r3{-1, 2};
    const std::complex<double> s{2.5, 0.0};
    const auto star = series.h_star(r1, g(1, 0), r3, s, chi).value;
    const auto direct = series.sum(r1 * pow(r3, 3), r1, s, chi).value;
    CHECK(std::abs(star - direct) < 1e-14);
}

TEST_CASE("identity examples") {
    const auto& series = series_1e4();
    const auto& chi = RayClassGroup::instance().principal();
    const std::complex<double> s{2.5, 0.0};
    const Gaussian64 p{3, 2};

    HInstance a;
    a.r = g(-1, 2);
    CHECK(verify_identity(series, HIdentity::CoprimeSieve, a, s, chi).discrepancy == 0.0);

    HInstance b;
    b.r1 = p;
    b.r2 = g(-1, 2);
    CHECK(verify_identity(series, HIdentity::CubeFactor, b, s, chi).discrepancy == 0.0);

    HInstance c;
    c.r2 = p;
    CHECK(verify_identity(series, HIdentity::SquareFactor, c, s, chi).pass);

    HInstance d;
    d.r1 = p;
    CHECK(verify_identity(series, HIdentity::LinearFactor, d, s, chi).pass);

    HInstance bad;
    bad.r1 = p;
    bad.r2 = p;
    CHECK_THROWS_AS(verify_identity(series, HIdentity::SquareFactor, bad, s, chi), std::domain_error);
}

TEST_CASE("random identity instances pass within budget") {
    const auto& series = series_1e4();
    const auto& chars = RayClassGroup::instance().characters();
    for (const auto id : {HIdentity::CoprimeSieve, HIdentity::FourthPower, HIdentity::CubeFactor, HIdentity::SquareFactor, HIdentity::LinearFactor}) {
        CHECK(parse_identity(identity_name(id)) == id);
        int k = 0;
        for (const auto& inst : random_instances(id, 6, 99)) {
            const auto res = verify_identity(series, id, inst, {2.0, 0.5}, chars[static_cast<std::size_t>(k++ * 7 % 32)]);
            CHECK(res.pass);
        }
    }
}
