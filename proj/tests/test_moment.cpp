#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/moment.hpp"

using namespace qm;

TEST_CASE("moment conductors") {
    const auto cs = moment_conductors(100.0, 1e-12);
    REQUIRE_FALSE(cs.empty());
    CHECK(cs.front() == Gaussian64{1, 0});
    const double nmax = -100.0 * std::log(1e-12);
    std::size_t expected = 1;
    for (const auto& c : enumerate_c_1mod16(static_cast<std::int64_t>(nmax)))
        if (!c.is_unit() && is_squarefree(c)) ++expected;
    CHECK(cs.size() == expected);
    for (const auto& c : cs) {
        if (c.is_unit()) continue;
        CHECK(floor_mod(c.re, 16) == 1);
        CHECK(floor_mod(c.im, 16) == 0);
        CHECK(std::find(cs.begin(), cs.end(), c.conj()) != cs.end());
    }
    CHECK(moment_conductors(100.0, 1e-12, false).size() == cs.size() - 1);
}

TEST_CASE("moment regression at y = 100") {
    const auto r = first_moment(100.0, 20.0, 1e-8, 1e-12);
    CHECK(r.per_c.size() == 34);
    CHECK(r.total.real() == doctest::Approx(-0.39363814798507801).epsilon(1e-12));
    CHECK(std::abs(r.total.imag()) < 1e-14);
    CHECK(r.total == r.sigma1 + r.sigma2);
    CHECK(std::abs(r.total - weighted_row_sum(r)) <= 1e-12 * std::abs(r.total));
    const auto alt = first_moment(100.0, std::sqrt(400.0) * 1.7, 1e-10, 1e-12);
    CHECK(std::abs(alt.total - r.total) < 1e-8);
    const auto finer = first_moment(100.0, 20.0, 1e-8, 1e-14);
    CHECK(std::abs(finer.total - r.total) <= 10.0 * 1e-12 * static_cast<double>(finer.per_c.size()));
    const auto split = sigma_split(100.0, 20.0, 1e-8, 1e-12);
    CHECK(split.sigma1 == r.sigma1);
    CHECK(split.sigma2 == r.sigma2);
}

TEST_CASE("moment is independent of the thread count") {
    const auto a = first_moment(200.0, std::sqrt(800.0), 1e-8, 1e-12, true, 1);
    const auto b = first_moment(200.0, std::sqrt(800.0), 1e-8, 1e-12, true, 4);
    REQUIRE(a.per_c.size() == b.per_c.size());
    CHECK(a.total == b.total);
    for (std::size_t k = 0; k < a.per_c.size(); ++k) CHECK(a.per_c[k].L.value == b.per_c[k].L.value);
    CHECK_THROWS_AS(first_moment(5.0, 3.0, 1e-8), std::domain_error);
}

TEST_CASE("constant A") {
    const auto b = constant_A(1e-10);
    CHECK(b.geometric == 2.0 + std::sqrt(2.0));
    CHECK(std::abs(b.residue - std::numbers::pi / 4.0) < 1e-12);
    CHECK(b.class_number == 32);
    const double G = boost::math::constants::catalan<double>();
    CHECK(std::abs(b.zeta2 - std::numbers::pi * std::numbers::pi / 6.0 * G) < 1e-12);
    CHECK(std::abs(b.ideal_sum - b.ideal_sum_doubled) < 1e-8);
    CHECK(b.A == doctest::Approx(b.geometric * b.residue / (32.0 * b.zeta2) * b.ideal_sum).epsilon(1e-14));
    CHECK(b.A == doctest::Approx(0.041232013).epsilon(1e-8));
}

TEST_CASE("ideal sum: Euler product against direct summation") {
    const double euler = ideal_sum_euler(100000);
    const double direct = ideal_sum_direct(200000);
    CHECK(std::abs(euler - direct) < 1e-4);
    CHECK(std::abs(ideal_sum_euler(1000) - euler) < 1e-5);
}

TEST_CASE("Polya-Vinogradov report") {
    const auto rep = pv_ratio_report({100.0, 400.0}, 60, 1e-12, 10.0);
    CHECK(rep.pass);
    bool saw = false;
    for (const auto& row : rep.rows) {
        CHECK(row.ratio == doctest::Approx(std::abs(row.sum) / std::sqrt(static_cast<double>(row.norm))));
        CHECK(row.ratio <= rep.max_ratio);
        const auto f = factor(row.a);
        bool fourth = true;
        for (const auto& [pi, e] : f.factors) fourth = fourth && e % 4 == 0;
        CHECK_FALSE(fourth);
        if (row.a == Gaussian64{3, 2} && row.y == 400.0) saw = true;
    }
    CHECK(saw);
}

TEST_CASE("large sieve report") {
    const auto a = sieve_ratio_report(200, 200, 5, 42);
    const auto b = sieve_ratio_report(200, 200, 5, 42);
    REQUIRE(a.rows.size() == 10);
    for (std::size_t k = 0; k < a.rows.size(); ++k) CHECK(a.rows[k].ratio == b.rows[k].ratio);
    CHECK(a.pass);
    CHECK(a.max_ratio <= 50.0);
    CHECK(a.rows.back().M == 400);
    const auto c = sieve_ratio_report(200, 200, 5, 43);
    CHECK(c.rows[0].ratio != a.rows[0].ratio);
}
