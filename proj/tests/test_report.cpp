#include <cstdlib>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qm/parallel.hpp"
#include "qm/kahan.hpp"
#include "qm/report.hpp"

using namespace qm;

namespace {

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("doubles round-trip through the text format") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 10000; ++k) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        REQUIRE(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("CSV layout") {
    RunConfig cfg{"demo", {}};
    cfg.set("y", 100.0).set("n", std::int64_t{7}).set("name", "a,b");
    Table t;
    t.columns = {"c", "value"};
    t.rows = {{std::string("3+2i"), 0.25}, {std::string("x\"y"), std::int64_t{-3}}};
    t.summary = {{"total", 1.5}};
    const auto l = lines(to_csv(cfg, t));
    REQUIRE(l.size() == 9);
    CHECK(l[0] == "# schema=v1");
    CHECK(l[1] == "# command=demo");
    CHECK(l[2] == "# config.y=100");
    CHECK(l[3] == "# config.n=7");
    CHECK(l[5] == "# summary.total=1.5");
    CHECK(l[6] == "c,value");
    CHECK(l[7] == "3+2i,0.25");
    CHECK(l[8] == "\"x\"\"y\",-3");
}

TEST_CASE("JSON mirrors CSV") {
    RunConfig cfg{"demo", {}};
    cfg.set("y", 0.1);
    Table t;
    t.columns = {"c", "value"};
    t.rows = {{std::string("1"), 0.1}};
    t.summary = {{"total", std::int64_t{2}}};
    const auto j = nlohmann::json::parse(to_json(cfg, t));
    CHECK(j["schema"] == "v1");
    CHECK(j["command"] == "demo");
    CHECK(j["config"]["y"] == "0.10000000000000001");
    CHECK(j["summary"]["total"] == 2);
    CHECK(j["rows"][0]["value"].get<double>() == 0.1);
    CHECK(render(cfg, t, "json") == to_json(cfg, t));
    CHECK_THROWS_AS(render(cfg, t, "xml"), std::invalid_argument);
}

TEST_CASE("compensated summation") {
    CompensatedSum s;
    s.add(1.0);
    for (int k = 0; k < 1000; ++k) s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-13).epsilon(1e-6));
}

TEST_CASE("parallel_map keeps index order") {
    const auto v = parallel_map<int>(1000, 7, [](std::size_t i) { return static_cast<int>(i * i % 97); });
    for (std::size_t i = 0; i < v.size(); ++i) REQUIRE(v[i] == static_cast<int>(i * i % 97));
    CHECK_THROWS(parallel_map<int>(10, 3, [](std::size_t i) -> int {
        if (i == 5) throw std::runtime_error("boom");
        return 0;
    }));
}
