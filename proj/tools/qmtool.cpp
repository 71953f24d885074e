#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/lfunc.hpp"
#include "qm/moment.hpp"
#include "qm/parallel.hpp"
#include "qm/quartic.hpp"
#include "qm/report.hpp"
#include "qm/verify.hpp"

namespace {

using namespace qm;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCriterion = 2;

struct Common {
    unsigned threads = default_threads();
    std::string format = "csv";
    std::string out;
};

std::filesystem::path output_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QM_OUTPUT_DIR"); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
    }
    return p;
}

void emit(const Common& common, const RunConfig& config, const Table& table) {
    const std::string text = render(config, table, common.format);
    if (common.out.empty() || common.out == "-") {
        std::cout << text;
        return;
    }
    const auto path = output_path(common.out);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path.string());
    f << text;
}

Gaussian64 parse_small(const std::string& text) { return to_g64(parse_gaussian(text)); }

Table lvalue_table(const std::vector<LValue>& values, const std::vector<Gaussian64>& cs) {
    Table t;
    t.columns = {"c", "norm", "x", "L_re", "L_im", "first_re", "first_im", "second_re", "second_im", "terms", "est_error"};
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto& v = values[k];
        t.rows.push_back({to_string(cs[k]), v.conductor_norm, v.x_used, v.value.real(), v.value.imag(), v.first_sum.real(),
                          v.first_sum.imag(), v.second_sum.real(), v.second_sum.imag(), v.truncation_terms, v.est_error});
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Quartic Hecke L-function toolkit over Z[i].\n"
        "Gaussian integers are written without spaces as [sign]int, [sign][int][*]i or\n"
        "[sign]int(+|-)[int][*]i, for example 3+2i, -1-2*i, 5, -i.\n"
        "Relative --out paths are placed under $QM_OUTPUT_DIR when it is set."};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--threads", common.threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", common.out, "output file (default: stdout)");

    std::string sym_a, sym_n;
    auto* symbol = app.add_subcommand("symbol", "quartic residue symbol (a/n)_4");
    symbol->add_option("a", sym_a)->required();
    symbol->add_option("n", sym_n, "primary modulus or 1")->required();

    std::string g_r, g_n, g_method = "fast";
    auto* gauss = app.add_subcommand("gauss", "Gauss sum g(r, n)");
    gauss->add_option("r", g_r)->required();
    gauss->add_option("n", g_n, "primary modulus")->required();
    gauss->add_option("--method", g_method)->check(CLI::IsMember({"fast", "direct", "g2"}));

    std::string l_c;
    double l_x = 0.0, l_tol = 1e-10;
    bool l_conj = false;
    auto* lvalue = app.add_subcommand("lvalue", "L(1/2, chi_c) by the approximate functional equation");
    lvalue->add_option("c", l_c, "1 or squarefree c = 1 mod 16")->required();
    lvalue->add_option("--x", l_x, "AFE parameter (default sqrt(4 N(c)))");
    lvalue->add_option("--tol", l_tol)->check(CLI::PositiveNumber);
    lvalue->add_flag("--conjugate", l_conj, "use the conjugate character");

    double m_y = 100, m_x = 0.0, m_tol = 1e-8, m_cut = 1e-12;
    bool m_exclude = false;
    auto* moment = app.add_subcommand("moment", "smoothed first moment of L(1/2, chi_c)");
    moment->add_option("--y", m_y)->check(CLI::Range(10.0, 1e7));
    moment->add_option("--x", m_x, "AFE parameter (default sqrt(4 y))");
    moment->add_option("--tol", m_tol)->check(CLI::PositiveNumber);
    moment->add_option("--cut", m_cut, "weight cutoff, at most 1e-12");
    moment->add_flag("--exclude-c1", m_exclude, "drop the principal character c = 1");

    double a_tol = 1e-10;
    auto* consta = app.add_subcommand("constant-a", "the main-term constant A and its factors");
    consta->add_option("--tol", a_tol)->check(CLI::PositiveNumber);

    std::string v_suite;
    std::uint64_t v_seed = SuiteOptions{}.seed;
    auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
    verify->add_option("suite", v_suite)->required();
    verify->add_option("--seed", v_seed);

    std::int64_t s_M = 500, s_N = 500;
    int s_trials = 20;
    std::uint64_t s_seed = 1;
    double s_threshold = 50.0;
    auto* sieve = app.add_subcommand("sieve", "empirical large-sieve ratios");
    sieve->add_option("--M", s_M)->check(CLI::Range(16, 1 << 20));
    sieve->add_option("--N", s_N)->check(CLI::Range(16, 1 << 20));
    sieve->add_option("--trials", s_trials)->check(CLI::PositiveNumber);
    sieve->add_option("--seed", s_seed);
    sieve->add_option("--threshold", s_threshold);

    std::vector<double> p_y = {100, 400, 1600};
    std::int64_t p_bound = 200;
    double p_threshold = 10.0;
    auto* pv = app.add_subcommand("pv", "Polya-Vinogradov ratios for non-fourth-power a");
    pv->add_option("--y", p_y)->check(CLI::Range(10.0, 1e6));
    pv->add_option("--norm-bound", p_bound)->check(CLI::Range(2, 1 << 20));
    pv->add_option("--threshold", p_threshold);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*symbol) {
            const GaussianInt a = parse_gaussian(sym_a);
            const GaussianInt n = parse_gaussian(sym_n);
            std::cout << quartic_symbol(a, n).to_string() << "\n";
            return kExitOk;
        }
        if (*gauss) {
            const Gaussian64 r = parse_small(g_r);
            const Gaussian64 n = parse_small(g_n);
            GaussSumValue g;
            if (g_method == "direct")
                g = gauss_sum(r, n);
            else if (g_method == "g2")
                g = gauss_sum_g2(n);
            else
                g = gauss_sum_fast(r, n);
            RunConfig cfg{"gauss", {}};
            cfg.set("r", to_string(r)).set("n", to_string(n)).set("method", g_method);
            Table t;
            t.columns = {"r", "n", "norm", "re", "im", "abs2", "exact_zero"};
            t.rows.push_back({to_string(r), to_string(n), g.n_norm, g.value.real(), g.value.imag(), std::norm(g.value),
                              std::int64_t{g.exact_zero ? 1 : 0}});
            emit(common, cfg, t);
            return kExitOk;
        }
        if (*lvalue) {
            const Gaussian64 c = parse_small(l_c);
            const double x = l_x > 0.0 ? l_x : std::max(default_afe_x(c), 2.0);
            const LValue v = L_half(c, x, l_tol, l_conj);
            RunConfig cfg{"lvalue", {}};
            cfg.set("c", to_string(c)).set("x", x).set("tol", l_tol).set("conjugate", l_conj ? "1" : "0");
            emit(common, cfg, lvalue_table({v}, {c}));
            return kExitOk;
        }
        if (*moment) {
            const double x = m_x > 0.0 ? m_x : std::sqrt(4.0 * m_y);
            const MomentReport r = first_moment(m_y, x, m_tol, m_cut, !m_exclude, common.threads);
            RunConfig cfg{"moment", {}};
            cfg.set("y", m_y).set("x", x).set("tol", m_tol).set("cut", m_cut).set("include_c1", m_exclude ? "0" : "1");
            Table t;
            t.columns = {"c", "norm", "weight", "L_re", "L_im", "first_re", "first_im", "second_re", "second_im", "est_error"};
            for (const auto& row : r.per_c) {
                t.rows.push_back({to_string(row.c), row.norm, row.weight, row.L.value.real(), row.L.value.imag(),
                                  row.L.first_sum.real(), row.L.first_sum.imag(), row.L.second_sum.real(),
                                  row.L.second_sum.imag(), row.L.est_error});
            }
            t.summary = {{"conductors", static_cast<std::int64_t>(r.per_c.size())},
                         {"total_re", r.total.real()},
                         {"total_im", r.total.imag()},
                         {"sigma1_re", r.sigma1.real()},
                         {"sigma1_im", r.sigma1.imag()},
                         {"sigma2_re", r.sigma2.real()},
                         {"sigma2_im", r.sigma2.imag()},
                         {"A", r.A},
                         {"main_term", r.main_term},
                         {"ratio", r.ratio},
                         {"imag_leak", r.imag_leak}};
            emit(common, cfg, t);
            return kExitOk;
        }
        if (*consta) {
            const auto b = constant_A(a_tol);
            RunConfig cfg{"constant-a", {}};
            cfg.set("tol", a_tol);
            Table t;
            t.columns = {"quantity", "value"};
            t.rows = {{std::string("geometric"), b.geometric},
                      {std::string("residue"), b.residue},
                      {std::string("class_number"), std::int64_t{b.class_number}},
                      {std::string("zeta2"), b.zeta2},
                      {std::string("ideal_sum"), b.ideal_sum},
                      {std::string("ideal_sum_doubled"), b.ideal_sum_doubled},
                      {std::string("prime_bound"), b.prime_bound},
                      {std::string("A"), b.A}};
            emit(common, cfg, t);
            return kExitOk;
        }
        if (*verify) {
            SuiteOptions opt;
            opt.seed = v_seed;
            opt.threads = common.threads;
            std::vector<std::string> names;
            if (v_suite == "all")
                names = suite_names();
            else
                names = {v_suite};
            RunConfig cfg{"verify", {}};
            cfg.set("suite", v_suite).set("seed", std::to_string(v_seed));
            Table t;
            t.columns = {"suite", "law", "passed", "total", "worst", "status", "note"};
            bool all = true;
            for (const auto& name : names) {
                const SuiteResult res = run_suite(name, opt);
                for (const auto& law : res.laws) {
                    t.rows.push_back({name, law.law, law.passed, law.total, law.worst,
                                      std::string(law.ok() ? "PASS" : "FAIL"), law.note});
                }
                std::fprintf(stderr, "%s %s (%.1f s)\n", res.pass() ? "PASS" : "FAIL", name.c_str(), res.seconds);
                all = all && res.pass();
            }
            t.summary = {{"status", std::string(all ? "PASS" : "FAIL")}};
            emit(common, cfg, t);
            return all ? kExitOk : kExitCriterion;
        }
        if (*sieve) {
            const auto rep = sieve_ratio_report(s_M, s_N, s_trials, s_seed, s_threshold);
            RunConfig cfg{"sieve", {}};
            cfg.set("M", s_M).set("N", s_N).set("trials", std::int64_t{s_trials}).set("seed", std::to_string(s_seed));
            cfg.set("threshold", s_threshold);
            Table t;
            t.columns = {"M", "N", "trial", "lhs", "coefficient_mass", "ratio"};
            for (const auto& r : rep.rows) t.rows.push_back({r.M, r.N, std::int64_t{r.trial}, r.lhs, r.coefficient_mass, r.ratio});
            t.summary = {{"max_ratio", rep.max_ratio},
                         {"max_ratio_doubled", rep.max_ratio_doubled},
                         {"status", std::string(rep.pass ? "PASS" : "FAIL")}};
            emit(common, cfg, t);
            return rep.pass ? kExitOk : kExitCriterion;
        }
        if (*pv) {
            const auto rep = pv_ratio_report(p_y, p_bound, 1e-12, p_threshold, common.threads);
            RunConfig cfg{"pv", {}};
            std::string ys;
            for (const double y : p_y) ys += (ys.empty() ? "" : ";") + format_double(y);
            cfg.set("y", ys).set("norm_bound", p_bound).set("threshold", p_threshold);
            Table t;
            t.columns = {"a", "norm", "y", "sum_re", "sum_im", "ratio"};
            for (const auto& r : rep.rows)
                t.rows.push_back({to_string(r.a), r.norm, r.y, r.sum.real(), r.sum.imag(), r.ratio});
            t.summary = {{"max_ratio", rep.max_ratio}, {"status", std::string(rep.pass ? "PASS" : "FAIL")}};
            emit(common, cfg, t);
            return rep.pass ? kExitOk : kExitCriterion;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCriterion;
    }
    return kExitInput;
}
