#include "qm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/hfunc.hpp"
#include "qm/lfunc.hpp"
#include "qm/moment.hpp"
#include "qm/parallel.hpp"
#include "qm/quartic.hpp"
#include "qm/ray_class.hpp"

namespace qm {

bool SuiteResult::pass() const {
    return !laws.empty() && std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.ok(); });
}

namespace {

constexpr double kCatalan = 0.91596559417721901505;

void record(LawResult& law, bool ok, double err = 0.0) {
    ++law.total;
    if (ok) ++law.passed;
    if (std::isnan(err)) err = std::numeric_limits<double>::infinity();
    law.worst = std::max(law.worst, err);
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
    return v[rng() % v.size()];
}

Gaussian64 random_gaussian(std::mt19937_64& rng, std::int64_t bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    return {static_cast<std::int64_t>(rng() % span) - bound, static_cast<std::int64_t>(rng() % span) - bound};
}

Gaussian64 random_coprime(std::mt19937_64& rng, const Gaussian64& n, std::int64_t bound) {
    for (;;) {
        const Gaussian64 s = random_gaussian(rng, bound);
        if (!s.is_zero() && coprime(s, n)) return s;
    }
}

double rel_error(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// ---------------------------------------------------------------------------

SuiteResult suite_gauss_magnitude(const SuiteOptions&) {
    SuiteResult out;
    LawResult law{"|g(n)|^2 = N(n) [n squarefree], N(n) <= 2000"};
    for (const auto& n : enumerate_primary(2000)) {
        if (n.is_unit()) continue;
        const double N = static_cast<double>(n.norm());
        const double expect = is_squarefree(n) ? N : 0.0;
        const double err = std::abs(std::norm(gauss_sum(n).value) - expect) / N;
        record(law, err <= 1e-6, err);
    }
    out.laws.push_back(law);
    return out;
}

SuiteResult suite_gauss_algebra(const SuiteOptions& opt) {
    SuiteResult out;
    std::mt19937_64 rng(opt.seed);
    constexpr int kCases = 500;
    constexpr double kTol = 1e-9;
    std::vector<Gaussian64> pool;
    for (const auto& n : enumerate_primary(1500)) {
        if (!n.is_unit()) pool.push_back(n);
    }

    LawResult twist{"twist: g(rs,n) = conj((s/n)_4) g(r,n)"};
    for (int t = 0; t < kCases; ++t) {
        const Gaussian64& n = pick(pool, rng);
        const Gaussian64 r = random_gaussian(rng, 20);
        const Gaussian64 s = random_coprime(rng, n, 20);
        const auto lhs = gauss_sum(r * s, n).value;
        const auto rhs = quartic_symbol(s, n).conj().to_complex() * gauss_sum_fast(r, n).value;
        const double e = rel_error(lhs, rhs);
        record(twist, e <= kTol, e);
    }
    out.laws.push_back(twist);

    LawResult mult{"multiplicativity: g(r,n1 n2) = (n2/n1)_4 (n1/n2)_4 g(r,n1) g(r,n2)"};
    while (mult.total < kCases) {
        const Gaussian64& n1 = pick(pool, rng);
        const Gaussian64& n2 = pick(pool, rng);
        if (n1.norm() * n2.norm() > 20000 || !coprime(n1, n2)) continue;
        const Gaussian64 r = random_gaussian(rng, 20);
        const auto lhs = gauss_sum(r, n1 * n2).value;
        const auto rhs = (quartic_symbol(n2, n1) * quartic_symbol(n1, n2)).to_complex() *
                         gauss_sum_fast(r, n1).value * gauss_sum_fast(r, n2).value;
        const double e = rel_error(lhs, rhs);
        record(mult, e <= kTol, e);
    }
    out.laws.push_back(mult);

    // Prime-power branches. Each case picks (k, l) and a prime with N(pi)^l
    // small enough for direct summation, twists by a unit u coprime to pi.
    constexpr std::int64_t kDirectLimit = 30000;
    const auto primes = primary_primes(kDirectLimit);
    auto primes_for = [&](int l) {
        std::vector<Gaussian64> v;
        for (const auto& pi : primes) {
            double size = std::pow(static_cast<double>(pi.norm()), l);
            if (size <= static_cast<double>(kDirectLimit)) v.push_back(pi);
        }
        return v;
    };
    struct Branch {
        std::string name;
        std::vector<std::pair<int, int>> kl;
    };
    const std::vector<Branch> branches = {
        {"prime power, l = k+1, k = 0 mod 4", {{0, 1}}},
        {"prime power, l = k+1, k = 1 mod 4", {{1, 2}}},
        {"prime power, l = k+1, k = 2 mod 4", {{2, 3}}},
        {"prime power, l = k+1, k = 3 mod 4", {{3, 4}}},
        {"prime power, k >= l, l = 0 mod 4", {{4, 4}, {5, 4}, {6, 4}}},
        {"prime power, otherwise zero", {{1, 1}, {2, 1}, {0, 2}, {2, 2}, {3, 2}, {0, 3}, {1, 3}, {3, 3}, {0, 4}, {1, 4}, {2, 4}}},
    };
    for (const auto& br : branches) {
        LawResult law{br.name};
        for (int t = 0; t < kCases; ++t) {
            const auto [k, l] = br.kl[rng() % br.kl.size()];
            const auto candidates = primes_for(l);
            const Gaussian64& pi = pick(candidates, rng);
            const Gaussian64 u = random_coprime(rng, pi, 20);
            const Gaussian64 r = pow(pi, static_cast<unsigned>(k)) * u;
            const Gaussian64 n = pow(pi, static_cast<unsigned>(l));
            const auto lhs = gauss_sum(r, n).value;
            const auto table = gauss_prime_power_table(pi, k, l, GaussPrimeCache::global());
            const auto rhs = quartic_symbol(u, n).conj().to_complex() * table.value;
            const double e = rel_error(lhs, rhs);
            const double e_fast = rel_error(lhs, gauss_sum_fast(r, n).value);
            record(law, e <= kTol && e_fast <= kTol, std::max(e, e_fast));
        }
        out.laws.push_back(law);
    }
    return out;
}

SuiteResult suite_symbols(const SuiteOptions& opt) {
    SuiteResult out;
    std::mt19937_64 rng(opt.seed + 1);
    const auto primes = primary_primes(10000);
    LawResult sym{"(a/pi)_4 against the prime oracle, N(pi) <= 10^4"};
    LawResult sup_i{"(i/pi)_4 = i^((1-a)/2)"};
    LawResult sup_1i{"(1+i/pi)_4 = i^((a-b-1-b^2)/4)"};
    LawResult rec{"reciprocity for prime pairs"};
    for (std::size_t j = 0; j < primes.size(); ++j) {
        const Gaussian64& pi = primes[j];
        const GaussianInt big = to_big(pi);
        for (int t = 0; t < 3; ++t) {
            const Gaussian64 a = random_gaussian(rng, 1000);
            record(sym, quartic_symbol(a, pi) == oracle::quartic_symbol_prime(to_big(a), big));
        }
        record(sup_i, supplement_i(big) == oracle::quartic_symbol_prime(GaussianInt{0, 1}, big));
        record(sup_1i, supplement_1plusi(big) == oracle::quartic_symbol_prime(GaussianInt{1, 1}, big));
        const Gaussian64& rho = primes[(j + 1) % primes.size()];
        const QuarticValue lhs = oracle::quartic_symbol_prime(big, to_big(rho));
        QuarticValue rhs = oracle::quartic_symbol_prime(to_big(rho), big);
        if (psi(pi, rho) < 0) rhs *= QuarticValue::i_pow(2);
        record(rec, lhs == rhs && reciprocity_check(big, to_big(rho)));
    }
    out.laws.push_back(sym);
    out.laws.push_back(sup_i);
    out.laws.push_back(sup_1i);
    out.laws.push_back(rec);

    LawResult comp{"composite pairs: reciprocity, supplements, factor-based symbol"};
    const auto pool = enumerate_primary(20000);
    while (comp.total < 200) {
        const Gaussian64& m = pick(pool, rng);
        const Gaussian64& n = pick(pool, rng);
        if (m.is_unit() || n.is_unit() || !coprime(m, n)) continue;
        if (factor(m).factors.size() + factor(n).factors.size() < 3) continue;
        const GaussianInt bm = to_big(m), bn = to_big(n);
        const QuarticValue mn = oracle::quartic_symbol(bm, bn);
        QuarticValue nm = oracle::quartic_symbol(bn, bm);
        if (psi(m, n) < 0) nm *= QuarticValue::i_pow(2);
        bool ok = mn == nm && reciprocity_check(bm, bn) && quartic_symbol(m, n) == mn;
        ok = ok && supplement_i(bn) == oracle::quartic_symbol(GaussianInt{0, 1}, bn);
        ok = ok && supplement_1plusi(bn) == oracle::quartic_symbol(GaussianInt{1, 1}, bn);
        record(comp, ok);
    }
    out.laws.push_back(comp);
    return out;
}

std::vector<Gaussian64> squarefree_conductors(std::int64_t X) {
    std::vector<Gaussian64> out;
    for (const auto& c : enumerate_c_1mod16(X)) {
        if (!c.is_unit() && is_squarefree(c)) out.push_back(c);
    }
    return out;
}

SuiteResult suite_root_number(const SuiteOptions& opt) {
    SuiteResult out;
    LawResult law{"W(chi_c) by trace sum = g(c), squarefree c = 1 mod 16, N(c) <= 5000"};
    const auto cs = squarefree_conductors(5000);
    const auto diffs = parallel_map<double>(cs.size(), opt.threads,
                                            [&](std::size_t k) { return root_number_routes(cs[k]).relative_difference; });
    for (const double d : diffs) record(law, d <= 1e-9, d);
    out.laws.push_back(law);
    return out;
}

SuiteResult suite_afe(const SuiteOptions& opt) {
    SuiteResult out;
    std::mt19937_64 rng(opt.seed + 2);
    auto cs = squarefree_conductors(5000);
    for (std::size_t j = cs.size(); j > 1; --j) std::swap(cs[j - 1], cs[rng() % j]);
    cs.resize(20);
    std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
    constexpr double kTol = 1e-10;

    struct Row {
        double x_spread;
        double fe_ratio;
        double conj_error;
    };
    const auto rows = parallel_map<Row>(cs.size(), opt.threads, [&](std::size_t k) {
        const Gaussian64& c = cs[k];
        const double N = static_cast<double>(c.norm());
        std::vector<std::complex<double>> vals;
        for (const double x : {10.0, std::sqrt(4.0 * N), 2.0 * N}) vals.push_back(L_half(c, x, kTol).value);
        double spread = 0.0;
        for (const auto& a : vals)
            for (const auto& b : vals) spread = std::max(spread, std::abs(a - b));
        const auto fe = functional_equation_check(c, kTol);
        const auto conj_val = L_half(c, std::sqrt(4.0 * N), kTol, true).value;
        return Row{spread, fe.discrepancy / (1.0 + std::abs(fe.lambda)), std::abs(conj_val - std::conj(vals[1]))};
    });
    LawResult xind{"x-independence over x in {10, sqrt(4N), 2N}, 20 conductors"};
    LawResult fe{"functional equation Lambda = W N^(-1/2) Lambda(conj)"};
    LawResult cj{"conjugate character gives the conjugate value"};
    for (const auto& r : rows) {
        record(xind, r.x_spread <= 2e-8, r.x_spread);
        record(fe, r.fe_ratio <= 1e-6, r.fe_ratio);
        record(cj, r.conj_error <= 2e-8, r.conj_error);
    }
    LawResult principal{"c = 1 reproduces zeta(1/2) beta(1/2)"};
    const double zk = riemann_zeta(0.5) * dirichlet_beta(0.5);
    for (const double x : {3.0, 10.0, 40.0}) {
        const double e = std::abs(L_half(Gaussian64{1, 0}, x, kTol).value - zk);
        record(principal, e <= 2e-8, e);
    }
    out.laws = {xind, fe, cj, principal};
    return out;
}

SuiteResult suite_hfunc(const SuiteOptions& opt) {
    SuiteResult out;
    const HSeries series(opt.hfunc_T);
    const HSeries doubled(2 * opt.hfunc_T);
    const auto& chars = RayClassGroup::instance().characters();
    const std::complex<double> ss[3] = {{2.5, 0.0}, {2.25, 0.0}, {2.0, 0.5}};
    LawResult tail{"tail budget honest under T -> 2T"};
    for (const auto id : {HIdentity::CoprimeSieve, HIdentity::FourthPower, HIdentity::CubeFactor, HIdentity::SquareFactor, HIdentity::LinearFactor}) {
        const auto inst = random_instances(id, opt.hfunc_instances, opt.seed);
        struct Row {
            IdentityCheck checks[3];
            double doubling[3];
            double budget[3];
        };
        const auto rows = parallel_map<Row>(inst.size(), opt.threads, [&](std::size_t k) {
            Row row{};
            const RayClassChar& chi = chars[k % chars.size()];
            Gaussian64 r = inst[k].r;
            if (id != HIdentity::CoprimeSieve) {
                r = inst[k].r1 * inst[k].r2 * inst[k].r2 * inst[k].r3 * inst[k].r3 * inst[k].r3;
                const Gaussian64 r4sq = inst[k].r4 * inst[k].r4;
                r = r * r4sq * r4sq;
            }
            for (int j = 0; j < 3; ++j) {
                row.checks[j] = verify_identity(series, id, inst[k], ss[j], chi);
                const HValue a = series.h(r, ss[j], chi);
                const HValue b = doubled.h(r, ss[j], chi);
                row.doubling[j] = std::abs(a.value - b.value);
                row.budget[j] = a.tail_bound;
            }
            return row;
        });
        LawResult law{std::string(identity_name(id)) + " identity within tail budget"};
        for (const auto& row : rows) {
            for (int j = 0; j < 3; ++j) {
                record(law, row.checks[j].pass, row.checks[j].discrepancy / row.checks[j].budget);
                record(tail, row.doubling[j] <= row.budget[j], row.doubling[j] / row.budget[j]);
            }
        }
        law.note = "worst = discrepancy / budget";
        out.laws.push_back(law);
    }
    tail.note = "worst = |h(2T) - h(T)| / tail_bound(T)";
    out.laws.push_back(tail);
    return out;
}

SuiteResult suite_p_order(const SuiteOptions&) {
    SuiteResult out;
    LawResult law{"P(a) independent of prime order, 2-3 primes, N(a) <= 3000"};
    for (const auto& a : enumerate_primary(3000)) {
        if (a.is_unit()) continue;
        const auto f = factor(a);
        if (f.factors.size() < 2 || f.factors.size() > 3) continue;
        if (std::any_of(f.factors.begin(), f.factors.end(), [](const auto& pe) { return pe.second > 1; })) continue;
        std::vector<Gaussian64> primes;
        for (const auto& pe : f.factors) primes.push_back(pe.first);
        const QuarticValue ref = P_of_ordered(primes);
        bool ok = !ref.is_zero();
        std::sort(primes.begin(), primes.end(), [](const auto& x, const auto& y) {
            return std::make_pair(x.re, x.im) < std::make_pair(y.re, y.im);
        });
        do {
            ok = ok && P_of_ordered(primes) == ref;
        } while (std::next_permutation(primes.begin(), primes.end(), [](const auto& x, const auto& y) {
            return std::make_pair(x.re, x.im) < std::make_pair(y.re, y.im);
        }));
        record(law, ok);
    }
    out.laws.push_back(law);
    return out;
}

SuiteResult suite_ray_class(const SuiteOptions&) {
    SuiteResult out;
    const auto& G = RayClassGroup::instance();
    const auto& chars = G.characters();
    const int n = G.order();

    LawResult order{"#h_(16) = 128 / 4 = 32"};
    record(order, G.residue_unit_count() == 128 && n == 32 && static_cast<int>(chars.size()) == 32);
    out.laws.push_back(order);

    LawResult orth{"sum_g chi(g) = 0 for non-principal chi (exact and floating)"};
    for (const auto& chi : chars) {
        int counts[8] = {};
        std::complex<double> total{0.0, 0.0};
        for (int g = 0; g < n; ++g) {
            ++counts[chi.exponent_at_element(g)];
            total += RayClassChar::root_of_unity(chi.exponent_at_element(g));
        }
        // 1, z, z^2, z^3 are a Q-basis of Q(zeta_8) and z^4 = -1.
        bool exact_zero = true;
        for (int k = 0; k < 4; ++k) exact_zero = exact_zero && counts[k] == counts[k + 4];
        if (chi.is_principal())
            record(orth, counts[0] == n);
        else
            record(orth, exact_zero && std::abs(total) <= 1e-12, std::abs(total));
    }
    out.laws.push_back(orth);

    LawResult dual{"sum_chi chi(g) = 0 for g != 1"};
    for (int g = 0; g < n; ++g) {
        int counts[8] = {};
        for (const auto& chi : chars) ++counts[chi.exponent_at_element(g)];
        const bool identity = g == G.element_index(Gaussian64{1, 0});
        bool zero = true;
        for (int k = 0; k < 4; ++k) zero = zero && counts[k] == counts[k + 4];
        record(dual, identity ? counts[0] == n : zero);
    }
    out.laws.push_back(dual);

    LawResult orbit{"constant on unit orbits and multiplicative"};
    for (const auto& chi : chars) {
        bool ok = true;
        for (int re = 0; re < 16; ++re) {
            for (int im = 0; im < 16; ++im) {
                const Gaussian64 z{re, im};
                if (!z.is_odd()) continue;
                ok = ok && chi.exponent_at(z) == chi.exponent_at(z.mul_i());
                for (const auto& w : G.representatives())
                    ok = ok && chi.exponent_at(z * w) == (chi.exponent_at(z) + chi.exponent_at(w)) % 8;
            }
        }
        record(orbit, ok);
    }
    out.laws.push_back(orbit);

    LawResult closure{"closed under products and conjugation, all distinct"};
    for (const auto& a : chars) {
        bool ok = std::count(chars.begin(), chars.end(), a.conj()) == 1;
        for (const auto& b : chars) ok = ok && std::count(chars.begin(), chars.end(), a * b) == 1;
        record(closure, ok);
    }
    out.laws.push_back(closure);

    LawResult psi_law{"psi_a is a ray class character mod 16"};
    for (const auto& a : G.representatives()) {
        const RayClassChar p = G.psi_character(a);
        bool ok = std::count(chars.begin(), chars.end(), p) == 1;
        for (const auto& c : G.representatives()) ok = ok && (p.exponent_at(c) == 0) == (psi(a, c) == 1);
        record(psi_law, ok);
    }
    out.laws.push_back(psi_law);
    return out;
}

SuiteResult suite_constant_a(const SuiteOptions&) {
    SuiteResult out;
    const auto b = constant_A(1e-10);
    LawResult geo{"geometric factor 2 + sqrt(2)"};
    record(geo, b.geometric == 2.0 + std::sqrt(2.0));
    LawResult res{"residue = pi/4"};
    record(res, std::abs(b.residue - std::numbers::pi / 4.0) <= 1e-8, std::abs(b.residue - std::numbers::pi / 4.0));
    LawResult z2{"zeta_K(2) = (pi^2/6) G"};
    const double z2_ref = std::numbers::pi * std::numbers::pi / 6.0 * kCatalan;
    record(z2, std::abs(b.zeta2 - z2_ref) <= 1e-8, std::abs(b.zeta2 - z2_ref));
    LawResult cls{"class number 32"};
    record(cls, b.class_number == 32);
    LawResult dbl{"ideal sum stable under truncation doubling"};
    const double d = std::abs(b.ideal_sum - b.ideal_sum_doubled);
    record(dbl, d <= 1e-8, d);
    LawResult pos{"A > 0"};
    record(pos, b.A > 0.0, 0.0);
    out.laws = {geo, res, z2, cls, dbl, pos};
    return out;
}

SuiteResult suite_bounds(const SuiteOptions& opt) {
    SuiteResult out;
    const auto pv = pv_ratio_report({100.0, 400.0, 1600.0}, 200, 1e-12, 10.0, opt.threads);
    LawResult pvl{"Polya-Vinogradov ratio <= 10"};
    for (const auto& row : pv.rows) record(pvl, row.ratio <= pv.threshold, row.ratio);
    out.laws.push_back(pvl);
    const auto sv = sieve_ratio_report(500, 500, 20, opt.seed);
    LawResult svl{"large sieve ratio <= 50, stable under doubling"};
    record(svl, sv.pass, std::max(sv.max_ratio, sv.max_ratio_doubled));
    svl.note = "max ratio at (M,N) and (2M,2N): " + std::to_string(sv.max_ratio) + ", " +
               std::to_string(sv.max_ratio_doubled);
    out.laws.push_back(svl);
    return out;
}

SuiteResult suite_moment(const SuiteOptions& opt) {
    SuiteResult out;
    const std::vector<double> ys = {100, 200, 400, 800, 1600, 3200};
    LawResult regroup{"Sigma1 + Sigma2 = sum of weighted rows"};
    std::vector<MomentReport> reps;
    for (const double y : ys) {
        reps.push_back(first_moment(y, std::sqrt(4.0 * y), 1e-8, 1e-12, true, opt.threads));
        const auto& r = reps.back();
        const double e = std::abs(r.total - weighted_row_sum(r)) / std::max(1.0, std::abs(r.total));
        record(regroup, e <= 1e-12, e);
    }
    LawResult leak{"|Im total| / |total| < 0.05 at y = 3200"};
    record(leak, reps.back().imag_leak < 0.05, reps.back().imag_leak);
    LawResult shrink{"|ratio - 1| smaller at y = 3200 than at y = 100"};
    const double d0 = std::abs(reps.front().ratio - 1.0);
    const double d1 = std::abs(reps.back().ratio - 1.0);
    record(shrink, d1 < d0, d1);
    shrink.note = "deviation " + std::to_string(d0) + " -> " + std::to_string(d1);
    LawResult band{"ratio in [0.5, 1.5] at y = 3200"};
    record(band, reps.back().ratio >= 0.5 && reps.back().ratio <= 1.5, reps.back().ratio);
    out.laws = {regroup, leak, shrink, band};
    return out;
}

const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& registry() {
    static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> r = {
        {"gauss-magnitude", suite_gauss_magnitude},
        {"gauss-algebra", suite_gauss_algebra},
        {"symbols", suite_symbols},
        {"root-number", suite_root_number},
        {"afe", suite_afe},
        {"hfunc-identities", suite_hfunc},
        {"p-order", suite_p_order},
        {"ray-class", suite_ray_class},
        {"constant-a", suite_constant_a},
        {"bounds", suite_bounds},
        {"moment", suite_moment},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"gauss-magnitude", "gauss-algebra", "symbols",   "root-number",
                                                   "afe",             "hfunc-identities", "p-order", "ray-class",
                                                   "constant-a",      "bounds",          "moment"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult out = it->second(options);
    out.suite = name;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace qm
