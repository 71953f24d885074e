#include "qm/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qm/enumerate.hpp"
#include "qm/factor.hpp"
#include "qm/kahan.hpp"
#include "qm/parallel.hpp"
#include "qm/quartic.hpp"
#include "qm/ray_class.hpp"

namespace qm {

namespace {

std::int64_t weight_norm_bound(double y, double cut) {
    if (!(cut > 0.0 && cut < 1.0)) throw std::domain_error("weight cutoff must lie in (0, 1)");
    return static_cast<std::int64_t>(std::floor(y * std::log(1.0 / cut)));
}

}  // namespace

std::vector<Gaussian64> moment_conductors(double y, double cut, bool include_c1) {
    std::vector<Gaussian64> out;
    for (const auto& c : enumerate_c_1mod16(std::max<std::int64_t>(1, weight_norm_bound(y, cut)))) {
        if (c.is_unit()) {
            if (include_c1) out.push_back(c);
            continue;
        }
        if (std::exp(-static_cast<double>(c.norm()) / y) < cut) continue;
        if (is_squarefree(c)) out.push_back(c);
    }
    return out;
}

MomentReport first_moment(double y, double x, double tol, double cut, bool include_c1, unsigned threads) {
    if (!(y >= 10.0)) throw std::domain_error("first_moment: y must be at least 10");
    if (!(x > 1.0)) throw std::domain_error("first_moment: x must exceed 1");
    if (!(tol > 0.0)) throw std::domain_error("first_moment: tol must be positive");
    if (!(cut > 0.0 && cut <= 1e-12)) throw std::domain_error("first_moment: cut must lie in (0, 1e-12]");

    MomentReport rep;
    rep.y = y;
    rep.x = x;
    rep.tol = tol;
    rep.cut = cut;
    rep.include_c1 = include_c1;
    const auto conductors = moment_conductors(y, cut, include_c1);

    std::int64_t bound = 1;
    for (const auto& c : conductors) bound = std::max(bound, afe_norm_bound(c.norm(), x, tol));
    const auto ideals = enumerate_ideals(bound);

    rep.per_c = parallel_map<MomentRow>(conductors.size(), threads, [&](std::size_t k) {
        const Gaussian64& c = conductors[k];
        MomentRow row;
        row.c = c;
        row.norm = c.norm();
        row.L = L_half(c, x, tol, false, ideals, bound);
        row.weight = std::exp(-static_cast<double>(row.norm) / y);
        return row;
    });

    ComplexCompensatedSum s1, s2;
    for (const auto& row : rep.per_c) {
        s1.add(row.weight * row.L.first_sum);
        s2.add(row.weight * row.L.second_sum);
    }
    rep.sigma1 = s1.value();
    rep.sigma2 = s2.value();
    rep.total = rep.sigma1 + rep.sigma2;
    rep.A = constant_A(1e-12).A;
    rep.main_term = rep.A * y;
    rep.ratio = rep.total.real() / rep.main_term;
    rep.imag_leak = std::abs(rep.total) > 0.0 ? std::abs(rep.total.imag()) / std::abs(rep.total) : 0.0;
    return rep;
}

std::complex<double> weighted_row_sum(const MomentReport& report) {
    ComplexCompensatedSum acc;
    for (const auto& row : report.per_c) acc.add(row.weight * row.L.value);
    return acc.value();
}

SigmaSplit sigma_split(double y, double x, double tol, double cut, unsigned threads) {
    const MomentReport rep = first_moment(y, x, tol, cut, true, threads);
    return {rep.sigma1, rep.sigma2};
}

// ---------------------------------------------------------------------------

double ideal_sum_euler(std::int64_t P) {
    CompensatedSum log_prod;
    for (const auto p : rational_primes(P)) {
        if (p == 2) continue;
        const double q = static_cast<double>(p);
        if (p % 4 == 1) {
            log_prod.add(2.0 * std::log1p(-1.0 / (q * q * (q + 1.0))));
        } else {
            const double n = q * q;
            log_prod.add(std::log1p(-1.0 / (n * n * (n + 1.0))));
        }
    }
    // (2/3) from the prime above 2, (3/4) zeta_K(2) from the odd part of zeta_K(2).
    return 0.5 * zeta_K(2.0) * std::exp(log_prod.value());
}

double ideal_sum_direct(std::int64_t T) {
    CompensatedSum acc;
    for (const auto& a : enumerate_primary(T)) {
        double term = 1.0 / (static_cast<double>(a.norm()) * static_cast<double>(a.norm()));
        if (!a.is_unit()) {
            for (const auto& [pi, e] : factor(a).factors) term /= 1.0 + 1.0 / static_cast<double>(pi.norm());
        }
        acc.add(term);
    }
    return acc.value() * 2.0 / 3.0;
}

ConstantABreakdown constant_A(double tol) {
    if (!(tol > 0.0)) throw std::domain_error("constant_A: tol must be positive");
    ConstantABreakdown b;
    b.geometric = 2.0 + std::numbers::sqrt2;
    b.residue = zeta_K_residue();
    b.class_number = RayClassGroup::instance().order();
    b.zeta2 = zeta_K(2.0);
    // The omitted factors satisfy |log| <= sum_{p > P} 2/p^3 < 1/P^2.
    b.prime_bound = std::max<std::int64_t>(1000, static_cast<std::int64_t>(std::ceil(std::sqrt(1.0 / tol))));
    b.ideal_sum = ideal_sum_euler(b.prime_bound);
    b.ideal_sum_doubled = ideal_sum_euler(2 * b.prime_bound);
    b.A = b.geometric * b.residue / (b.class_number * b.zeta2) * b.ideal_sum;
    return b;
}

// ---------------------------------------------------------------------------

namespace {

bool is_fourth_power(const Gaussian64& a) {
    if (a.is_unit()) return true;
    const auto f = factor(a);
    if (f.unit_exp != 0 || f.r % 4 != 0) return false;
    return std::all_of(f.factors.begin(), f.factors.end(), [](const auto& pe) { return pe.second % 4 == 0; });
}

}  // namespace

PvReport pv_ratio_report(const std::vector<double>& ys, std::int64_t norm_bound, double cut, double threshold,
                         unsigned threads) {
    if (ys.empty()) throw std::domain_error("pv_ratio_report: no y values");
    double ymax = 0.0;
    for (const double y : ys) {
        if (!(y >= 10.0)) throw std::domain_error("pv_ratio_report: y must be at least 10");
        ymax = std::max(ymax, y);
    }
    const auto cs = enumerate_primary(weight_norm_bound(ymax, cut));
    std::vector<Gaussian64> as;
    for (const auto& a : enumerate_primary(norm_bound)) {
        if (!is_fourth_power(a)) as.push_back(a);
    }
    auto per_a = parallel_map<std::vector<PvRow>>(as.size(), threads, [&](std::size_t k) {
        const Gaussian64& a = as[k];
        const QuarticCharacter chi(a, /*with_tables=*/true);
        std::vector<std::int8_t> sym(cs.size());
        for (std::size_t j = 0; j < cs.size(); ++j) {
            const QuarticValue v = chi(cs[j]);
            sym[j] = v.is_zero() ? std::int8_t{-1} : static_cast<std::int8_t>(v.exponent());
        }
        std::vector<PvRow> rows;
        for (const double y : ys) {
            CompensatedSum bins[4];
            for (std::size_t j = 0; j < cs.size(); ++j) {
                if (sym[j] < 0) continue;
                const double w = std::exp(-static_cast<double>(cs[j].norm()) / y);
                if (w < cut) break;
                bins[sym[j]].add(w);
            }
            PvRow row;
            row.a = a;
            row.norm = a.norm();
            row.y = y;
            row.sum = {bins[0].value() - bins[2].value(), bins[1].value() - bins[3].value()};
            row.ratio = std::abs(row.sum) / std::sqrt(static_cast<double>(row.norm));
            rows.push_back(row);
        }
        return rows;
    });
    PvReport rep;
    rep.threshold = threshold;
    for (auto& rows : per_a) {
        for (auto& row : rows) {
            rep.max_ratio = std::max(rep.max_ratio, row.ratio);
            rep.rows.push_back(row);
        }
    }
    rep.pass = rep.max_ratio <= threshold;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Gaussian64> squarefree_primary(std::int64_t X) {
    std::vector<Gaussian64> out;
    for (const auto& n : enumerate_primary(X)) {
        if (n.is_unit() || is_squarefree(n)) out.push_back(n);
    }
    return out;
}

double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<SieveTrial> sieve_trials(std::int64_t M, std::int64_t N, int trials, std::mt19937_64& rng) {
    const auto ms = squarefree_primary(M);
    const auto ns = squarefree_primary(N);
    std::vector<std::int8_t> sym(ms.size() * ns.size());
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const QuarticCharacter chi(ms[i]);
        for (std::size_t j = 0; j < ns.size(); ++j) {
            const QuarticValue v = chi(ns[j]);
            sym[i * ns.size() + j] = v.is_zero() ? std::int8_t{-1} : static_cast<std::int8_t>(v.exponent());
        }
    }
    const double scale =
        static_cast<double>(M) + static_cast<double>(N) + std::pow(static_cast<double>(M) * static_cast<double>(N), 2.0 / 3.0);
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::vector<SieveTrial> out;
    std::vector<std::complex<double>> coef(ns.size());
    for (int t = 0; t < trials; ++t) {
        CompensatedSum mass;
        for (auto& a : coef) {
            a = std::polar(1.0, 2.0 * std::numbers::pi * unit_interval(rng));
            mass.add(std::norm(a));
        }
        CompensatedSum lhs;
        for (std::size_t i = 0; i < ms.size(); ++i) {
            ComplexCompensatedSum inner;
            for (std::size_t j = 0; j < ns.size(); ++j) {
                const auto k = sym[i * ns.size() + j];
                if (k >= 0) inner.add(coef[j] * units[k]);
            }
            lhs.add(std::norm(inner.value()));
        }
        SieveTrial row;
        row.M = M;
        row.N = N;
        row.trial = t;
        row.lhs = lhs.value();
        row.coefficient_mass = mass.value();
        row.ratio = row.lhs / (scale * row.coefficient_mass);
        out.push_back(row);
    }
    return out;
}

}  // namespace

SieveReport sieve_ratio_report(std::int64_t M, std::int64_t N, int trials, std::uint64_t seed, double threshold) {
    if (M < 16 || N < 16) throw std::domain_error("sieve_ratio_report: M and N must be at least 16");
    if (trials < 1) throw std::domain_error("sieve_ratio_report: trials must be positive");
    SieveReport rep;
    rep.M = M;
    rep.N = N;
    rep.trials = trials;
    rep.seed = seed;
    rep.threshold = threshold;
    std::mt19937_64 rng(seed);
    rep.rows = sieve_trials(M, N, trials, rng);
    for (const auto& r : rep.rows) rep.max_ratio = std::max(rep.max_ratio, r.ratio);
    const auto doubled = sieve_trials(2 * M, 2 * N, trials, rng);
    for (const auto& r : doubled) {
        rep.max_ratio_doubled = std::max(rep.max_ratio_doubled, r.ratio);
        rep.rows.push_back(r);
    }
    const double q = rep.max_ratio_doubled / rep.max_ratio;
    rep.pass = rep.max_ratio <= threshold && rep.max_ratio_doubled <= threshold && q >= 0.5 && q <= 2.0;
    return rep;
}

}  // namespace qm
