#include "qm/gauss_sum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qm/kahan.hpp"

namespace qm {

std::int64_t e_tilde_exponent(const Gaussian64& x, const Gaussian64& n) {
    if (n.is_zero()) throw std::domain_error("e_tilde_exponent: modulus is zero");
    const std::int64_t N = n.norm();
    // z/(2i) - conj(z)/(2i) = Im(z), and Im(x/n) = Im(x conj(n)) / N(n).
    const Gaussian64 w = x * n.conj();
    return floor_mod(w.im, N);
}

namespace {

void require_primary_modulus(const Gaussian64& n) {
    if (n.is_zero() || !n.is_odd()) throw std::domain_error("Gauss sum: modulus must be odd");
    if (!is_primary(n)) throw std::domain_error("Gauss sum: modulus must be primary");
}

// Sum over bins: sum_t (re_t + i im_t) exp(2 pi i t / M).
std::complex<double> sum_bins(const std::vector<std::int64_t>& bin_re, const std::vector<std::int64_t>& bin_im) {
    const auto M = static_cast<std::int64_t>(bin_re.size());
    ComplexCompensatedSum acc;
    for (std::int64_t t = 0; t < M; ++t) {
        if (bin_re[t] == 0 && bin_im[t] == 0) continue;
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(M);
        const std::complex<double> root{std::cos(theta), std::sin(theta)};
        acc.add(std::complex<double>(static_cast<double>(bin_re[t]), static_cast<double>(bin_im[t])) * root);
    }
    return acc.value();
}

void add_unit(std::vector<std::int64_t>& bin_re, std::vector<std::int64_t>& bin_im, std::int64_t t, QuarticValue v) {
    switch (v.exponent()) {
        case 0: ++bin_re[t]; break;
        case 1: ++bin_im[t]; break;
        case 2: --bin_re[t]; break;
        default: --bin_im[t]; break;
    }
}

// Residues x = u + v i with 0 <= u < N/g, 0 <= v < g form a complete system
// mod n, where g = gcd(re, im): (n) meets Z in (N/g)Z and the imaginary parts
// of (n) are exactly gZ.
template <class Fn>
void for_each_residue(const Gaussian64& n, Fn&& fn) {
    const std::int64_t N = n.norm();
    const std::int64_t g = std::gcd(n.re, n.im);
    const std::int64_t rows = N / g;
    for (std::int64_t v = 0; v < g; ++v)
        for (std::int64_t u = 0; u < rows; ++u) fn(Gaussian64{u, v});
}

GaussSumValue direct_sum(const Gaussian64& r, const Gaussian64& n, int symbol_power) {
    require_primary_modulus(n);
    if (n.is_unit()) return {{1.0, 0.0}, 1, false};
    const std::int64_t N = n.norm();
    const QuarticCharacter chi(n, /*with_tables=*/true);
    const Gaussian64 w = r * n.conj();
    const std::int64_t wr = floor_mod(w.re, N);
    const std::int64_t wi = floor_mod(w.im, N);
    std::vector<std::int64_t> bin_re(static_cast<std::size_t>(N), 0), bin_im(static_cast<std::size_t>(N), 0);
    bool any = false;
    for_each_residue(n, [&](const Gaussian64& x) {
        const QuarticValue s = chi(x).pow(symbol_power);
        if (s.is_zero()) return;
        const std::int64_t t = (wr * x.im + wi * x.re) % N;
        add_unit(bin_re, bin_im, t, s);
        any = true;
    });
    bool all_zero = true;
    for (std::int64_t t = 0; t < N && all_zero; ++t) all_zero = bin_re[t] == 0 && bin_im[t] == 0;
    (void)any;
    return {sum_bins(bin_re, bin_im), N, all_zero};
}

}  // namespace

GaussSumValue gauss_sum(const Gaussian64& r, const Gaussian64& n) { return direct_sum(r, n, 1); }

GaussSumValue gauss_sum_g2(const Gaussian64& n) { return direct_sum(Gaussian64{1, 0}, n, 2); }

// ---------------------------------------------------------------------------

GaussPrimeCache& GaussPrimeCache::global() {
    static GaussPrimeCache cache;
    return cache;
}

const GaussPrimeCache::Entry& GaussPrimeCache::get(const Gaussian64& pi) {
    const auto key = std::make_pair(pi.re, pi.im);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    Entry e{gauss_sum(pi).value, gauss_sum_g2(pi).value, quartic_symbol(Gaussian64{-1, 0}, pi)};
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.emplace(key, e).first->second;
}

GaussSumValue gauss_prime_power_table(const Gaussian64& pi, int k, int l, GaussPrimeCache& cache) {
    if (l < 1) throw std::domain_error("prime power table: exponent l must be positive");
    const std::int64_t N = pi.norm();
    const double Nk = k >= 0 ? std::pow(static_cast<double>(N), k) : 0.0;
    if (k >= 0 && l == k + 1) {
        const auto& e = cache.get(pi);
        switch (k % 4) {
            case 0: return {Nk * e.g, N, false};
            case 1: return {Nk * e.g2, N, false};
            case 2: return {Nk * e.minus_one.to_complex() * std::conj(e.g), N, false};
            default: return {{-Nk, 0.0}, N, false};
        }
    }
    if ((k < 0 || k >= l) && l % 4 == 0) {
        const double phi = std::pow(static_cast<double>(N), l) - std::pow(static_cast<double>(N), l - 1);
        return {{phi, 0.0}, N, false};
    }
    return {{0.0, 0.0}, N, true};
}

GaussSumValue gauss_sum_fast(const Gaussian64& r, const Factorization<std::int64_t>& nf, GaussPrimeCache& cache) {
    if (nf.r != 0 || nf.unit_exp != 0) throw std::domain_error("Gauss sum: modulus must be primary");
    std::int64_t n_norm = 1;
    std::complex<double> value{1.0, 0.0};
    QuarticValue symbols = QuarticValue::one();
    bool zero = false;
    std::vector<PrimeField> fields;
    fields.reserve(nf.factors.size());
    for (const auto& [pi, l] : nf.factors) {
        fields.emplace_back(pi);
        for (int j = 0; j < l; ++j) n_norm *= pi.norm();
    }
    for (std::size_t j = 0; j < nf.factors.size(); ++j) {
        const auto& [pi, l] = nf.factors[j];
        int k = -1;
        Gaussian64 rest = r;
        if (!r.is_zero()) {
            k = 0;
            while (divides(pi, rest)) {
                rest = exact_div(rest, pi);
                ++k;
            }
        }
        const GaussSumValue local = gauss_prime_power_table(pi, k, l, cache);
        if (local.exact_zero) {
            zero = true;
            break;
        }
        value *= local.value;
        if (k >= 0) symbols *= fields[j].symbol(rest).pow(l).conj();
    }
    if (zero) return {{0.0, 0.0}, n_norm, true};
    // Cross factors of the coprime splitting, one per unordered pair.
    for (std::size_t j = 0; j < nf.factors.size(); ++j) {
        for (std::size_t m = j + 1; m < nf.factors.size(); ++m) {
            const int e = nf.factors[j].second * nf.factors[m].second;
            const QuarticValue pair =
                fields[j].symbol(nf.factors[m].first) * fields[m].symbol(nf.factors[j].first);
            symbols *= pair.pow(e);
        }
    }
    return {value * symbols.to_complex(), n_norm, false};
}

GaussSumValue gauss_sum_fast(const Gaussian64& r, const Gaussian64& n, GaussPrimeCache& cache) {
    require_primary_modulus(n);
    if (n.is_unit()) return {{1.0, 0.0}, 1, false};
    return gauss_sum_fast(r, factor(n), cache);
}

// ---------------------------------------------------------------------------

void require_conductor(const Gaussian64& c) {
    if (c == Gaussian64{1, 0}) return;
    if (floor_mod(c.re, 16) != 1 || floor_mod(c.im, 16) != 0)
        throw std::domain_error("conductor must be congruent to 1 mod 16");
    if (!is_squarefree(c)) throw std::domain_error("conductor must be squarefree");
}

RootNumberRoutes root_number_routes(const Gaussian64& c, const Gaussian64& delta) {
    require_conductor(c);
    RootNumberRoutes out;
    if (c.is_unit()) {
        out.via_trace_sum = out.via_gauss_sum = {1.0, 0.0};
        return out;
    }
    // e(Tr(a/(delta c))) with Tr(z) = z + conj(z): Tr(a/(delta c)) is
    // 2 Re(a conj(delta c)) / N(delta c).
    const Gaussian64 dc = delta * c;
    const std::int64_t M = dc.norm();
    const Gaussian64 w = dc.conj();
    const QuarticCharacter chi(c, /*with_tables=*/true);
    std::vector<std::int64_t> bin_re(static_cast<std::size_t>(M), 0), bin_im(static_cast<std::size_t>(M), 0);
    for_each_residue(c, [&](const Gaussian64& a) {
        const QuarticValue s = chi(a);
        if (s.is_zero()) return;
        const std::int64_t t = floor_mod(2 * (a.re * w.re - a.im * w.im), M);
        add_unit(bin_re, bin_im, t, s);
    });
    out.via_trace_sum = sum_bins(bin_re, bin_im);
    out.via_gauss_sum = gauss_sum_fast(Gaussian64{1, 0}, c).value;
    out.relative_difference =
        std::abs(out.via_trace_sum - out.via_gauss_sum) / std::max(1.0, std::abs(out.via_gauss_sum));
    return out;
}

std::complex<double> root_number(const Gaussian64& c) {
    const RootNumberRoutes routes = root_number_routes(c);
    if (!(routes.relative_difference <= 1e-9))
        throw std::runtime_error("root number routes disagree for c = " + to_string(c));
    return routes.via_gauss_sum;
}

}  // namespace qm
