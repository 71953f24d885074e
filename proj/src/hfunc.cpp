#include "qm/hfunc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qm/enumerate.hpp"
#include "qm/kahan.hpp"

namespace qm {

namespace {

std::complex<double> chi_at(const RayClassChar& chi, const Gaussian64& n, int power = 1) {
    const int k = chi.exponent_at(n);
    if (k < 0) return {0.0, 0.0};
    return RayClassChar::root_of_unity(k * power);
}

std::complex<double> norm_pow(std::int64_t norm, std::complex<double> e) {
    return std::exp(e * std::log(static_cast<double>(norm)));
}

void require_primary(const Gaussian64& z, const char* what) {
    if (z.is_zero() || !z.is_odd() || !is_primary(z)) throw std::domain_error(std::string(what) + " must be primary");
}

void require_squarefree(const Gaussian64& z, const char* what) {
    require_primary(z, what);
    if (!is_squarefree(z)) throw std::domain_error(std::string(what) + " must be squarefree");
}

std::vector<Gaussian64> prime_divisors(const Gaussian64& z) {
    std::vector<Gaussian64> out;
    for (const auto& [pi, e] : factor(z).factors) out.push_back(pi);
    return out;
}

}  // namespace

RDecomposition decompose_r(const Gaussian64& r) {
    require_primary(r, "decompose_r: r");
    RDecomposition d;
    Gaussian64* slots[4] = {nullptr, &d.r1, &d.r2, &d.r3};
    for (const auto& [pi, e] : factor(r).factors) {
        const int a = e % 4;
        const int b = e / 4;
        if (a > 0) *slots[a] *= pi;
        if (b > 0) {
            d.r4 *= pow(pi, static_cast<unsigned>(b));
            d.r4_star *= pi;
        }
    }
    return d;
}

QuarticValue P_of_ordered(const std::vector<Gaussian64>& primes) {
    if (primes.empty()) throw std::domain_error("P: a must be a non-unit");
    Gaussian64 rest{1, 0};
    for (const auto& pi : primes) rest *= pi;
    QuarticValue out = QuarticValue::one();
    for (const auto& pi : primes) {
        rest = exact_div(rest, pi);
        out *= quartic_symbol(rest * rest, pi * pi * pi).conj();
    }
    return out;
}

QuarticValue P_of(const Gaussian64& a) {
    require_squarefree(a, "P: a");
    if (a.is_unit()) throw std::domain_error("P: a must be a non-unit");
    return P_of_ordered(prime_divisors(a));
}

double h_tail_bound(std::int64_t T, double sigma) {
    const double t = static_cast<double>(T);
    return 50.0 * std::pow(t, 1.5 - sigma) * std::log(t + 2.0);
}

// ---------------------------------------------------------------------------

HSeries::HSeries(std::int64_t T, GaussPrimeCache& cache) : T_(T), cache_(&cache) {
    if (T < 100) throw std::domain_error("HSeries: truncation T must be at least 100");
    const auto& group = RayClassGroup::instance();
    for (const auto& n : enumerate_primary(T)) {
        entries_.push_back({n, factor(n), std::log(static_cast<double>(n.norm())), group.element_index(n)});
    }
}

bool HSeries::coprime_to(const Entry& e, const Gaussian64& m) const {
    for (const auto& [pi, k] : e.factors.factors) {
        if (divides(pi, m)) return false;
    }
    return true;
}

HValue HSeries::sum(const Gaussian64& r, const Gaussian64& m, std::complex<double> s, const RayClassChar& chi) const {
    if (s.real() < 1.75) throw std::domain_error("h-series: Re(s) must be at least 7/4");
    if (m.is_zero()) throw std::domain_error("h-series: coprimality modulus is zero");
    ComplexCompensatedSum acc;
    for (const auto& e : entries_) {
        if (!coprime_to(e, m)) continue;
        const GaussSumValue g = gauss_sum_fast(r, e.factors, *cache_);
        if (g.exact_zero) continue;
        const std::complex<double> x = RayClassChar::root_of_unity(chi.exponent_at_element(e.element));
        acc.add(x * g.value * std::exp(-s * e.log_norm));
    }
    return {acc.value(), T_, s.real(), h_tail_bound(T_, s.real())};
}

HValue HSeries::h_star(const Gaussian64& r1, const Gaussian64& r2, const Gaussian64& r3, std::complex<double> s,
                       const RayClassChar& chi) const {
    require_squarefree(r1 * r2 * r3, "h*: r1 r2 r3");
    const Gaussian64 r = r1 * r2 * r2 * r3 * r3 * r3;
    const auto primes = prime_divisors(r2);
    const auto& group = RayClassGroup::instance();
    ComplexCompensatedSum acc;
    double coef_mass = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
        Gaussian64 a{1, 0};
        std::vector<Gaussian64> subset;
        std::complex<double> gbar{1.0, 0.0};
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (!(mask >> j & 1)) continue;
            a *= primes[j];
            subset.push_back(primes[j]);
            gbar *= std::conj(cache_->get(primes[j]).g);
        }
        const double mu = (subset.size() % 2 == 0) ? 1.0 : -1.0;
        QuarticValue sym = QuarticValue::one();
        QuarticValue p_a = QuarticValue::one();
        if (!subset.empty()) {
            const Gaussian64 q = exact_div(r2, a);
            const Gaussian64 top = Gaussian64{-1, 0} * r1 * q * q * r3 * r3 * r3;
            sym = quartic_symbol(top, a * a * a).conj();
            p_a = P_of_ordered(subset);
        }
        const std::complex<double> coef = mu * chi_at(chi, a, 3) * norm_pow(a.norm(), 2.0 - 3.0 * s) *
                                          sym.to_complex() * p_a.to_complex() * gbar;
        const Gaussian64 a3 = a * a * a;
        const RayClassChar twisted = group.psi_character(a3) * chi;
        const HValue inner = sum(exact_div(r, a * a), r1, s, twisted);
        acc.add(coef * inner.value);
        coef_mass += std::abs(coef);
    }
    return {acc.value(), T_, s.real(), h_tail_bound(T_, s.real()) * coef_mass};
}

// ---------------------------------------------------------------------------

const char* identity_name(HIdentity id) {
    switch (id) {
        case HIdentity::CoprimeSieve: return "coprime-sieve";
        case HIdentity::FourthPower: return "fourth-power";
        case HIdentity::CubeFactor: return "cube-factor";
        case HIdentity::SquareFactor: return "square-factor";
        case HIdentity::LinearFactor: return "linear-factor";
    }
    return "?";
}

HIdentity parse_identity(const std::string& name) {
    for (auto id : {HIdentity::CoprimeSieve, HIdentity::FourthPower, HIdentity::CubeFactor, HIdentity::SquareFactor, HIdentity::LinearFactor}) {
        if (name == identity_name(id)) return id;
    }
    throw std::invalid_argument("unknown identity: " + name);
}

IdentityCheck verify_identity(const HSeries& series, HIdentity id, const HInstance& inst, std::complex<double> s,
                              const RayClassChar& chi) {
    const double tail = h_tail_bound(series.truncation(), s.real());
    const auto& group = RayClassGroup::instance();
    IdentityCheck out;
    double mass = 1.0;  // the left side is a single h with coefficient 1
    switch (id) {
        case HIdentity::CoprimeSieve: {
            require_primary(inst.r, "coprime-sieve: r");
            require_squarefree(inst.f, "coprime-sieve: f");
            if (!coprime(inst.r, inst.f)) throw std::domain_error("coprime-sieve: r and f must be coprime");
            out.lhs = series.h_f(inst.r, inst.f, s, chi).value;
            ComplexCompensatedSum acc;
            const auto primes = prime_divisors(inst.f);
            for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
                Gaussian64 a{1, 0};
                int count = 0;
                for (std::size_t j = 0; j < primes.size(); ++j) {
                    if (mask >> j & 1) {
                        a *= primes[j];
                        ++count;
                    }
                }
                const double mu = (count % 2 == 0) ? 1.0 : -1.0;
                const std::complex<double> coef =
                    mu * chi_at(chi, a) * gauss_sum_fast(inst.r, a).value * norm_pow(a.norm(), -s);
                const RayClassChar twisted = group.psi_character(a) * chi;
                acc.add(coef * series.h(a * a * inst.r, s, twisted).value);
                mass += std::abs(coef);
            }
            out.rhs = acc.value();
            break;
        }
        case HIdentity::FourthPower: {
            require_squarefree(inst.r1 * inst.r2 * inst.r3, "fourth-power: r1 r2 r3");
            require_primary(inst.r4, "fourth-power: r4");
            const Gaussian64 base = inst.r1 * inst.r2 * inst.r2 * inst.r3 * inst.r3 * inst.r3;
            const Gaussian64 r4sq = inst.r4 * inst.r4;
            out.lhs = series.h(base * r4sq * r4sq, s, chi).value;
            out.rhs = series.h_f(base, odd_radical(inst.r4), s, chi).value;
            mass += 1.0;
            break;
        }
        case HIdentity::CubeFactor: {
            require_squarefree(inst.r1 * inst.r2 * inst.r3, "cube-factor: r1 r2 r3");
            const Gaussian64 r = inst.r1 * inst.r2 * inst.r2 * inst.r3 * inst.r3 * inst.r3;
            out.lhs = series.h(r, s, chi).value;
            std::complex<double> coef{1.0, 0.0};
            for (const auto& pi : prime_divisors(inst.r3))
                coef /= 1.0 - chi_at(chi, pi, 4) * norm_pow(pi.norm(), 3.0 - 4.0 * s);
            out.rhs = coef * series.h_alpha(inst.r1 * inst.r2, r, s, chi).value;
            mass += std::abs(coef);
            break;
        }
        case HIdentity::SquareFactor: {
            require_squarefree(inst.r1 * inst.r2 * inst.r3, "square-factor: r1 r2 r3");
            const Gaussian64 r = inst.r1 * inst.r2 * inst.r2 * inst.r3 * inst.r3 * inst.r3;
            out.lhs = series.h_alpha(inst.r1 * inst.r2, r, s, chi).value;
            std::complex<double> coef{1.0, 0.0};
            for (const auto& pi : prime_divisors(inst.r2)) {
                const Gaussian64 pi3 = pi * pi * pi;
                const double sign = psi(pi3, pi);
                const QuarticValue minus_one = quartic_symbol(Gaussian64{-1, 0}, pi3).conj();
                coef /= 1.0 - sign * chi_at(chi, pi, 4) * norm_pow(pi.norm(), 2.0 - 4.0 * s) *
                                  static_cast<double>(pi.norm()) * minus_one.to_complex();
            }
            const HValue star = series.h_star(inst.r1, inst.r2, inst.r3, s, chi);
            out.rhs = coef * star.value;
            mass += std::abs(coef) * star.tail_bound / tail;
            break;
        }
        case HIdentity::LinearFactor: {
            require_squarefree(inst.r1 * inst.r2 * inst.r3, "linear-factor: r1 r2 r3");
            const Gaussian64 r = inst.r1 * inst.r2 * inst.r2 * inst.r3 * inst.r3 * inst.r3;
            out.lhs = series.h_alpha(inst.r1, r, s, chi).value;
            std::complex<double> coef{1.0, 0.0};
            for (const auto& pi : prime_divisors(inst.r1)) {
                const QuarticValue sym = quartic_symbol(exact_div(r, pi), pi * pi).conj();
                coef /= 1.0 + chi_at(chi, pi, 2) * norm_pow(pi.norm(), 1.0 - 2.0 * s) *
                                  GaussPrimeCache::global().get(pi).g2 * sym.to_complex();
            }
            out.rhs = coef * series.h_alpha(Gaussian64{1, 0}, r, s, chi).value;
            mass += std::abs(coef);
            break;
        }
    }
    out.discrepancy = std::abs(out.lhs - out.rhs);
    out.budget = tail * mass;
    out.pass = out.discrepancy <= out.budget;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

class InstanceSampler {
public:
    InstanceSampler(std::uint64_t seed, std::int64_t bound) : rng_(seed), bound_(bound), primes_(primary_primes(bound)) {}

    // Draws `count` distinct primes not in `used`; returns their product, or
    // 1 when the radical would exceed the bound.
    Gaussian64 draw(int count, std::vector<Gaussian64>& used, std::int64_t& radical_norm) {
        Gaussian64 out{1, 0};
        for (int k = 0; k < count; ++k) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                const Gaussian64& pi = primes_[rng_() % primes_.size()];
                if (std::find(used.begin(), used.end(), pi) != used.end()) continue;
                if (radical_norm * pi.norm() > bound_) continue;
                used.push_back(pi);
                radical_norm *= pi.norm();
                out *= pi;
                break;
            }
        }
        return out;
    }
    int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 rng_;
    std::int64_t bound_;
    std::vector<Gaussian64> primes_;
};

}  // namespace

std::vector<HInstance> random_instances(HIdentity id, int count, std::uint64_t seed, std::int64_t norm_bound) {
    InstanceSampler sampler(seed ^ (static_cast<std::uint64_t>(id) + 1) * 0x9e3779b97f4a7c15ULL, norm_bound);
    std::vector<HInstance> out;
    while (static_cast<int>(out.size()) < count) {
        HInstance inst;
        std::vector<Gaussian64> used;
        std::int64_t rad = 1;
        switch (id) {
            case HIdentity::CoprimeSieve: {
                const Gaussian64 f = sampler.draw(1 + sampler.below(2), used, rad);
                const Gaussian64 r = sampler.draw(sampler.below(3), used, rad);
                inst.f = f;
                inst.r = sampler.below(2) ? r * r : r;
                if (f.is_unit()) continue;
                break;
            }
            case HIdentity::FourthPower: {
                inst.r4 = sampler.draw(1, used, rad);
                inst.r1 = sampler.draw(sampler.below(2), used, rad);
                inst.r2 = sampler.draw(sampler.below(2), used, rad);
                inst.r3 = sampler.draw(sampler.below(2), used, rad);
                if (inst.r4.is_unit()) continue;
                break;
            }
            case HIdentity::CubeFactor: {
                inst.r3 = sampler.draw(1, used, rad);
                inst.r1 = sampler.draw(sampler.below(2), used, rad);
                inst.r2 = sampler.draw(sampler.below(2), used, rad);
                if (inst.r3.is_unit()) continue;
                break;
            }
            case HIdentity::SquareFactor: {
                inst.r2 = sampler.draw(1 + sampler.below(2), used, rad);
                inst.r1 = sampler.draw(sampler.below(2), used, rad);
                inst.r3 = sampler.draw(sampler.below(2), used, rad);
                if (inst.r2.is_unit()) continue;
                break;
            }
            case HIdentity::LinearFactor: {
                inst.r1 = sampler.draw(1 + sampler.below(2), used, rad);
                inst.r2 = sampler.draw(sampler.below(2), used, rad);
                inst.r3 = sampler.draw(sampler.below(2), used, rad);
                if (inst.r1.is_unit()) continue;
                break;
            }
        }
        out.push_back(inst);
    }
    return out;
}

}  // namespace qm
