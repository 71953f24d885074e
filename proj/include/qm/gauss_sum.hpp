#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "qm/factor.hpp"
#include "qm/gaussian.hpp"
#include "qm/quartic.hpp"

namespace qm {

struct GaussSumValue {
    std::complex<double> value;
    std::int64_t n_norm = 1;
    bool exact_zero = false;  ///< the sum is known to vanish exactly
};

/// t with e~(x/n) = exp(2 pi i t / N(n)); t = Im(x conj(n)) mod N(n).
std::int64_t e_tilde_exponent(const Gaussian64& x, const Gaussian64& n);

/// g(r, n) = sum_{x mod n} (x/n)_4 e~(r x / n) by direct summation over a
/// rectangular residue system. n primary; g(r, 1) = 1.
GaussSumValue gauss_sum(const Gaussian64& r, const Gaussian64& n);
inline GaussSumValue gauss_sum(const Gaussian64& n) { return gauss_sum(Gaussian64{1, 0}, n); }

/// g2(n) = sum_{x mod n} (x/n)_4^2 e~(x / n); g2(1) = 1.
GaussSumValue gauss_sum_g2(const Gaussian64& n);

/// Thread-safe cache of g(pi), g2(pi) for primary primes, filled by direct
/// summation on first use.
class GaussPrimeCache {
public:
    struct Entry {
        std::complex<double> g;
        std::complex<double> g2;
        QuarticValue minus_one;  ///< (-1/pi)_4
    };
    const Entry& get(const Gaussian64& pi);
    static GaussPrimeCache& global();

private:
    std::mutex mutex_;
    std::map<std::pair<std::int64_t, std::int64_t>, Entry> entries_;
};

/// g(pi^k, pi^l) for a primary prime pi: the six-case prime-power table.
/// `k` < 0 stands for r = 0 (infinite valuation).
GaussSumValue gauss_prime_power_table(const Gaussian64& pi, int k, int l, GaussPrimeCache& cache);

/// g(r, n) through factorization of n: coprime parts are split off with the
/// cross-symbol factors (n2/n1)_4 (n1/n2)_4, prime powers are reduced by the
/// twist rule and the prime-power table.
GaussSumValue gauss_sum_fast(const Gaussian64& r, const Gaussian64& n,
                             GaussPrimeCache& cache = GaussPrimeCache::global());
GaussSumValue gauss_sum_fast(const Gaussian64& r, const Factorization<std::int64_t>& n_factors,
                             GaussPrimeCache& cache = GaussPrimeCache::global());

struct RootNumberRoutes {
    std::complex<double> via_trace_sum;  ///< sum chi_c(a) e(Tr(a/(delta c)))
    std::complex<double> via_gauss_sum;  ///< g(c)
    double relative_difference = 0.0;
};

/// Evaluates W(chi_c) by both routes. c squarefree and c = 1 (mod 16), or c = 1.
RootNumberRoutes root_number_routes(const Gaussian64& c, const Gaussian64& delta = Gaussian64{0, 2});

/// W(chi_c), checked across both routes to 1e-9 relative; throws on mismatch.
std::complex<double> root_number(const Gaussian64& c);

/// Validates that c is 1 or squarefree with c = 1 (mod 16).
void require_conductor(const Gaussian64& c);

}  // namespace qm
