#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qm/factor.hpp"
#include "qm/gauss_sum.hpp"
#include "qm/gaussian.hpp"
#include "qm/quartic.hpp"
#include "qm/ray_class.hpp"

namespace qm {

/// r = r1 r2^2 r3^3 r4^4 with r1 r2 r3 squarefree; r4_star is the radical of r4.
struct RDecomposition {
    Gaussian64 r1{1, 0};
    Gaussian64 r2{1, 0};
    Gaussian64 r3{1, 0};
    Gaussian64 r4{1, 0};
    Gaussian64 r4_star{1, 0};
};

RDecomposition decompose_r(const Gaussian64& r);

/// P(a) for squarefree primary non-unit a, primes taken in canonical order.
QuarticValue P_of(const Gaussian64& a);
/// P(a) for a = product of `primes`, taken in the given order. The i-th factor
/// is conj(((a / (pi_1 ... pi_i))^2 / pi_i^3)_4).
QuarticValue P_of_ordered(const std::vector<Gaussian64>& primes);

struct HValue {
    std::complex<double> value;
    std::int64_t truncation_T = 0;
    double sigma = 0.0;
    double tail_bound = 0.0;
};

/// 50 T^(3/2 - sigma) ln(T + 2).
double h_tail_bound(std::int64_t T, double sigma);

/// Truncated h-series over primary n with N(n) <= T. Factorizations of every
/// n are computed once; Gauss sums come from the multiplicative fast path.
class HSeries {
public:
    explicit HSeries(std::int64_t T, GaussPrimeCache& cache = GaussPrimeCache::global());

    std::int64_t truncation() const { return T_; }

    /// sum over (n, m) = 1 of chi(n) g(r, n) / N(n)^s.
    HValue sum(const Gaussian64& r, const Gaussian64& m, std::complex<double> s, const RayClassChar& chi) const;

    /// h(r, s; chi): (n, r) = 1.
    HValue h(const Gaussian64& r, std::complex<double> s, const RayClassChar& chi) const { return sum(r, r, s, chi); }
    /// h(r, f, s; chi): (n, r f) = 1.
    HValue h_f(const Gaussian64& r, const Gaussian64& f, std::complex<double> s, const RayClassChar& chi) const {
        return sum(r, r * f, s, chi);
    }
    /// h_alpha(r, s; chi): (n, alpha) = 1.
    HValue h_alpha(const Gaussian64& alpha, const Gaussian64& r, std::complex<double> s,
                   const RayClassChar& chi) const {
        return sum(r, alpha, s, chi);
    }
    /// h*_{r1}(r1 r2^2 r3^3, s; chi) as a divisor sum over a | r2.
    HValue h_star(const Gaussian64& r1, const Gaussian64& r2, const Gaussian64& r3, std::complex<double> s,
                  const RayClassChar& chi) const;

private:
    struct Entry {
        Gaussian64 n;
        Factorization<std::int64_t> factors;
        double log_norm;
        int element;  // ray class of n
    };

    bool coprime_to(const Entry& e, const Gaussian64& m) const;

    std::int64_t T_;
    GaussPrimeCache* cache_;
    std::vector<Entry> entries_;
};

enum class HIdentity { CoprimeSieve, FourthPower, CubeFactor, SquareFactor, LinearFactor };

const char* identity_name(HIdentity id);
HIdentity parse_identity(const std::string& name);

/// Parameters of one identity instance. CoprimeSieve uses r and f; the others use
/// r1..r4 (r4 only for FourthPower).
struct HInstance {
    Gaussian64 r{1, 0};
    Gaussian64 f{1, 0};
    Gaussian64 r1{1, 0};
    Gaussian64 r2{1, 0};
    Gaussian64 r3{1, 0};
    Gaussian64 r4{1, 0};
};

struct IdentityCheck {
    std::complex<double> lhs;
    std::complex<double> rhs;
    double discrepancy = 0.0;
    double budget = 0.0;  ///< tail bound times (1 + sum of |coefficients| of the h terms)
    bool pass = false;
};

/// Evaluates both sides of the identity with every h truncated at the series' T.
/// Throws std::domain_error when the instance violates the identity's hypotheses.
IdentityCheck verify_identity(const HSeries& series, HIdentity id, const HInstance& inst, std::complex<double> s,
                              const RayClassChar& chi);

/// Random instances whose prime supports have radical norm at most `norm_bound`.
std::vector<HInstance> random_instances(HIdentity id, int count, std::uint64_t seed, std::int64_t norm_bound = 200);

}  // namespace qm
