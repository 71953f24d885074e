#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qm/gaussian.hpp"
#include "qm/lfunc.hpp"

namespace qm {

struct MomentRow {
    Gaussian64 c;
    std::int64_t norm = 1;
    LValue L;
    double weight = 0.0;  ///< exp(-N(c)/y)
};

struct MomentReport {
    double y = 0.0;
    double x = 0.0;
    double tol = 0.0;
    double cut = 0.0;
    bool include_c1 = true;
    std::vector<MomentRow> per_c;
    std::complex<double> sigma1;  ///< weighted first AFE sums
    std::complex<double> sigma2;  ///< weighted root-number side sums
    std::complex<double> total;   ///< sigma1 + sigma2
    double A = 0.0;
    double main_term = 0.0;       ///< A y
    double ratio = 0.0;           ///< Re(total) / (A y)
    double imag_leak = 0.0;       ///< |Im(total)| / |total|
};

/// Conductors of the experiment: squarefree c = 1 (mod 16) with
/// exp(-N(c)/y) >= cut, in (norm, re, im) order; c = 1 first when included.
std::vector<Gaussian64> moment_conductors(double y, double cut, bool include_c1 = true);

/// Smoothed first moment of L(1/2, chi_c) with a single AFE parameter x.
MomentReport first_moment(double y, double x, double tol, double cut = 1e-12, bool include_c1 = true,
                          unsigned threads = 1);

/// Sum over the rows of w_c L_c, recomputed in row order.
std::complex<double> weighted_row_sum(const MomentReport& report);

struct SigmaSplit {
    std::complex<double> sigma1;
    std::complex<double> sigma2;
};
SigmaSplit sigma_split(double y, double x, double tol, double cut = 1e-12, unsigned threads = 1);

struct ConstantABreakdown {
    double geometric = 0.0;  ///< 2 + sqrt(2)
    double residue = 0.0;    ///< res_{s=1} zeta_K
    int class_number = 0;    ///< #h_(16)
    double zeta2 = 0.0;      ///< zeta_K(2)
    double ideal_sum = 0.0;  ///< sum over odd ideals with the (1+i) factor 2/3
    double A = 0.0;
    std::int64_t prime_bound = 0;     ///< Euler product over rational primes <= prime_bound
    double ideal_sum_doubled = 0.0;   ///< the same product up to 2 prime_bound
};

/// ideal_sum = (2/3) (3/4) zeta_K(2) prod_{odd p} (1 - 1/(N(p)^2 (N(p)+1))),
/// the product truncated where its tail is below tol.
ConstantABreakdown constant_A(double tol);

/// Euler product over odd prime ideals of norm-generating rational primes <= P.
double ideal_sum_euler(std::int64_t P);
/// Direct truncated sum over odd ideals of norm <= T (slow; used as a cross-check).
double ideal_sum_direct(std::int64_t T);

struct PvRow {
    Gaussian64 a;
    std::int64_t norm = 1;
    double y = 0.0;
    std::complex<double> sum;
    double ratio = 0.0;  ///< |sum| / N(a)^(1/2)
};

struct PvReport {
    std::vector<PvRow> rows;
    double max_ratio = 0.0;
    double threshold = 10.0;
    bool pass = false;
};

/// sum over primary c of (c/a)_4 exp(-N(c)/y) for every primary non-fourth-power
/// a with N(a) <= norm_bound, at each y in `ys`.
PvReport pv_ratio_report(const std::vector<double>& ys, std::int64_t norm_bound, double cut = 1e-12,
                         double threshold = 10.0, unsigned threads = 1);

struct SieveTrial {
    std::int64_t M = 0;
    std::int64_t N = 0;
    int trial = 0;
    double lhs = 0.0;
    double coefficient_mass = 0.0;  ///< sum |a_n|^2
    double ratio = 0.0;
};

struct SieveReport {
    std::int64_t M = 0;
    std::int64_t N = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<SieveTrial> rows;  ///< trials at (M, N) followed by trials at (2M, 2N)
    double max_ratio = 0.0;        ///< at (M, N)
    double max_ratio_doubled = 0.0;
    double threshold = 50.0;
    bool pass = false;  ///< both maxima below threshold and their quotient in [1/2, 2]
};

/// Large-sieve ratio sum_m |sum_n a_n (n/m)_4|^2 / ((M + N + (MN)^(2/3)) sum |a_n|^2)
/// over squarefree primary m, n with random unit-modulus a_n.
SieveReport sieve_ratio_report(std::int64_t M, std::int64_t N, int trials, std::uint64_t seed,
                               double threshold = 50.0);

}  // namespace qm
