#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qm/gaussian.hpp"

namespace qm {

/// n = i^unit_exp * (1+i)^r * prod(pi^e), every pi primary, pairwise
/// non-associate, sorted by (norm, re, im).
template <class Int>
struct Factorization {
    int unit_exp = 0;
    int r = 0;
    std::vector<std::pair<Gaussian<Int>, int>> factors;
};

namespace detail {

inline std::uint64_t sqrt_minus_one_mod(std::uint64_t p) {
    // p = 1 mod 4: z^((p-1)/4) for a quadratic non-residue z.
    for (std::uint64_t z = 2;; ++z) {
        if (powmod(z, (p - 1) / 2, p) == p - 1) return powmod(z, (p - 1) / 4, p);
    }
}

inline std::int64_t sqrt_minus_one(std::int64_t p) {
    return static_cast<std::int64_t>(sqrt_minus_one_mod(static_cast<std::uint64_t>(p)));
}

inline BigInt sqrt_minus_one(const BigInt& p) {
    if (p.fits_ulong_p() && p.get_ui() < (std::uint64_t{1} << 62))
        return BigInt(static_cast<unsigned long>(sqrt_minus_one_mod(p.get_ui())));
    const BigInt half = BigInt(p - 1) / 2;
    const BigInt quarter = BigInt(p - 1) / 4;
    BigInt result;
    for (BigInt z = 2;; ++z) {
        mpz_powm(result.get_mpz_t(), z.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
        if (result == p - 1) {
            mpz_powm(result.get_mpz_t(), z.get_mpz_t(), quarter.get_mpz_t(), p.get_mpz_t());
            return result;
        }
    }
}

template <class Int>
int strip(Gaussian<Int>& m, const Gaussian<Int>& d) {
    int e = 0;
    while (divides(d, m)) {
        m = exact_div(m, d);
        ++e;
    }
    return e;
}

}  // namespace detail

/// Primary prime(s) above the odd rational prime p: one (-p) when p = 3 mod 4,
/// two conjugate primes when p = 1 mod 4.
template <class Int>
std::vector<Gaussian<Int>> primes_above(const Int& p) {
    if (mod4(p) == 3) return {Gaussian<Int>{Int(-p), Int(0)}};
    if (mod4(p) != 1) throw std::domain_error("primes_above: expects an odd rational prime");
    const Int t = detail::sqrt_minus_one(p);
    const Gaussian<Int> pi = gcd(Gaussian<Int>{p, Int(0)}, Gaussian<Int>{t, Int(1)});
    const Gaussian<Int> pi_bar = primary_associate(pi.conj()).primary;
    if (canonical_less(pi_bar, pi)) return {pi_bar, pi};
    return {pi, pi_bar};
}

/// Complete factorization by trial division of norm(n) up to its square root.
template <class Int>
Factorization<Int> factor(const Gaussian<Int>& n) {
    if (n.is_zero()) throw std::domain_error("factor: zero has no factorization");
    Factorization<Int> out;
    Gaussian<Int> m = n;
    out.r = detail::strip(m, Gaussian<Int>::one_plus_i());

    Int rem = m.norm();
    auto split_off = [&](const Int& p) {
        for (const auto& pi : primes_above(p)) {
            const int e = detail::strip(m, pi);
            if (e > 0) out.factors.emplace_back(pi, e);
        }
    };
    for (Int d = 3; d <= rem / d; d += 2) {
        if (!is_zero(floor_mod(rem, d))) continue;
        split_off(d);
        while (is_zero(floor_mod(rem, d))) rem /= d;
    }
    if (rem > 1) split_off(rem);

    if (!m.is_unit()) throw std::logic_error("factor: cofactor is not a unit");
    for (int k = 0; k < 4; ++k) {
        if (m == Gaussian<Int>::unit(k)) out.unit_exp = k;
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

template <class Int>
Gaussian<Int> reassemble(const Factorization<Int>& f) {
    Gaussian<Int> z = Gaussian<Int>::unit(f.unit_exp);
    for (int j = 0; j < f.r; ++j) z *= Gaussian<Int>::one_plus_i();
    for (const auto& [pi, e] : f.factors) z *= pow(pi, static_cast<unsigned>(e));
    return z;
}

/// Möbius function on Z[i]: 0 unless squarefree, else (-1)^(#prime factors).
template <class Int>
int moebius(const Gaussian<Int>& n) {
    if (n.is_zero()) throw std::domain_error("moebius: argument is zero");
    const auto f = factor(n);
    if (f.r >= 2) return 0;
    int count = f.r;
    for (const auto& pe : f.factors) {
        if (pe.second >= 2) return 0;
        ++count;
    }
    return (count % 2 == 0) ? 1 : -1;
}

template <class Int>
bool is_squarefree(const Gaussian<Int>& n) {
    return moebius(n) != 0;
}

/// #(Z[i]/(pi^l))^* = N(pi)^l - N(pi)^(l-1).
template <class Int>
Int euler_phi_ideal(const Gaussian<Int>& pi, int l) {
    if (l < 1) throw std::domain_error("euler_phi_ideal: exponent must be positive");
    const Int q = pi.norm();
    Int pw = 1;
    for (int j = 1; j < l; ++j) pw *= q;
    return Int(pw * q - pw);
}

/// Radical of the odd part: product of the distinct primary primes dividing n.
template <class Int>
Gaussian<Int> odd_radical(const Gaussian<Int>& n) {
    Gaussian<Int> z{Int(1), Int(0)};
    for (const auto& pe : factor(n).factors) z *= pe.first;
    return z;
}

}  // namespace qm
