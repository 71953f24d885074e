#pragma once

#include <cctype>
#include <compare>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "qm/integer.hpp"

namespace qm {

/// Element re + im*i of Z[i]. `Int` is either std::int64_t (fast path) or
/// BigInt. The int64 instantiation is only used where |re|, |im| < 2^31 so
/// that every product of two coordinates and every norm fits in 63 bits.
template <class Int>
struct Gaussian {
    Int re{0};
    Int im{0};

    Gaussian() = default;
    Gaussian(Int r) : re(std::move(r)), im(0) {}
    Gaussian(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit(int k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {Int(1), Int(0)};
            case 1: return {Int(0), Int(1)};
            case 2: return {Int(-1), Int(0)};
            default: return {Int(0), Int(-1)};
        }
    }
    static Gaussian one_plus_i() { return {Int(1), Int(1)}; }

    Gaussian operator-() const { return {Int(-re), Int(-im)}; }
    Gaussian operator+(const Gaussian& w) const { return {Int(re + w.re), Int(im + w.im)}; }
    Gaussian operator-(const Gaussian& w) const { return {Int(re - w.re), Int(im - w.im)}; }
    Gaussian operator*(const Gaussian& w) const {
        return {Int(re * w.re - im * w.im), Int(re * w.im + im * w.re)};
    }
    Gaussian& operator+=(const Gaussian& w) { return *this = *this + w; }
    Gaussian& operator-=(const Gaussian& w) { return *this = *this - w; }
    Gaussian& operator*=(const Gaussian& w) { return *this = *this * w; }

    bool operator==(const Gaussian& w) const { return re == w.re && im == w.im; }
    bool operator!=(const Gaussian& w) const { return !(*this == w); }

    Gaussian conj() const { return {re, Int(-im)}; }
    Gaussian mul_i() const { return {Int(-im), re}; }
    Int norm() const { return Int(re * re + im * im); }

    bool is_zero() const { return qm::is_zero(re) && qm::is_zero(im); }
    bool is_unit() const { return norm() == 1; }
    /// Not divisible by 1+i.
    bool is_odd() const { return qm::is_odd(re) != qm::is_odd(im); }

    std::complex<double> to_complex() const {
        if constexpr (std::is_same_v<Int, BigInt>) {
            return {re.get_d(), im.get_d()};
        } else {
            return {static_cast<double>(re), static_cast<double>(im)};
        }
    }
};

using GaussianInt = Gaussian<BigInt>;
using Gaussian64 = Gaussian<std::int64_t>;

/// Narrowing conversion with an overflow check against the 2^31 bound.
inline Gaussian64 to_g64(const GaussianInt& z) {
    constexpr std::int64_t kBound = std::int64_t{1} << 31;
    const std::int64_t re = to_int64(z.re);
    const std::int64_t im = to_int64(z.im);
    if (re >= kBound || re <= -kBound || im >= kBound || im <= -kBound)
        throw std::overflow_error("Gaussian integer exceeds the 64-bit fast path bound");
    return {re, im};
}
inline Gaussian64 to_g64(const Gaussian64& z) { return z; }

inline GaussianInt to_big(const Gaussian64& z) {
    return {from_int64<BigInt>(z.re), from_int64<BigInt>(z.im)};
}
inline GaussianInt to_big(const GaussianInt& z) { return z; }

template <class Int>
Int norm(const Gaussian<Int>& z) {
    return z.norm();
}

/// Deterministic total order used by every enumeration: (norm, re, im).
template <class Int>
bool canonical_less(const Gaussian<Int>& a, const Gaussian<Int>& b) {
    const Int na = a.norm();
    const Int nb = b.norm();
    if (na != nb) return na < nb;
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

namespace detail {

// Nearest integer to num/den (den > 0), ties to even.
template <class Int>
Int round_half_even(const Int& num, const Int& den) {
    Int q = floor_div(num, den);
    const Int r = Int(num - q * den);
    const Int twice = Int(r + r);
    if (twice > den || (twice == den && is_odd(q))) q = Int(q + 1);
    return q;
}

}  // namespace detail

template <class Int>
struct DivRem {
    Gaussian<Int> quotient;
    Gaussian<Int> remainder;
};

/// Euclidean division: a = q*b + rem with norm(rem) <= norm(b)/2. Each
/// coordinate of a/b is rounded to the nearest integer, ties toward even.
template <class Int>
DivRem<Int> divrem(const Gaussian<Int>& a, const Gaussian<Int>& b) {
    if (b.is_zero()) throw std::domain_error("divrem: division by zero");
    const Int n = b.norm();
    const Gaussian<Int> num = a * b.conj();
    Gaussian<Int> q{detail::round_half_even(num.re, n), detail::round_half_even(num.im, n)};
    Gaussian<Int> rem = a - q * b;
    return {std::move(q), std::move(rem)};
}

/// True when d divides z in Z[i]. d must be nonzero.
template <class Int>
bool divides(const Gaussian<Int>& d, const Gaussian<Int>& z) {
    const Int n = d.norm();
    const Gaussian<Int> num = z * d.conj();
    return is_zero(floor_mod(num.re, n)) && is_zero(floor_mod(num.im, n));
}

/// z / d, requiring d | z.
template <class Int>
Gaussian<Int> exact_div(const Gaussian<Int>& z, const Gaussian<Int>& d) {
    const Int n = d.norm();
    const Gaussian<Int> num = z * d.conj();
    if (!is_zero(floor_mod(num.re, n)) || !is_zero(floor_mod(num.im, n)))
        throw std::domain_error("exact_div: divisor does not divide");
    return {Int(num.re / n), Int(num.im / n)};
}

template <class Int>
Gaussian<Int> pow(Gaussian<Int> base, unsigned exp) {
    Gaussian<Int> result{Int(1), Int(0)};
    while (exp != 0) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/// a+bi with a = 1, b = 0 (mod 4) or a = 3, b = 2 (mod 4); equivalently
/// z = 1 mod (1+i)^3. The unit 1 is primary.
template <class Int>
bool is_primary(const Gaussian<Int>& z) {
    const int u = mod4(z.re);
    const int v = mod4(z.im);
    return (u == 1 && v == 0) || (u == 3 && v == 2);
}

template <class Int>
struct Associate {
    int unit_exp;      ///< z = i^unit_exp * primary
    Gaussian<Int> primary;
};

/// Splits an odd z as i^k * p with p primary. Exactly one of the four
/// associates of an odd element is primary.
template <class Int>
Associate<Int> primary_associate(const Gaussian<Int>& z) {
    if (z.is_zero() || !z.is_odd())
        throw std::domain_error("primary_associate: argument must be odd and nonzero");
    Gaussian<Int> p = z;
    // p = i^{-k} z, so z = i^k p.
    for (int k = 0; k < 4; ++k) {
        if (is_primary(p)) return {k, p};
        p = -p.mul_i();  // multiply by -i
    }
    throw std::logic_error("primary_associate: no primary associate found");
}

/// Greatest common divisor, normalized to (1+i)^r * (primary).
template <class Int>
Gaussian<Int> gcd(Gaussian<Int> a, Gaussian<Int> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Gaussian<Int> r = divrem(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    const Gaussian<Int> t = Gaussian<Int>::one_plus_i();
    int r = 0;
    while (!a.is_odd()) {
        a = exact_div(a, t);
        ++r;
    }
    Gaussian<Int> g = primary_associate(a).primary;
    for (int j = 0; j < r; ++j) g *= t;
    return g;
}

template <class Int>
bool coprime(const Gaussian<Int>& a, const Gaussian<Int>& b) {
    return gcd(a, b).is_unit();
}

template <class Int>
std::string to_string(const Gaussian<Int>& z) {
    using qm::to_string;
    if (is_zero(z.im)) return to_string(z.re);
    std::string im_part;
    const Int abs_im = sign_of(z.im) < 0 ? Int(-z.im) : z.im;
    if (abs_im != 1) im_part = to_string(abs_im);
    im_part += "i";
    if (is_zero(z.re)) return (sign_of(z.im) < 0 ? "-" : "") + im_part;
    return to_string(z.re) + (sign_of(z.im) < 0 ? "-" : "+") + im_part;
}

template <class Int>
std::ostream& operator<<(std::ostream& os, const Gaussian<Int>& z) {
    return os << to_string(z);
}

/// Parses the whitespace-free grammar
///   [sign] digits                      (real)
///   [sign] [digits] ["*"] "i"          (imaginary)
///   [sign] digits (+|-) [digits] ["*"] "i"
GaussianInt parse_gaussian(std::string_view text);

}  // namespace qm
