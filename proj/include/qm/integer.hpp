#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qm {

using BigInt = mpz_class;

// Integer helpers shared by the int64 fast path and the GMP path. Division
// helpers follow floor semantics regardless of the sign of the operands.

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + (m < 0 ? -m : m) : r;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_odd(std::int64_t a) { return (a & 1) != 0; }
inline bool is_odd(const BigInt& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }

inline int sign_of(std::int64_t a) { return (a > 0) - (a < 0); }
inline int sign_of(const BigInt& a) { return sgn(a); }

/// Residue of `a` modulo 4 in [0, 4).
inline int mod4(std::int64_t a) { return static_cast<int>(floor_mod(a, 4)); }
inline int mod4(const BigInt& a) {
    return static_cast<int>(mpz_fdiv_ui(a.get_mpz_t(), 4));
}

inline std::int64_t to_int64(std::int64_t a) { return a; }
inline std::int64_t to_int64(const BigInt& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return a.get_si();
}

template <class Int> Int from_int64(std::int64_t v);
template <> inline std::int64_t from_int64<std::int64_t>(std::int64_t v) { return v; }
template <> inline BigInt from_int64<BigInt>(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline std::string to_string(std::int64_t a) { return std::to_string(a); }
inline std::string to_string(const BigInt& a) { return a.get_str(); }

/// a*b mod m for 0 <= a, b < m < 2^63.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 62; bit != 0; bit >>= 2) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
    }
    return r;
}

}  // namespace qm
