#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qm/factor.hpp"
#include "qm/gaussian.hpp"

namespace qm {

/// Exact value in {0, 1, i, -1, -i}, stored as "zero" or an exponent k mod 4
/// meaning i^k.
class QuarticValue {
public:
    constexpr QuarticValue() = default;
    static constexpr QuarticValue zero() { return QuarticValue(true, 0); }
    static constexpr QuarticValue i_pow(int k) { return QuarticValue(false, ((k % 4) + 4) % 4); }
    static constexpr QuarticValue one() { return i_pow(0); }

    constexpr bool is_zero() const { return zero_; }
    /// Exponent k with value i^k; meaningless when is_zero().
    constexpr int exponent() const { return k_; }

    constexpr QuarticValue operator*(QuarticValue o) const {
        if (zero_ || o.zero_) return zero();
        return i_pow(k_ + o.k_);
    }
    constexpr QuarticValue& operator*=(QuarticValue o) { return *this = *this * o; }
    constexpr QuarticValue conj() const { return zero_ ? zero() : i_pow(-k_); }
    /// Integer power; pow(0) of a zero value is 1 (empty product).
    constexpr QuarticValue pow(int e) const {
        if (e == 0) return one();
        if (zero_) return zero();
        return i_pow(static_cast<int>((static_cast<long long>(k_) * (e % 4)) % 4));
    }
    constexpr bool operator==(const QuarticValue& o) const {
        return zero_ == o.zero_ && (zero_ || k_ == o.k_);
    }

    std::complex<double> to_complex() const;
    /// One of "0", "1", "i", "-1", "-i".
    std::string to_string() const;

private:
    constexpr QuarticValue(bool z, int k) : zero_(z), k_(k) {}
    bool zero_ = false;
    int k_ = 0;
};

/// The residue field Z[i]/(pi) of an odd primary prime pi, with residues
/// encoded as integers in [0, N(pi)): for a split prime the image in F_p,
/// for an inert prime q the pair (a mod q, b mod q) as a*q + b.
class PrimeField {
public:
    /// N(pi) must be below 2^62.
    explicit PrimeField(const Gaussian64& pi);

    const Gaussian64& prime() const { return pi_; }
    std::uint64_t size() const { return n_; }
    std::uint64_t characteristic() const { return p_; }
    bool inert() const { return inert_; }

    std::uint64_t index(const Gaussian64& x) const;
    std::uint64_t index(const GaussianInt& x) const;
    std::uint64_t one() const { return inert_ ? p_ : 1; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    /// Step applied to an index when x increases by 1 or by i.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t index_of_i() const { return inert_ ? 1 : t_; }

    /// Builds the O(N(pi)) lookup table of symbol exponents.
    void build_table();
    bool has_table() const { return !table_.empty(); }

    QuarticValue symbol_of_index(std::uint64_t idx) const {
        if (!table_.empty()) {
            const auto k = table_[idx];
            return k < 0 ? QuarticValue::zero() : QuarticValue::i_pow(k);
        }
        return symbol_by_power(idx);
    }
    template <class Int>
    QuarticValue symbol(const Gaussian<Int>& x) const {
        return symbol_of_index(index(x));
    }

private:
    QuarticValue symbol_by_power(std::uint64_t idx) const;

    Gaussian64 pi_;
    bool inert_ = false;
    std::uint64_t p_ = 0;  // characteristic
    std::uint64_t n_ = 0;  // field size N(pi)
    std::uint64_t t_ = 0;  // image of i in F_p (split case)
    std::vector<std::int8_t> table_;
};

/// The character x -> (x/n)_4 for a fixed primary modulus n, factored once.
class QuarticCharacter {
public:
    struct Component {
        std::shared_ptr<const PrimeField> field;
        int exponent;
    };

    explicit QuarticCharacter(const Gaussian64& n, bool with_tables = false);

    const Gaussian64& modulus() const { return n_; }
    const std::vector<Component>& components() const { return comps_; }

    template <class Int>
    QuarticValue operator()(const Gaussian<Int>& x) const {
        QuarticValue v = QuarticValue::one();
        for (const auto& c : comps_) {
            v *= c.field->symbol(x).pow(c.exponent);
            if (v.is_zero()) break;
        }
        return v;
    }

private:
    Gaussian64 n_;
    std::vector<Component> comps_;
};

/// Quartic residue symbol (a/n)_4 for n primary (n = 1 gives 1). Evaluated by
/// factoring n and reducing a modulo each prime.
QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& n);
QuarticValue quartic_symbol(const Gaussian64& a, const Gaussian64& n);

/// (i/n)_4 = i^((1-a)/2) for primary n = a+bi.
QuarticValue supplement_i(const GaussianInt& n);
/// (1+i/n)_4 = i^((a-b-1-b^2)/4) for primary n = a+bi.
QuarticValue supplement_1plusi(const GaussianInt& n);

/// Whether (m/n)_4 = (n/m)_4 (-1)^(((N(n)-1)/4)((N(m)-1)/4)) for primary,
/// coprime, non-unit m and n.
bool reciprocity_check(const GaussianInt& m, const GaussianInt& n);

/// psi_a(c) = (-1)^(((N(a)-1)/4)((N(c)-1)/4)) for odd a and c.
int psi(const GaussianInt& a, const GaussianInt& c);
int psi(const Gaussian64& a, const Gaussian64& c);

namespace oracle {

/// Brute-force symbol for a prime: computes a^((N(pi)-1)/4) mod pi with
/// generic Z[i] arithmetic and matches it against i^k mod pi.
QuarticValue quartic_symbol_prime(const GaussianInt& a, const GaussianInt& pi);

/// Multiplicative extension of the prime oracle over factor(n).
QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& n);

}  // namespace oracle

}  // namespace qm
