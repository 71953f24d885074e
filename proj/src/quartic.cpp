#include "qm/quartic.hpp"

#include <stdexcept>

namespace qm {

std::complex<double> QuarticValue::to_complex() const {
    if (zero_) return {0.0, 0.0};
    switch (k_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

std::string QuarticValue::to_string() const {
    if (zero_) return "0";
    static const char* const kNames[] = {"1", "i", "-1", "-i"};
    return kNames[k_];
}

// ---------------------------------------------------------------------------
// PrimeField

PrimeField::PrimeField(const Gaussian64& pi) : pi_(pi) {
    if (!pi.is_odd() || !is_primary(pi) || pi.is_unit())
        throw std::domain_error("PrimeField: expects an odd primary prime");
    const std::int64_t nrm = pi.norm();
    if (nrm >= (std::int64_t{1} << 62)) throw std::overflow_error("PrimeField: norm too large");
    n_ = static_cast<std::uint64_t>(nrm);
    if (pi.im == 0 || pi.re == 0) {
        inert_ = true;
        p_ = static_cast<std::uint64_t>(pi.im == 0 ? std::abs(pi.re) : std::abs(pi.im));
        if (p_ % 4 != 3) throw std::domain_error("PrimeField: rational factor is not an inert prime");
    } else {
        p_ = n_;
        // pi = u + v*i = 0 in F_p, so i = -u / v.
        const std::uint64_t u = static_cast<std::uint64_t>(floor_mod(pi.re, nrm));
        const std::uint64_t v = static_cast<std::uint64_t>(floor_mod(pi.im, nrm));
        const std::uint64_t v_inv = powmod(v, p_ - 2, p_);
        t_ = (p_ - mulmod(u, v_inv, p_)) % p_;
        if (mulmod(t_, t_, p_) != p_ - 1) throw std::domain_error("PrimeField: norm is not prime");
    }
}

std::uint64_t PrimeField::index(const Gaussian64& x) const {
    const auto m = static_cast<std::int64_t>(p_);
    const auto a = static_cast<std::uint64_t>(floor_mod(x.re, m));
    const auto b = static_cast<std::uint64_t>(floor_mod(x.im, m));
    if (inert_) return a * p_ + b;
    return (a + mulmod(b, t_, p_)) % p_;
}

std::uint64_t PrimeField::index(const GaussianInt& x) const {
    const auto a = static_cast<std::uint64_t>(mpz_fdiv_ui(x.re.get_mpz_t(), p_));
    const auto b = static_cast<std::uint64_t>(mpz_fdiv_ui(x.im.get_mpz_t(), p_));
    if (inert_) return a * p_ + b;
    return (a + mulmod(b, t_, p_)) % p_;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    if (!inert_) return mulmod(a, b, p_);
    const std::uint64_t a1 = a / p_, a2 = a % p_, b1 = b / p_, b2 = b % p_;
    const std::uint64_t re = (a1 * b1 + (p_ - a2) * b2) % p_;
    const std::uint64_t im = (a1 * b2 + a2 * b1) % p_;
    return re * p_ + im;
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    if (!inert_) return (a + b) % p_;
    return ((a / p_ + b / p_) % p_) * p_ + (a % p_ + b % p_) % p_;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = one();
    while (e != 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

QuarticValue PrimeField::symbol_by_power(std::uint64_t idx) const {
    if (idx == 0) return QuarticValue::zero();
    const std::uint64_t v = pow(idx, (n_ - 1) / 4);
    const std::uint64_t i_idx = index_of_i();
    if (v == one()) return QuarticValue::i_pow(0);
    if (v == i_idx) return QuarticValue::i_pow(1);
    if (v == mul(i_idx, i_idx)) return QuarticValue::i_pow(2);
    if (v == mul(mul(i_idx, i_idx), i_idx)) return QuarticValue::i_pow(3);
    throw std::logic_error("PrimeField: power is not a fourth root of unity");
}

void PrimeField::build_table() {
    if (!table_.empty()) return;
    if (n_ > (std::uint64_t{1} << 32)) throw std::length_error("PrimeField: table too large");
    const std::uint64_t order = n_ - 1;
    std::vector<std::uint64_t> ell;
    {
        std::uint64_t m = order;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d != 0) continue;
            ell.push_back(d);
            while (m % d == 0) m /= d;
        }
        if (m > 1) ell.push_back(m);
    }
    std::uint64_t gen = 0;
    for (std::uint64_t cand = 2; cand < n_; ++cand) {
        bool ok = true;
        for (const auto l : ell) {
            if (pow(cand, order / l) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = cand;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("PrimeField: no generator found");
    // gen^(order/4) is a primitive fourth root of unity, i.e. i or -i.
    const int k0 = (pow(gen, order / 4) == index_of_i()) ? 1 : 3;
    table_.assign(n_, -1);
    std::uint64_t x = one();
    for (std::uint64_t j = 0; j < order; ++j) {
        table_[x] = static_cast<std::int8_t>((k0 * (j % 4)) % 4);
        x = mul(x, gen);
    }
}

// ---------------------------------------------------------------------------
// QuarticCharacter

QuarticCharacter::QuarticCharacter(const Gaussian64& n, bool with_tables) : n_(n) {
    if (!is_primary(n)) throw std::domain_error("quartic symbol: modulus must be primary");
    if (n.is_unit()) return;
    for (const auto& [pi, e] : factor(n).factors) {
        auto field = std::make_shared<PrimeField>(pi);
        if (with_tables) field->build_table();
        comps_.push_back({std::move(field), e});
    }
}

QuarticValue quartic_symbol(const Gaussian64& a, const Gaussian64& n) {
    return QuarticCharacter(n)(a);
}

QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& n) {
    if (!n.is_odd()) throw std::domain_error("quartic symbol: modulus must be odd");
    if (!is_primary(n)) throw std::domain_error("quartic symbol: modulus must be primary");
    return QuarticCharacter(to_g64(n))(a);
}

// ---------------------------------------------------------------------------
// Supplements, reciprocity, psi

namespace {

void require_primary(const GaussianInt& n, const char* what) {
    if (!n.is_odd() || !is_primary(n)) throw std::domain_error(std::string(what) + ": argument must be primary");
}

int exact_quarter_mod4(const BigInt& numerator) {
    if (mpz_fdiv_ui(numerator.get_mpz_t(), 4) != 0) throw std::logic_error("supplement exponent is not integral");
    const BigInt q = numerator / 4;
    return mod4(q);
}

}  // namespace

QuarticValue supplement_i(const GaussianInt& n) {
    require_primary(n, "supplement_i");
    const BigInt num = BigInt(1 - n.re);
    if (mpz_fdiv_ui(num.get_mpz_t(), 2) != 0) throw std::logic_error("supplement_i: odd numerator");
    return QuarticValue::i_pow(mod4(BigInt(num / 2)));
}

QuarticValue supplement_1plusi(const GaussianInt& n) {
    require_primary(n, "supplement_1plusi");
    const BigInt& a = n.re;
    const BigInt& b = n.im;
    return QuarticValue::i_pow(exact_quarter_mod4(BigInt(a - b - 1 - b * b)));
}

bool reciprocity_check(const GaussianInt& m, const GaussianInt& n) {
    require_primary(m, "reciprocity_check");
    require_primary(n, "reciprocity_check");
    if (m.is_unit() || n.is_unit()) throw std::domain_error("reciprocity_check: arguments must be non-units");
    if (!coprime(m, n)) throw std::domain_error("reciprocity_check: arguments must be coprime");
    QuarticValue rhs = quartic_symbol(n, m);
    if (psi(m, n) < 0) rhs *= QuarticValue::i_pow(2);
    return quartic_symbol(m, n) == rhs;
}

int psi(const Gaussian64& a, const Gaussian64& c) {
    if (!a.is_odd() || !c.is_odd()) throw std::domain_error("psi: arguments must be odd");
    const bool odd_a = floor_mod(a.norm(), 8) == 5;
    const bool odd_c = floor_mod(c.norm(), 8) == 5;
    return (odd_a && odd_c) ? -1 : 1;
}

int psi(const GaussianInt& a, const GaussianInt& c) {
    if (!a.is_odd() || !c.is_odd()) throw std::domain_error("psi: arguments must be odd");
    const bool odd_a = mpz_fdiv_ui(a.norm().get_mpz_t(), 8) == 5;
    const bool odd_c = mpz_fdiv_ui(c.norm().get_mpz_t(), 8) == 5;
    return (odd_a && odd_c) ? -1 : 1;
}

// ---------------------------------------------------------------------------
// Oracle

namespace oracle {

QuarticValue quartic_symbol_prime(const GaussianInt& a, const GaussianInt& pi) {
    if (!pi.is_odd()) throw std::domain_error("oracle: prime must be odd");
    if (divides(pi, a)) return QuarticValue::zero();
    auto reduce = [&](const GaussianInt& z) { return divrem(z, pi).remainder; };
    BigInt e = BigInt(pi.norm() - 1) / 4;
    GaussianInt base = reduce(a);
    GaussianInt acc{BigInt(1), BigInt(0)};
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = reduce(acc * base);
        base = reduce(base * base);
        e /= 2;
    }
    for (int k = 0; k < 4; ++k) {
        if (divides(pi, GaussianInt(acc - GaussianInt::unit(k)))) return QuarticValue::i_pow(k);
    }
    throw std::logic_error("oracle: power is not congruent to a fourth root of unity");
}

QuarticValue quartic_symbol(const GaussianInt& a, const GaussianInt& n) {
    if (!is_primary(n)) throw std::domain_error("oracle: modulus must be primary");
    QuarticValue v = QuarticValue::one();
    if (n.is_unit()) return v;
    for (const auto& [pi, e] : factor(n).factors) v *= quartic_symbol_prime(a, pi).pow(e);
    return v;
}

}  // namespace oracle

}  // namespace qm
