#include "qm/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qm/factor.hpp"

namespace qm {

Gaussian64 IdealGen::generator() const {
    Gaussian64 z = a;
    for (int j = 0; j < r; ++j) z *= Gaussian64::one_plus_i();
    return z;
}

namespace {

std::int64_t radius(std::int64_t X) {
    return static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(X)));
}

void check_bound(std::int64_t X) {
    if (X < 1) throw std::domain_error("enumeration bound must be at least 1");
    if (X > (std::int64_t{1} << 40)) throw std::overflow_error("enumeration bound too large");
}

void sort_canonical(std::vector<Gaussian64>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return canonical_less(a, b); });
}

}  // namespace

std::vector<Gaussian64> enumerate_primary(std::int64_t X) {
    check_bound(X);
    const std::int64_t R = radius(X);
    std::vector<Gaussian64> out;
    out.reserve(static_cast<std::size_t>(std::ceil(0.4 * static_cast<double>(X))) + 8);
    for (std::int64_t u = -R; u <= R; ++u) {
        if ((u & 1) == 0) continue;
        const std::int64_t rest = X - u * u;
        if (rest < 0) continue;
        const std::int64_t vmax = radius(rest);
        // v = 0 mod 4 when u = 1 mod 4, v = 2 mod 4 when u = 3 mod 4.
        const std::int64_t offset = (floor_mod(u, 4) == 1) ? 0 : 2;
        std::int64_t v = -vmax + floor_mod(offset + vmax, 4);
        for (; v <= vmax; v += 4) out.push_back({u, v});
    }
    sort_canonical(out);
    return out;
}

std::vector<Gaussian64> enumerate_c_1mod16(std::int64_t X) {
    check_bound(X);
    const std::int64_t R = radius(X);
    std::vector<Gaussian64> out;
    const std::int64_t u0 = -R + floor_mod(1 + R, 16);
    for (std::int64_t u = u0; u <= R; u += 16) {
        const std::int64_t rest = X - u * u;
        if (rest < 0) continue;
        const std::int64_t vmax = radius(rest);
        for (std::int64_t v = -vmax + floor_mod(vmax, 16); v <= vmax; v += 16) out.push_back({u, v});
    }
    sort_canonical(out);
    return out;
}

std::vector<IdealGen> enumerate_ideals(std::int64_t X) {
    check_bound(X);
    const auto odd = enumerate_primary(X);
    std::vector<IdealGen> out;
    for (int r = 0; (std::int64_t{1} << r) <= X; ++r) {
        const std::int64_t scale = std::int64_t{1} << r;
        for (const auto& a : odd) {
            const std::int64_t n = scale * a.norm();
            if (n > X) break;  // odd is sorted by norm
            out.push_back({r, a, n});
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealGen& x, const IdealGen& y) {
        if (x.norm != y.norm) return x.norm < y.norm;
        if (x.r != y.r) return x.r < y.r;
        if (x.a.re != y.a.re) return x.a.re < y.a.re;
        return x.a.im < y.a.im;
    });
    return out;
}

std::vector<std::int64_t> rational_primes(std::int64_t X) {
    std::vector<std::int64_t> out;
    if (X < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(X + 1), false);
    for (std::int64_t p = 2; p <= X; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t m = p * p; m <= X; m += p) composite[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

std::vector<Gaussian64> primary_primes(std::int64_t X) {
    check_bound(X);
    std::vector<Gaussian64> out;
    for (const std::int64_t p : rational_primes(X)) {
        if (p == 2) continue;
        if (p % 4 == 3) {
            if (p <= X / p) out.push_back({-p, 0});
            continue;
        }
        for (const auto& pi : primes_above<std::int64_t>(p)) out.push_back(pi);
    }
    sort_canonical(out);
    return out;
}

}  // namespace qm
