#pragma once

#include <cstdint>
#include <vector>

#include "qm/gaussian.hpp"

namespace qm {

/// Canonical generator (1+i)^r * a of a nonzero ideal, a primary.
struct IdealGen {
    int r = 0;
    Gaussian64 a{1, 0};
    std::int64_t norm = 1;  ///< 2^r * N(a)

    Gaussian64 generator() const;
    bool operator==(const IdealGen&) const = default;
};

// All enumerations are sorted by (norm, re, im); ideals by (norm, r, re, im).

/// Primary n with N(n) <= X (includes 1).
std::vector<Gaussian64> enumerate_primary(std::int64_t X);

/// c = 1 (mod 16) with N(c) <= X, i.e. re = 1 and im = 0 (mod 16).
std::vector<Gaussian64> enumerate_c_1mod16(std::int64_t X);

/// Every nonzero ideal of norm <= X, once each.
std::vector<IdealGen> enumerate_ideals(std::int64_t X);

/// Primary primes with N(pi) <= X.
std::vector<Gaussian64> primary_primes(std::int64_t X);

/// Rational primes <= X by a sieve of Eratosthenes.
std::vector<std::int64_t> rational_primes(std::int64_t X);

}  // namespace qm
