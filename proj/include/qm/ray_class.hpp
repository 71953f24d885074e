#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qm/gaussian.hpp"

namespace qm {

class RayClassGroup;

/// Character of the ray class group mod 16. Values are exact roots of unity
/// zeta_8^k stored as exponents k mod 8 on the 32 unit orbits of
/// (Z[i]/16)^*; the character is 0 on even elements.
class RayClassChar {
public:
    static constexpr int kGroupOrder = 32;
    static constexpr int kExponent = 8;

    RayClassChar() { exps_.fill(0); }

    /// Exponent k with chi(n) = zeta_8^k, or -1 when n is even.
    int exponent_at(const Gaussian64& n) const;
    int exponent_at_element(int element) const { return exps_[static_cast<std::size_t>(element)]; }
    std::complex<double> operator()(const Gaussian64& n) const;

    RayClassChar operator*(const RayClassChar& o) const;
    RayClassChar conj() const;
    RayClassChar pow(int e) const;
    bool is_principal() const;
    bool operator==(const RayClassChar& o) const { return exps_ == o.exps_; }

    /// Exponent vector on the cyclic decomposition (empty for characters
    /// built from raw values).
    const std::vector<int>& label() const { return label_; }

    /// zeta_8^k as a complex number.
    static std::complex<double> root_of_unity(int k);

private:
    friend class RayClassGroup;
    std::array<std::int8_t, kGroupOrder> exps_{};
    std::vector<int> label_;
};

/// (Z[i]/16)^* modulo the units {1, i, -1, -i}; every class contains exactly
/// one primary residue.
class RayClassGroup {
public:
    static const RayClassGroup& instance();

    int order() const { return static_cast<int>(reps_.size()); }
    /// Number of residues mod 16 coprime to 1+i (before the unit quotient).
    int residue_unit_count() const { return residue_units_; }
    /// Orders of the cyclic factors in the chosen decomposition.
    const std::vector<int>& invariants() const { return invariants_; }
    int exponent() const { return RayClassChar::kExponent; }

    /// Primary representative (coordinates in [0,16)) of each class.
    const std::vector<Gaussian64>& representatives() const { return reps_; }
    /// Class of n, or -1 when n is even.
    int element_index(const Gaussian64& n) const;
    int multiply(int a, int b) const { return mult_[static_cast<std::size_t>(a * 32 + b)]; }
    /// Coordinates of an element on the cyclic decomposition.
    const std::vector<int>& coordinates(int element) const { return coords_[static_cast<std::size_t>(element)]; }

    /// All characters, indexed canonically by exponent vector (lexicographic).
    const std::vector<RayClassChar>& characters() const { return chars_; }
    const RayClassChar& principal() const { return chars_.front(); }

    /// The character psi_a: n -> (-1)^(((N(a)-1)/4)((N(n)-1)/4)).
    RayClassChar psi_character(const Gaussian64& a) const;

private:
    RayClassGroup();
    void decompose();

    int residue_units_ = 0;
    std::array<std::int8_t, 256> class_of_{};  // residue (re*16+im) -> class, -1 if even
    std::vector<Gaussian64> reps_;
    std::vector<int> mult_;
    std::vector<int> invariants_;
    std::vector<std::vector<int>> coords_;
    std::vector<RayClassChar> chars_;
};

}  // namespace qm
