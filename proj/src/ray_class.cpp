#include "qm/ray_class.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace qm {

// ---------------------------------------------------------------------------
// RayClassChar

std::complex<double> RayClassChar::root_of_unity(int k) {
    static const double h = std::sqrt(0.5);
    static const std::complex<double> table[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h},
                                                  {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    return table[((k % 8) + 8) % 8];
}

int RayClassChar::exponent_at(const Gaussian64& n) const {
    const int e = RayClassGroup::instance().element_index(n);
    return e < 0 ? -1 : exps_[static_cast<std::size_t>(e)];
}

std::complex<double> RayClassChar::operator()(const Gaussian64& n) const {
    const int k = exponent_at(n);
    return k < 0 ? std::complex<double>{0.0, 0.0} : root_of_unity(k);
}

RayClassChar RayClassChar::operator*(const RayClassChar& o) const {
    RayClassChar out;
    for (int j = 0; j < kGroupOrder; ++j) out.exps_[j] = static_cast<std::int8_t>((exps_[j] + o.exps_[j]) % kExponent);
    return out;
}

RayClassChar RayClassChar::conj() const {
    RayClassChar out;
    for (int j = 0; j < kGroupOrder; ++j) out.exps_[j] = static_cast<std::int8_t>((kExponent - exps_[j]) % kExponent);
    return out;
}

RayClassChar RayClassChar::pow(int e) const {
    RayClassChar out;
    const int ee = ((e % kExponent) + kExponent) % kExponent;
    for (int j = 0; j < kGroupOrder; ++j) out.exps_[j] = static_cast<std::int8_t>((exps_[j] * ee) % kExponent);
    return out;
}

bool RayClassChar::is_principal() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int8_t k) { return k == 0; });
}

// ---------------------------------------------------------------------------
// RayClassGroup

const RayClassGroup& RayClassGroup::instance() {
    static const RayClassGroup group;
    return group;
}

RayClassGroup::RayClassGroup() {
    class_of_.fill(-1);
    std::vector<std::pair<int, int>> rep_of(256, {-1, -1});
    std::vector<std::pair<int, int>> distinct;
    for (int re = 0; re < 16; ++re) {
        for (int im = 0; im < 16; ++im) {
            if ((re + im) % 2 == 0) continue;  // divisible by 1+i
            ++residue_units_;
            // Walk the unit orbit {z, iz, -z, -iz} mod 16 and keep its primary member.
            Gaussian64 z{re, im};
            for (int k = 0; k < 4; ++k) {
                if (is_primary(z)) rep_of[static_cast<std::size_t>(re * 16 + im)] = {static_cast<int>(z.re), static_cast<int>(z.im)};
                z = Gaussian64{floor_mod(-z.im, 16), floor_mod(z.re, 16)};
            }
            distinct.push_back(rep_of[static_cast<std::size_t>(re * 16 + im)]);
        }
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto& [re, im] : distinct) reps_.push_back({re, im});
    for (int idx = 0; idx < 256; ++idx) {
        if (rep_of[static_cast<std::size_t>(idx)].first < 0) continue;
        const auto it = std::lower_bound(distinct.begin(), distinct.end(), rep_of[static_cast<std::size_t>(idx)]);
        class_of_[static_cast<std::size_t>(idx)] = static_cast<std::int8_t>(it - distinct.begin());
    }
    const int n = order();
    if (n != RayClassChar::kGroupOrder) throw std::logic_error("RayClassGroup: unexpected group order");
    mult_.assign(static_cast<std::size_t>(n * n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) mult_[static_cast<std::size_t>(a * n + b)] = element_index(reps_[a] * reps_[b]);
    }
    decompose();
}

int RayClassGroup::element_index(const Gaussian64& n) const {
    if (!n.is_odd()) return -1;
    const auto re = floor_mod(n.re, 16);
    const auto im = floor_mod(n.im, 16);
    return class_of_[static_cast<std::size_t>(re * 16 + im)];
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Diagonalizes A by unimodular row and column operations; the column
// operations are accumulated into V so that rowspan(A_original) * V is the
// rowspan of the final diagonal matrix.
void diagonalize(Matrix& A, Matrix& V) {
    const std::size_t k = A.size();
    V.assign(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) V[j][j] = 1;
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto& row : A) std::swap(row[a], row[b]);
        for (auto& row : V) std::swap(row[a], row[b]);
    };
    auto col_sub = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        for (auto& row : A) row[dst] -= q * row[src];
        for (auto& row : V) row[dst] -= q * row[src];
    };
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t bi = k, bj = k;
            for (std::size_t i = t; i < k; ++i) {
                for (std::size_t j = t; j < k; ++j) {
                    if (A[i][j] == 0) continue;
                    if (bi == k || std::llabs(A[i][j]) < std::llabs(A[bi][bj])) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == k) throw std::logic_error("diagonalize: relation matrix is singular");
            std::swap(A[t], A[bi]);
            if (bj != t) swap_cols(t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < k; ++i) {
                const std::int64_t q = A[i][t] / A[t][t];
                for (std::size_t j = 0; j < k; ++j) A[i][j] -= q * A[t][j];
                clean = clean && A[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < k; ++j) {
                col_sub(j, t, A[t][j] / A[t][t]);
                clean = clean && A[t][j] == 0;
            }
            if (clean) break;
        }
        if (A[t][t] < 0) {
            for (auto& row : A) row[t] = -row[t];
            for (auto& row : V) row[t] = -row[t];
        }
    }
}

}  // namespace

void RayClassGroup::decompose() {
    const int n = order();
    const int identity = element_index(Gaussian64{1, 0});

    // Build a generating set and its relation lattice incrementally.
    std::map<int, std::vector<std::int64_t>> subgroup{{identity, {}}};
    std::vector<int> gens;
    Matrix relations;
    for (int g = 0; g < n; ++g) {
        if (subgroup.count(g)) continue;
        const std::size_t j = gens.size();
        gens.push_back(g);
        for (auto& [el, vec] : subgroup) vec.push_back(0);
        for (auto& row : relations) row.push_back(0);
        int power = g;
        std::int64_t m = 1;
        while (!subgroup.count(power)) {
            power = multiply(power, g);
            ++m;
        }
        std::vector<std::int64_t> rel(j + 1, 0);
        const auto& inside = subgroup.at(power);
        for (std::size_t q = 0; q < j; ++q) rel[q] = -inside[q];
        rel[j] = m;
        relations.push_back(rel);

        std::map<int, std::vector<std::int64_t>> grown;
        for (const auto& [el, vec] : subgroup) {
            int cur = el;
            for (std::int64_t t = 0; t < m; ++t) {
                auto v = vec;
                v[j] = t;
                grown.emplace(cur, std::move(v));
                cur = multiply(cur, g);
            }
        }
        subgroup = std::move(grown);
    }
    if (static_cast<int>(subgroup.size()) != n) throw std::logic_error("decompose: generators do not span");

    Matrix D = relations;
    Matrix V;
    diagonalize(D, V);
    const std::size_t k = gens.size();

    // Keep nontrivial cyclic factors, largest first.
    std::vector<std::size_t> factors;
    for (std::size_t t = 0; t < k; ++t) {
        if (D[t][t] > 1) factors.push_back(t);
    }
    std::stable_sort(factors.begin(), factors.end(), [&](std::size_t a, std::size_t b) { return D[a][a] > D[b][b]; });
    invariants_.clear();
    for (const auto t : factors) invariants_.push_back(static_cast<int>(D[t][t]));

    coords_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [el, vec] : subgroup) {
        std::vector<int> c;
        for (const auto t : factors) {
            std::int64_t s = 0;
            for (std::size_t q = 0; q < k; ++q) s += vec[q] * V[q][t];
            c.push_back(static_cast<int>(floor_mod(s, D[t][t])));
        }
        coords_[static_cast<std::size_t>(el)] = std::move(c);
    }

    int total = 1;
    for (const int d : invariants_) total *= d;
    if (total != n) throw std::logic_error("decompose: invariant product differs from group order");
    for (const int d : invariants_) {
        if (RayClassChar::kExponent % d != 0) throw std::logic_error("decompose: exponent exceeds 8");
    }

    // Characters by exponent vector in lexicographic order.
    std::vector<int> label(invariants_.size(), 0);
    for (int count = 0; count < n; ++count) {
        RayClassChar chi;
        chi.label_ = label;
        for (int el = 0; el < n; ++el) {
            int e = 0;
            for (std::size_t f = 0; f < invariants_.size(); ++f)
                e += label[f] * coords_[static_cast<std::size_t>(el)][f] * (RayClassChar::kExponent / invariants_[f]);
            chi.exps_[static_cast<std::size_t>(el)] = static_cast<std::int8_t>(e % RayClassChar::kExponent);
        }
        chars_.push_back(std::move(chi));
        for (std::size_t f = invariants_.size(); f-- > 0;) {
            if (++label[f] < invariants_[f]) break;
            label[f] = 0;
        }
    }
}

RayClassChar RayClassGroup::psi_character(const Gaussian64& a) const {
    if (!a.is_odd()) throw std::domain_error("psi_character: argument must be odd");
    RayClassChar chi;
    const bool a_odd = floor_mod(a.norm(), 8) == 5;
    for (int el = 0; el < order(); ++el) {
        const bool c_odd = floor_mod(reps_[static_cast<std::size_t>(el)].norm(), 8) == 5;
        chi.exps_[static_cast<std::size_t>(el)] = (a_odd && c_odd) ? 4 : 0;
    }
    return chi;
}

}  // namespace qm
