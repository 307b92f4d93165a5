#pragma once

#include "shards/polytope.hpp"

#include <map>
#include <optional>

namespace shards {

enum class BasisKind { s, y, z };

// Formal coordinates of a (virtual) caged deformed permutahedron in the shard
// basis (s), simplex basis (y) or height basis (z). Keys are the subsets of
// size >= 2; missing key means zero.
struct CoeffVector {
    BasisKind basis = BasisKind::s;
    int n = 0;
    std::map<Mask, Rat> entries;

    Rat at(Mask m) const {
        auto it = entries.find(m);
        return it == entries.end() ? Rat(0) : it->second;
    }
    void set(Mask m, const Rat& v) {
        if (v == 0) entries.erase(m);
        else entries[m] = v;
    }
    bool operator==(const CoeffVector&) const = default;
};

// the arc indexed by a subset: endpoints min/max, interior of I above
Arc arc_of_subset(Mask i, int n);
// I |> J and the exponent |J|_I
bool triangle(Mask i, Mask j);
int weight(Mask j, Mask i);

// caged basis polytopes as supports
SupportVector translated_shard_support(Mask i, int n);  // SP(alpha_I) + 1_{B u b}
SupportVector simplex_support(Mask j, int n);           // conv{e_j : j in J}

CoeffVector s_to_y(const CoeffVector& s);
CoeffVector y_to_s(const CoeffVector& y);
CoeffVector y_to_z(const CoeffVector& y);
CoeffVector z_to_y(const CoeffVector& z);
CoeffVector s_to_z(const CoeffVector& s);
CoeffVector z_to_s(const CoeffVector& z);

// m(I,R): pairs r < s in R, both in ]min I,max I[ Delta I, with equal traces
long height_multiplicity(Mask i, Mask r);

enum class MatrixKind { y_of_s, s_of_y, z_of_s, s_of_z, z_of_y, y_of_z };
// conversion matrix in the canonical subset order
std::vector<Vec> build_matrix(MatrixKind which, int n);

std::vector<Vec> matrix_multiply(const std::vector<Vec>& a, const std::vector<Vec>& b);
std::vector<Vec> matrix_identity(int n);
// monic minimal polynomial, constant coefficient first
Vec minimal_polynomial(const std::vector<Vec>& m);

struct Realization {
    bool virtual_element = false;  // submodularity fails; no actual polytope
    std::optional<SupportVector> support;
    CoeffVector z;  // formal heights either way
};
Realization realize(const CoeffVector& coeffs);

// unique coefficients of a caged deformed permutahedron; auto_cage translates
// first, otherwise NotCaged on uncaged input. NotDeformedPermutahedron if the
// support is not submodular.
CoeffVector decompose(const SupportVector& s, BasisKind target, bool auto_cage = true);
CoeffVector decompose(const VPolytope& v, BasisKind target, bool auto_cage = true);

} // namespace shards
