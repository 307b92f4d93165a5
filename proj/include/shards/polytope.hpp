#pragma once

#include "shards/fan.hpp"

#include <optional>

namespace shards {

// Upper-set support values: s[r] = max over the polytope of <1_R, x> for each
// frame ray R (type A includes R = [n], which carries the coordinate sum).
// Tight by construction or validated.
struct SupportVector {
    const FanFrame* frame = nullptr;
    std::vector<Rat> s;

    bool operator==(const SupportVector&) const = default;
};

// Deduplicated, lexicographically sorted exact vertex list.
struct VPolytope {
    Kind kind = Kind::A;
    int n = 0;
    std::vector<Vec> verts;

    bool operator==(const VPolytope&) const = default;
};

// Partition of the frame chambers (blocks = chambers sharing a vertex).
// block_of uses first-occurrence ids, so equal partitions compare equal.
struct ChamberPartition {
    const FanFrame* frame = nullptr;
    int num_blocks = 0;
    std::vector<int> block_of;

    bool operator==(const ChamberPartition&) const = default;
};

SupportVector zero_support(Kind kind, int n);
SupportVector support_from_points(const std::vector<Vec>& pts, Kind kind, int n);
SupportVector support_from_vertices(const VPolytope& v);

// candidate vertex of chamber c by the triangular solve along the ray chain
Vec chamber_vertex(const SupportVector& s, int c);
// all chamber vertices, deduplicated; throws NotTight if the support of the
// result does not reproduce s
VPolytope vertices_from_support(const SupportVector& s);
bool is_tight(const SupportVector& s);

// hull of a point cloud, via support + chamber solve; valid for deformed
// permutahedra (every polytope this library builds)
VPolytope hull_of_points(std::vector<Vec> pts, Kind kind, int n);

// type A: Prop-62 submodularity; type B: wall-local second differences
bool is_deformed_permutahedron(const SupportVector& s);

SupportVector minkowski_sum(const SupportVector& a, const SupportVector& b);
SupportVector scale(const SupportVector& a, const Rat& lambda);      // NegativeScale
SupportVector translate(const SupportVector& a, const Vec& t);

ChamberPartition chamber_partition(const SupportVector& s);
bool coarsens(const ChamberPartition& p, const ChamberPartition& q);  // FrameMismatch
ChamberPartition common_refinement(const ChamberPartition& p, const ChamberPartition& q);
// a partition is connected if each block is connected in chamber adjacency
bool partition_blocks_connected(const ChamberPartition& p);

// rays whose maximizing face is a facet of the full-dimensional polytope
// (affine dimension n-2 within the sum hyperplane for A, n-1 for B)
std::vector<int> facet_directions(const SupportVector& s);

// intrinsic facets (codimension 1 in the affine hull): vertex index sets
std::vector<std::vector<int>> intrinsic_facets(const VPolytope& v);

int affine_dim(const std::vector<Vec>& pts);

VPolytope caged_translate(const VPolytope& v);
Vec caging_vector(const VPolytope& v);

// dimension of the space of weak Minkowski summand height vectors, modulo
// translations; 1 means indecomposable
int summand_space_dim(const SupportVector& s);
bool is_indecomposable(const SupportVector& s);

// every facet meets the given edge (sufficient for indecomposability since
// edges are indecomposable); NotAnEdge if the segment is not an edge
bool mcmullen_check(const VPolytope& v, int vi, int vj);

// exact rank of a rational matrix
int rank_of(std::vector<Vec> rows);

// convert between outer maxima s(R) and inner heights z_R = s([n]) - s([n]\R)
// (type A); returns values indexed by subset mask
std::map<Mask, Rat> support_convert_to_inner(const SupportVector& s);
SupportVector support_from_inner(const std::map<Mask, Rat>& z, int n);

} // namespace shards
