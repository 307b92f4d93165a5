#pragma once

#include "shards/polytope.hpp"

#include <optional>
#include <variant>

namespace shards {

// Alternating matching of an arc (a,b,A,B): interleaved a_1 < b_1 < ... with
// a_i from {a} u A and b_i from B u {b}. Stored as the sorted element list.
using Matching = std::vector<int>;

std::vector<Matching> enumerate_matchings(const Arc& arc);
long matching_count(const Arc& arc);  // by the two-counter recursion
Vec matching_vector(const Matching& m, int n);

VPolytope shard_polytope(const Arc& arc);
SupportVector shard_support(const Arc& arc);

// facet inequalities: zero equalities outside [a,b] (and on undecorated
// interior points of pseudoshards), sign constraints on A and B, prefix sums
// <= 1 at falls and >= 0 at rises
enum class FacetKind { zero_coord, above_sign, below_sign, fall, rise };
struct ShardFacet {
    FacetKind kind;
    int position;   // coordinate or prefix cut
    Vec normal;     // inequality <normal, x> <= rhs
    Rat rhs;
};
std::vector<ShardFacet> shard_polytope_facets(const Arc& arc);

// falls and rises as the left points j of the consecutive pairs (j,k)
std::vector<int> arc_falls(const Arc& arc);
std::vector<int> arc_rises(const Arc& arc);

// membership in the shard cone S(a,b,A,B)
bool shard_contains(const Arc& arc, const Vec& x);

struct WallReport {
    bool walls_force = true;    // every wall splitting vertices has a cover arc forcing the arc
    bool shard_present = true;  // every wall labeled by the arc splits vertices
};
WallReport verify_prop48(const Arc& arc);
// same check for an arbitrary polytope in place of the shard polytope
WallReport wall_report(const Arc& arc, const SupportVector& s);

// translation embedding SP(alpha) + t as a face of SP(alpha') when alpha
// forces alpha'; nullopt otherwise. is_face is the exact face criterion.
std::optional<Vec> face_embedding(const Arc& arc, const Arc& target);
bool is_face_of(const Arc& arc, const Arc& target);

enum class Symmetry { phi, psi };
Arc symmetry_image(const Arc& arc, Symmetry which);
bool symmetry_check(const Arc& arc, Symmetry which);

// supports of both sides of the pseudoshard splitting identity at x
std::pair<SupportVector, SupportVector> theorem57_instance(const Arc& arc, int x);

// sum over all span-maximal arcs equals the weighted zonotope of segments
bool minimal_arc_zonotope_check(int n);

// either a disjoint pair with the same multiset union, or the tag 1..4 of the
// special family admitting no decomposition
std::variant<std::pair<Matching, Matching>, int> decompose_matching_pair(const Arc& arc,
                                                                         const Matching& m1,
                                                                         const Matching& m2);

// membership of t in the normal cone of the vertex chi(M): the edge-neighbor
// inequality system; agrees with the definitional argmax test
bool normal_cone_contains(const Arc& arc, const Matching& m, const Vec& t);
// t selects some matching containing the pair (i,j)
bool pair_selected(const Arc& arc, int i, int j, const Vec& t);
// t lies in the normal cone of an edge of SP(arc) in direction e_i - e_j
bool edge_normal_cone_contains(const Arc& arc, int i, int j, const Vec& t);

} // namespace shards
