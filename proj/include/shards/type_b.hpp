#pragma once

#include "shards/polytope.hpp"

#include <functional>
#include <optional>

namespace shards {

// Signed permutations are words of n values in [-n,n] \ {0} with distinct
// absolute values; they index the chambers of the type B Coxeter fan.

// points of [±n] mapped to the ground [2n]: -n..-1 -> 1..n, 1..n -> n+1..2n
int signed_to_ground(int v, int n);
int ground_to_signed(int g, int n);
Arc arc_to_ground(int a, int b, const std::vector<int>& above, const std::vector<int>& below, int n);

// central symmetry of arcs on the ground [2n]
Arc negate_arc(const Arc& arc2n);
bool centrally_symmetrizable(const Arc& arc2n);

enum class BClass { separated, singular, overlapped };

// A B-arc: a centrally symmetric arc on [±n] or a noncrossing centrally
// symmetric pair; stored by the representative (rightmost) arc on [2n].
struct BArc {
    Arc rep;   // on ground [2n]
    int nb = 0;

    auto operator<=>(const BArc&) const = default;
};

BArc make_barc(const Arc& arc2n, int n);  // normalizes to the representative
std::vector<BArc> enumerate_b_arcs(int n);
BClass classify(const BArc& b);
// the A-arc of the pair passing above the other one (overlapped only)
Arc upper_arc(const BArc& b);
bool b_forces(const BArc& x, const BArc& y);

struct BArcIdeal {
    int n = 0;
    std::vector<BArc> barcs;  // sorted

    bool contains(const BArc& b) const;
    auto operator<=>(const BArcIdeal&) const = default;
};

BArcIdeal make_b_ideal(int n, std::vector<BArc> barcs);
BArcIdeal b_close_upward(const std::vector<BArc>& seed, int n);
BArcIdeal full_b_ideal(int n);
void for_each_b_ideal(int n, const std::function<void(const BArcIdeal&)>& fn);
std::vector<BArcIdeal> enumerate_b_ideals(int n);
std::vector<BArc> b_minimal_arcs(const BArcIdeal& ideal);

// type A ideal on the ground [2n] -> B-arc ideal of its symmetrizable arcs;
// NotAnIdeal when the result is not closed under B-forcing
BArcIdeal symmetrize_ideal(const ArcIdeal& ideal2n, int n);
// whether the B-ideal arises from a type A ideal this way
bool is_symmetrized(const BArcIdeal& ideal);

// ---- B-permutations ----
// full centrally symmetric word on the ground [2n]
Perm b_full_word(const Perm& signed_word);
std::optional<Perm> b_signed_from_full(const Perm& word2n);

std::vector<BArc> b_perm_to_diagram(const Perm& signed_word, Color color);
// inverse via the type A inverse on the symmetric diagram; AsymmetricInverse
// if the tie-broken type A inverse is not centrally symmetric
Perm b_diagram_to_perm(const std::vector<BArc>& diagram, int n, Color color);

Perm barc_to_join_irreducible(const BArc& b);

// covers of the B-weak order going down from the word; fn(lower, arc)
void for_each_b_cover_down(const Perm& signed_word,
                           const std::function<void(const Perm&, const BArc&)>& fn);

struct BCongruencePartition {
    int n = 0;
    int num_classes = 0;
    std::vector<int> class_of;  // indexed like the B frame chambers

    bool operator==(const BCongruencePartition&) const = default;
};
BCongruencePartition b_congruence_classes(const BArcIdeal& ideal);
bool b_partitions_agree(const ChamberPartition& cp, const BCongruencePartition& cc);

// fold a polytope on [±n] coordinates to R^n: x_i - x_{-i}
VPolytope rho_b_project(const VPolytope& v2n);

VPolytope b_shard_polytope(const BArc& b);
SupportVector b_shard_support(const BArc& b);
bool b_shard_contains(const BArc& b, const Vec& x);

SupportVector b_quotientope(const BArcIdeal& ideal);
SupportVector b_quotientope(const BArcIdeal& ideal, const std::vector<Rat>& weights);
bool verify_cor131(const BArcIdeal& ideal);

// survival of the ray of a signed subset in the quotient fan
bool b_ray_check(const BArcIdeal& ideal, const SignedSet& r);

struct BWallReport {
    bool walls_force = true;
    bool shard_present = true;
};
BWallReport verify_prop130(const BArc& b);

struct BIndecomposabilityRow {
    BArc barc;
    int summand_dim = 0;
};
std::vector<BIndecomposabilityRow> b_indecomposability_report(int n);

// axis crossings of the representative arc, with the signed positions
struct BCrossing {
    int left = 0, right = 0;  // consecutive decorated points, opposite sides
    bool at_origin() const { return left < 0 && 0 < right; }
};
std::vector<BCrossing> b_crossings(const BArc& b);

struct BRegularityRow {
    BArcIdeal ideal;
    bool regular = false;
    bool cond_i = false;   // some maximal complement arc non-singular and crossing
    bool cond_ii = false;  // maximal complement arcs crossing-free, except
                           // singular ones crossing only at the origin
};
struct BRegularityReport {
    std::vector<BRegularityRow> rows;
    long violations_i = 0;   // cond_i holding on a regular quotient
    long violations_ii = 0;  // cond_ii holding on an irregular quotient
    long regular_without_ii = 0;
    long irregular_without_i = 0;
};
BRegularityReport b_regularity_experiment(int n);
bool b_quotient_regular(const BArcIdeal& ideal);

} // namespace shards
