#pragma once

#include "shards/rational.hpp"
#include "shards/subsets.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <vector>

namespace shards {

// An arc (a,b,A,B): two endpoints 1 <= a < b <= n and the sets of interior
// points passed above (A) and below (B). For a full arc A and B partition
// ]a,b[; pseudoarcs leave some interior points undecorated and pin the
// corresponding coordinates of their polytope to zero.
struct Arc {
    int a = 0, b = 0;
    Mask above = 0, below = 0;
    int n = 0;

    bool is_full() const { return (above | below) == interval_open(a, b); }
    auto operator<=>(const Arc&) const = default;
};

void validate_arc(const Arc& arc, bool allow_pseudo = false);

// all 2^n - n - 1 full arcs, ordered by (a, b, above)
std::vector<Arc> enumerate_arcs(int n);

bool arcs_cross(const Arc& x, const Arc& y);

// x forces y: x's endpoints lie between y's and the decorations agree in
// between, i.e. y.a <= x.a < x.b <= y.b, A_x subset A_y, B_x subset B_y.
bool forces(const Arc& x, const Arc& y);

// horizontal and vertical reflections of the diagram
Arc phi_arc(const Arc& arc);  // swap above/below
Arc psi_arc(const Arc& arc);  // i -> n+1-i

// axis crossings: transitions between consecutive decorated interior points
int crossing_count(const Arc& arc);

// ---- permutations (words of 1..n, lex indexed) ----
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
long perm_rank(const Perm& p);        // lex rank, 0-based
Perm perm_unrank(int n, long rank);
long factorial(int n);

enum class Color { down, up };

struct NoncrossingDiagram {
    std::vector<Arc> arcs;  // sorted
    Color color = Color::down;
    int n = 0;
};

// descent (down) / ascent (up) diagram of a permutation
NoncrossingDiagram perm_to_diagram(const Perm& p, Color color);
// inverse bijection; throws InvalidDiagram on crossing or repeated endpoints
Perm diagram_to_perm(const NoncrossingDiagram& d);

// the arc labeling the weak-order cover obtained by sorting positions i, i+1
// of tau (descent required; 1-based position)
Arc cover_arc(const Perm& tau, int i);

// join-irreducible permutation of an arc: [1..a-1, A, b, a, B, b+1..n]
Perm arc_to_join_irreducible(const Arc& arc);

// ---- arc ideals (upper sets of the forcing poset: closed under passing to
// arcs that force a member) ----
struct ArcIdeal {
    int n = 0;
    std::vector<Arc> arcs;  // sorted

    bool contains(const Arc& arc) const;
    auto operator<=>(const ArcIdeal&) const = default;
};

ArcIdeal make_ideal(int n, std::vector<Arc> arcs);  // sorts, validates closure
ArcIdeal close_upward(const std::vector<Arc>& seed, int n);
ArcIdeal cambrian_ideal(const Arc& arc);
ArcIdeal sylvester_ideal(int n);
ArcIdeal full_ideal(int n);
// generators = forcing-minimal arcs of the ideal
std::vector<Arc> minimal_arcs(const ArcIdeal& ideal);
bool is_upper_ideal(const ArcIdeal& ideal);

// enumerate every upper ideal exactly once, deterministic order
void for_each_arc_ideal(int n, const std::function<void(const ArcIdeal&)>& fn);
std::vector<ArcIdeal> enumerate_arc_ideals(int n);

// ---- congruence classes ----
// weak-order cover edges; fn(lower perm index, upper perm index, cover arc)
void for_each_weak_cover(int n, const std::function<void(long, long, const Arc&)>& fn);

// orientation direction of the weak-order Hasse diagram
Vec weak_order_direction(int n);

struct CongruencePartition {
    int n = 0;
    int num_classes = 0;
    std::vector<int> class_of;   // by perm lex rank; ids by first occurrence
    std::vector<long> class_min; // perm rank of the weak-order minimum

    bool operator==(const CongruencePartition&) const = default;
};

// contract the covers whose arc lies outside the ideal; classes are the
// connected components
CongruencePartition congruence_classes(const ArcIdeal& ideal);

// weak-order minimum of sigma's class
Perm pi_down(const Perm& sigma, const ArcIdeal& ideal);

struct RegularityReport {
    bool hasse_regular = false;  // quotient Hasse diagram has constant degree
    bool hm21 = false;           // maximal arcs of the complement are up or down arcs
};
RegularityReport regularity_check(const ArcIdeal& ideal);

} // namespace shards
