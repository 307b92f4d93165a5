#pragma once

#include "shards/shard_polytope.hpp"

#include <map>

namespace shards {

// vertex of SP(arc) maximizing direction t, by the combinatorial rule
Vec v_of(const Vec& t, const Arc& arc);
Vec v_of_ideal(const Vec& t, const ArcIdeal& ideal);

// max of <1_R, .> over SP(arc), by the pair-counting rule
long h_of(Mask r, const Arc& arc);
long h_of_ideal(Mask r, const ArcIdeal& ideal);

// support of sum of (weighted) shard polytopes; weights default to one
SupportVector quotientope(const ArcIdeal& ideal);
SupportVector quotientope(const ArcIdeal& ideal, const std::vector<Rat>& weights);

// the chamber partition of the quotientope equals the congruence partition
bool verify_cor50(const ArcIdeal& ideal);
bool partitions_agree(const ChamberPartition& cp, const CongruencePartition& cc);

// survival of the braid ray where the R-coordinates stay minimal; agrees with
// ([n] \ R) in facet_directions(quotientope(ideal))
bool ray_check(const ArcIdeal& ideal, Mask r);

// reference realizations with closed-form vertex coordinates
VPolytope reference_loday(int n);
VPolytope reference_hl(const Arc& arc);
// single HL coordinate rule (per class representative direction t)
Vec hl_vertex(const Vec& t, const Arc& arc);
Vec loday_vertex(const Vec& t, int n);

// sum of Cambrian associahedra of the minimal arcs realizes the quotient fan
bool verify_thm1(const ArcIdeal& ideal);

// ---- PS-quotientopes ----
using SubsetFn = std::map<Mask, Rat>;

// f(S) must strictly dominate the sum over the proper outward extensions of S
// (same trace between min S and max S, larger span)
bool validate_forcing_dominant(const SubsetFn& f, int n);
SubsetFn make_forcing_dominant(int n);

SupportVector ps_quotientope(const ArcIdeal& ideal, const SubsetFn& f);

struct Prop100Report {
    bool coefficients_match = true;  // s > 0 on the ideal, 0 off it
    bool fan_matches = true;
};
Prop100Report verify_prop100(const ArcIdeal& ideal, const SubsetFn& f);
// the PS height function on a subset
Rat ps_height(const ArcIdeal& ideal, const SubsetFn& f, Mask r);
int gamma_contribution(Mask s, Mask r, int n);       // 0/1 contribution
int gamma_alternating(Mask s, Mask i, int n);        // the four-term combination

} // namespace shards
