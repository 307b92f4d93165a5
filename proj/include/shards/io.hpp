#pragma once

#include "shards/basis.hpp"
#include "shards/matroid.hpp"
#include "shards/quotientope.hpp"
#include "shards/shard_polytope.hpp"
#include "shards/type_b.hpp"

#include <string>

namespace shards {

// arc text format "a-b|A=i,j|B=k"; empty lists written "A=|B="
std::string arc_to_string(const Arc& arc);
Arc arc_from_string(const std::string& s, int n);

// B-arc representative in [±n] coordinates, e.g. "-2-3|A=1|B=-1"
std::string barc_to_string(const BArc& b);
BArc barc_from_string(const std::string& s, int n);

// ideal files: one arc per line
std::string ideal_to_string(const ArcIdeal& ideal);
ArcIdeal ideal_from_string(const std::string& text, int n);
std::string b_ideal_to_string(const BArcIdeal& ideal);
BArcIdeal b_ideal_from_string(const std::string& text, int n);

// matching in dot notation: filled dot = used start, hollow = used end
std::string matching_to_string(const Arc& arc, const Matching& m);

// {"n":..,"kind":"A"|"B","vertices":[["p/q",..],..],"support":{"R":"p/q",..}}
std::string polytope_to_json(const VPolytope& v);
VPolytope polytope_from_json(const std::string& text);
std::string support_to_json(const SupportVector& s);

// {"basis":"s","n":4,"entries":{"1,3,4":"1"}}
std::string coeffs_to_json(const CoeffVector& c);
CoeffVector coeffs_from_json(const std::string& text);

// {"S":"value"} keyed by comma lists
std::string subset_fn_to_json(const SubsetFn& f, int n);
SubsetFn subset_fn_from_json(const std::string& text);

std::string graph_to_json(const ShardGraph& g);

std::string signed_set_to_string(const SignedSet& s);
SignedSet signed_set_from_string(const std::string& text);
Mask subset_from_string(const std::string& text);

// static renderings
std::string render_arc_svg(const std::vector<Arc>& arcs, int n);
std::string render_polytope2d_svg(const VPolytope& v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace shards
