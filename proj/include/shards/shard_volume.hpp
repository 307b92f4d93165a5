#pragma once

#include "shards/basis.hpp"

namespace shards {

// Hall-type condition: every k of the subsets cover at least k+1 points.
// Conditions 2 (distinct representatives avoiding each point) and 3 (pair
// representatives forming a spanning tree) are equivalent cross-checks.
bool dragon_marriage(const std::vector<Mask>& sets, int n);
bool dragon_marriage_sdr(const std::vector<Mask>& sets, int n);
bool dragon_marriage_tree(const std::vector<Mask>& sets, int n);

// 1/(n-1)! when the dragon marriage condition holds, 0 otherwise
Rat simplex_mixed_volume(const std::vector<Mask>& sets, int n);

// signed sum over admissible subset collections with the dragon marriage
// condition
Rat shard_mixed_volume(const std::vector<Arc>& arcs);

// closed-form volume of a single shard polytope (0 unless b - a = n - 1)
Rat shard_volume(const Arc& arc);

} // namespace shards
