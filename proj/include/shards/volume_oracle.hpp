#pragma once

#include "shards/polytope.hpp"

namespace shards {

// Exact volume of the coordinate projection dropping the last coordinate
// (type A) or of the polytope itself (type B). Lower-dimensional input gives
// 0. Facets are enumerated by brute force over vertex subsets; desk scale.
Rat volume(const VPolytope& v);

// volume of conv(points) in R^d (no projection)
Rat euclidean_volume(const std::vector<Vec>& pts, int d);

// Mixed volume of n-1 type A polytopes given by their supports: exact
// interpolation of Vol(y_1 P_1 + ... + y_{n-1} P_{n-1}) on the grid
// {1..n}^{n-1}, normalized so the diagonal gives the ordinary volume.
Rat mixed_volume_oracle(const std::vector<SupportVector>& polys);

} // namespace shards
