#pragma once

#include "shards/arcs.hpp"
#include "shards/rational.hpp"

#include <map>
#include <memory>
#include <vector>

namespace shards {

enum class Kind { A, B };

// Signed subset of [n]: sorted list of nonzero entries in [-n,n], at most one
// of {i,-i}. Type A rays use plain subsets (positive entries).
using SignedSet = std::vector<int>;

// A complete simplicial reference fan: the braid fan (type A, chambers indexed
// by permutations) or the type B Coxeter fan (chambers indexed by signed
// permutations). Chambers carry the ray chain sigma([k,n]) used by the
// triangular solve; coarsenings are handled purely as chamber partitions.
class FanFrame {
public:
    static const FanFrame& get(Kind kind, int n);  // interned

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    int num_chambers() const { return int(chambers_.size()); }
    int num_rays() const { return int(rays_.size()); }

    const Perm& chamber(int c) const { return chambers_[c]; }           // word; B: signed
    int chamber_index(const Perm& word) const;
    const SignedSet& ray(int r) const { return rays_[r]; }
    int ray_index(const SignedSet& s) const;
    int ray_index_mask(Mask m) const;  // type A only
    // ray chain of chamber c: index of the ray sigma([k,n]) for k = 1..n
    const std::vector<int>& chamber_rays(int c) const { return chain_[c]; }

    // direction vector of a ray (type A: 1_R; type B: 1_R with e_{-i} = -e_i)
    Vec ray_vector(int r) const;
    // an interior direction of chamber c (the inverse word as a vector)
    Vec chamber_direction(int c) const;

    // walls: pairs of adjacent chambers, c1 < c2, deterministic order
    const std::vector<std::pair<int, int>>& walls() const { return walls_; }

private:
    FanFrame(Kind kind, int n);
    Kind kind_;
    int n_;
    std::vector<Perm> chambers_;
    std::map<Perm, int> chamber_index_;
    std::vector<SignedSet> rays_;
    std::map<SignedSet, int> ray_index_;
    std::vector<std::vector<int>> chain_;
    std::vector<std::pair<int, int>> walls_;
};

// all signed permutations of [n] in lexicographic word order
std::vector<Perm> signed_permutations(int n);

} // namespace shards
