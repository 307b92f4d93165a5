#pragma once

#include "shards/basis.hpp"

namespace shards {

// Multigraph with labeled edges; labels are distinct and cover [n]. Loops keep
// the ground set aligned with the ambient coordinates.
struct ShardGraph {
    int num_vertices = 0;
    struct Edge {
        int u, v;    // u == v for loops
        int label;   // in [n]
    };
    std::vector<Edge> edges;
};

// vertices 0..|B|+1, one edge per element of [a,b], loops outside [a,b]
ShardGraph shard_graph(const Arc& arc);

// all spanning trees of the loopless part, as sorted label sets
std::vector<std::vector<int>> spanning_trees(const ShardGraph& g);

// spanning-tree indicator vectors equal the caged shard polytope vertices
bool verify_prop72(const Arc& arc);

bool is_series_parallel(const ShardGraph& g);  // loopless part reduces to one edge
bool is_2connected(const ShardGraph& g);       // loopless part

// matroid by explicit basis lists on ground [n]
// matroid by an explicit basis list; ground records the live elements so
// contractions keep beta computations on the right ground set
struct MatroidView {
    int n = 0;
    Mask ground = 0;
    std::vector<Mask> bases;
};

MatroidView cycle_matroid(const ShardGraph& g);
int matroid_rank(const MatroidView& m, Mask x);
bool matroid_connected(const MatroidView& m);
Mask matroid_loops(const MatroidView& m);
MatroidView contraction(const MatroidView& m, Mask k);  // ground [n] minus k
long beta_invariant(const MatroidView& m);
long signed_beta(const MatroidView& m);

// simplex-basis coordinates of the matroid polytope via contractions
CoeffVector abd_decomposition(const MatroidView& m);

} // namespace shards
