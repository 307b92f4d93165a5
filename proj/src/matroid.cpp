#include "shards/matroid.hpp"

#include "shards/error.hpp"
#include "shards/shard_polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shards {

ShardGraph shard_graph(const Arc& arc) {
    validate_arc(arc);
    ShardGraph g;
    auto below = mask_elems(arc.below);
    g.num_vertices = int(below.size()) + 2;
    // chain vertices 0..|B|+1; b_0 = a-1 sits before vertex 0's edge
    std::vector<int> ends = below;
    ends.push_back(arc.b);
    for (int j = 0; j < int(ends.size()); ++j) g.edges.push_back({j, j + 1, ends[j]});
    std::vector<int> starts{arc.a};
    for (int v : mask_elems(arc.above)) starts.push_back(v);
    std::sort(starts.begin(), starts.end());
    for (int s : starts) {
        int k = 0;
        while (k < int(below.size()) && below[k] < s) ++k;
        g.edges.push_back({k, int(below.size()) + 1, s});
    }
    for (int v = 1; v <= arc.n; ++v)
        if (v < arc.a || v > arc.b)
            g.edges.push_back({int(below.size()) + 1, int(below.size()) + 1, v});
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& x, const auto& y) { return x.label < y.label; });
    return g;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int u) {
        while (p[u] != u) u = p[u] = p[p[u]];
        return u;
    }
    bool unite(int u, int v) {
        u = find(u); v = find(v);
        if (u == v) return false;
        p[std::max(u, v)] = std::min(u, v);
        return true;
    }
};

std::vector<ShardGraph::Edge> loopless(const ShardGraph& g) {
    std::vector<ShardGraph::Edge> e;
    for (const auto& ed : g.edges)
        if (ed.u != ed.v) e.push_back(ed);
    return e;
}

std::vector<int> vertices_used(const std::vector<ShardGraph::Edge>& edges) {
    std::set<int> vs;
    for (const auto& e : edges) { vs.insert(e.u); vs.insert(e.v); }
    return std::vector<int>(vs.begin(), vs.end());
}

} // namespace

std::vector<std::vector<int>> spanning_trees(const ShardGraph& g) {
    auto edges = loopless(g);
    auto vs = vertices_used(edges);
    int nv = int(vs.size());
    std::map<int, int> vid;
    for (int i = 0; i < nv; ++i) vid[vs[i]] = i;
    {
        Dsu d(nv);
        int comps = nv;
        for (const auto& e : edges)
            if (d.unite(vid[e.u], vid[e.v])) --comps;
        require(comps <= 1, "Disconnected", "loopless part is disconnected");
    }
    std::vector<std::vector<int>> out;
    int m = int(edges.size());
    std::vector<int> comb(nv - 1);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == nv - 1) {
            Dsu d(nv);
            for (int i : comb)
                if (!d.unite(vid[edges[i].u], vid[edges[i].v])) return;
            std::vector<int> labels;
            for (int i : comb) labels.push_back(edges[i].label);
            std::sort(labels.begin(), labels.end());
            out.push_back(std::move(labels));
            return;
        }
        for (int i = start; i <= m - (nv - 1 - k); ++i) {
            comb[k] = i;
            rec(i + 1, k + 1);
        }
    };
    if (nv >= 2) rec(0, 0);
    else out.push_back({});
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_prop72(const Arc& arc) {
    std::set<Vec> tree_pts;
    for (const auto& t : spanning_trees(shard_graph(arc))) {
        Vec p(arc.n, 0);
        for (int l : t) p[l - 1] = 1;
        tree_pts.insert(std::move(p));
    }
    std::set<Vec> sp_pts;
    for (const Matching& m : enumerate_matchings(arc)) {
        Vec p = matching_vector(m, arc.n);
        for (int e : mask_elems(arc.below)) p[e - 1] += 1;
        p[arc.b - 1] += 1;
        sp_pts.insert(std::move(p));
    }
    return tree_pts == sp_pts;
}

bool is_series_parallel(const ShardGraph& g) {
    auto edges = loopless(g);
    if (edges.empty()) return false;
    // reduce: merge parallel edges, suppress degree-2 vertices
    bool changed = true;
    while (changed && edges.size() > 1) {
        changed = false;
        std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
            return std::minmax(x.u, x.v) < std::minmax(y.u, y.v);
        });
        for (size_t i = 0; i + 1 < edges.size(); ++i)
            if (std::minmax(edges[i].u, edges[i].v) == std::minmax(edges[i + 1].u, edges[i + 1].v)) {
                edges.erase(edges.begin() + i + 1);
                changed = true;
                break;
            }
        if (changed) continue;
        std::map<int, std::vector<size_t>> inc;
        for (size_t i = 0; i < edges.size(); ++i) {
            inc[edges[i].u].push_back(i);
            inc[edges[i].v].push_back(i);
        }
        for (const auto& [v, is] : inc)
            if (is.size() == 2) {
                auto e1 = edges[is[0]], e2 = edges[is[1]];
                int a = e1.u == v ? e1.v : e1.u;
                int b = e2.u == v ? e2.v : e2.u;
                if (a == b && a == v) continue;  // degenerate
                std::vector<ShardGraph::Edge> next;
                for (size_t i = 0; i < edges.size(); ++i)
                    if (i != is[0] && i != is[1]) next.push_back(edges[i]);
                next.push_back({a, b, e1.label});
                if (a == b) continue;  // would create a loop: not a series step
                edges = std::move(next);
                changed = true;
                break;
            }
    }
    return edges.size() == 1;
}

bool is_2connected(const ShardGraph& g) {
    auto edges = loopless(g);
    auto vs = vertices_used(edges);
    int nv = int(vs.size());
    if (nv < 2) return false;
    std::map<int, int> vid;
    for (int i = 0; i < nv; ++i) vid[vs[i]] = i;
    auto connected_without = [&](int skip) {
        Dsu d(nv);
        int comps = nv - (skip >= 0 ? 1 : 0);
        for (const auto& e : edges) {
            int u = vid[e.u], v = vid[e.v];
            if (u == skip || v == skip) continue;
            if (d.unite(u, v)) --comps;
        }
        return comps <= 1;
    };
    if (!connected_without(-1)) return false;
    if (nv == 2) return true;  // no cut vertex is possible
    for (int v = 0; v < nv; ++v)
        if (!connected_without(v)) return false;
    return true;
}

MatroidView cycle_matroid(const ShardGraph& g) {
    MatroidView m;
    int n = 0;
    for (const auto& e : g.edges) n = std::max(n, e.label);
    m.n = n;
    m.ground = full_mask(n);
    for (const auto& t : spanning_trees(g)) m.bases.push_back(mask_of(t));
    std::sort(m.bases.begin(), m.bases.end());
    return m;
}

int matroid_rank(const MatroidView& m, Mask x) {
    int best = 0;
    for (Mask b : m.bases) best = std::max(best, popcount(b & x));
    return best;
}

Mask matroid_loops(const MatroidView& m) {
    Mask loops = 0;
    for (int e = 1; e <= m.n; ++e)
        if (matroid_rank(m, bit(e)) == 0) loops |= bit(e);
    return loops;
}

bool matroid_connected(const MatroidView& m) {
    Mask ground = m.ground;
    int r = matroid_rank(m, ground);
    if (popcount(ground) <= 1) return ground != 0 && r == 1;
    for (Mask x = (0 - ground) & ground; x != 0; x = ((x - ground) & ground))
        if (x != ground && matroid_rank(m, x) + matroid_rank(m, Mask(ground & ~x)) <= r)
            return false;
    return true;
}

MatroidView contraction(const MatroidView& m, Mask k) {
    MatroidView out;
    out.n = m.n;
    out.ground = m.ground & ~k;
    int rk = matroid_rank(m, k);
    std::set<Mask> bases;
    for (Mask b : m.bases)
        if (popcount(b & k) == rk) bases.insert(Mask(b & ~k));
    out.bases.assign(bases.begin(), bases.end());
    return out;
}

long beta_invariant(const MatroidView& m) {
    Mask ground = m.ground;
    long sum = 0;
    for (Mask x = 0;; x = ((x - ground) & ground)) {
        sum += (popcount(x) % 2 ? -1 : 1) * matroid_rank(m, x);
        if (x == ground) break;
    }
    int r = matroid_rank(m, ground);
    return (r % 2 ? -1 : 1) * sum;
}

long signed_beta(const MatroidView& m) {
    int r = matroid_rank(m, m.ground);
    return ((r + 1) % 2 ? 1 : -1) * beta_invariant(m);
}

CoeffVector abd_decomposition(const MatroidView& m) {
    // y_{E \ K} = signed beta of M/K over all contractions
    CoeffVector y{BasisKind::y, m.n, {}};
    Mask ground = m.ground;
    for (Mask k = 0;; k = ((k - ground) & ground)) {
        Mask rest = ground & ~k;
        if (popcount(rest) >= 2) y.set(rest, signed_beta(contraction(m, k)));
        if (k == ground) break;
    }
    return y;
}

} // namespace shards
