#include "shards/arcs.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace shards {

std::vector<int> mask_elems(Mask m) {
    std::vector<int> out;
    for (Mask t = m; t; t &= t - 1) out.push_back(__builtin_ctz(t) + 1);
    return out;
}

Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= bit(e);
    return m;
}

std::vector<Mask> subsets_ge2(int n) {
    std::vector<Mask> out;
    for (Mask m = 1; m <= full_mask(n); ++m)
        if (popcount(m) >= 2) out.push_back(m);
    return out;
}

std::vector<Mask> subsets_ge2_canonical(int n) {
    auto out = subsets_ge2(n);
    std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
        int sx = max_elem(x) - min_elem(x), sy = max_elem(y) - min_elem(y);
        if (sx != sy) return sx < sy;
        if (popcount(x) != popcount(y)) return popcount(x) > popcount(y);
        return mask_elems(x) < mask_elems(y);
    });
    return out;
}

void validate_arc(const Arc& arc, bool allow_pseudo) {
    require(1 <= arc.a && arc.a < arc.b && arc.b <= arc.n, "InvalidArc", "endpoints out of range");
    require((arc.above & arc.below) == 0, "InvalidArc", "above/below not disjoint");
    Mask mid = interval_open(arc.a, arc.b);
    require((arc.above | arc.below | mid) == mid, "InvalidArc", "decorations outside ]a,b[");
    if (!allow_pseudo)
        require((arc.above | arc.below) == mid, "InvalidArc", "not a full arc");
}

std::vector<Arc> enumerate_arcs(int n) {
    std::vector<Arc> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Mask mid = interval_open(a, b);
            // iterate subsets of mid as the above-set, increasing as masks
            Mask A = 0;
            while (true) {
                out.push_back(Arc{a, b, A, Mask(mid & ~A), n});
                if (A == mid) break;
                A = (A - mid) & mid;
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool arcs_cross(const Arc& x, const Arc& y) {
    Mask ex = bit(x.a) | bit(x.b), ey = bit(y.a) | bit(y.b);
    Mask s1 = (x.above & y.below) | (ex & y.below) | (x.above & ey);
    Mask s2 = (x.below & y.above) | (ex & y.above) | (x.below & ey);
    return s1 != 0 && s2 != 0;
}

bool forces(const Arc& x, const Arc& y) {
    return y.a <= x.a && x.b <= y.b && (x.above & ~y.above) == 0 && (x.below & ~y.below) == 0;
}

Arc phi_arc(const Arc& arc) { return Arc{arc.a, arc.b, arc.below, arc.above, arc.n}; }

Arc psi_arc(const Arc& arc) {
    int n = arc.n;
    auto refl = [n](Mask m) {
        Mask r = 0;
        for (int i : mask_elems(m)) r |= bit(n + 1 - i);
        return r;
    };
    return Arc{n + 1 - arc.b, n + 1 - arc.a, refl(arc.above), refl(arc.below), n};
}

int crossing_count(const Arc& arc) {
    auto elems = mask_elems(arc.above | arc.below);
    int c = 0;
    for (size_t i = 0; i + 1 < elems.size(); ++i)
        if (has(arc.above, elems[i]) != has(arc.above, elems[i + 1])) ++c;
    return c;
}

// ---- permutations ----

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i) + 1;
    return q;
}

long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

long perm_rank(const Perm& p) {
    int n = int(p.size());
    long rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

Perm perm_unrank(int n, long rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    Perm p;
    for (int i = n - 1; i >= 0; --i) {
        long f = factorial(i);
        long k = rank / f;
        rank %= f;
        p.push_back(avail[k]);
        avail.erase(avail.begin() + k);
    }
    return p;
}

static Arc descent_arc(const Perm& p, int i, int n) {
    // descent p[i-1] > p[i] (1-based position i)
    int lo = p[i], hi = p[i - 1];
    Mask A = 0, B = 0;
    for (int j = 0; j < i - 1; ++j)
        if (lo < p[j] && p[j] < hi) A |= bit(p[j]);
    for (int j = i + 1; j < n; ++j)
        if (lo < p[j] && p[j] < hi) B |= bit(p[j]);
    return Arc{lo, hi, A, B, n};
}

NoncrossingDiagram perm_to_diagram(const Perm& p, Color color) {
    int n = int(p.size());
    NoncrossingDiagram d;
    d.color = color;
    d.n = n;
    if (color == Color::down) {
        for (int i = 1; i < n; ++i)
            if (p[i - 1] > p[i]) d.arcs.push_back(descent_arc(p, i, n));
    } else {
        // ascent arc: (p_i, p_{i+1}, values before, values after) in the window
        for (int i = 1; i < n; ++i)
            if (p[i - 1] < p[i]) {
                int lo = p[i - 1], hi = p[i];
                Mask A = 0, B = 0;
                for (int j = 0; j < i - 1; ++j)
                    if (lo < p[j] && p[j] < hi) A |= bit(p[j]);
                for (int j = i + 1; j < n; ++j)
                    if (lo < p[j] && p[j] < hi) B |= bit(p[j]);
                d.arcs.push_back(Arc{lo, hi, A, B, n});
            }
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

Perm diagram_to_perm(const NoncrossingDiagram& d) {
    int n = d.n;
    // validity: pairwise noncrossing, distinct left and right endpoints
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        validate_arc(d.arcs[i]);
        require(d.arcs[i].n == n, "InvalidDiagram", "mixed ambient sizes");
        for (size_t j = i + 1; j < d.arcs.size(); ++j) {
            require(!arcs_cross(d.arcs[i], d.arcs[j]), "InvalidDiagram", "crossing arcs");
            require(d.arcs[i].a != d.arcs[j].a && d.arcs[i].b != d.arcs[j].b,
                    "InvalidDiagram", "repeated endpoint");
        }
    }
    // connected components of points joined by arc endpoints
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int u) {
        while (parent[u] != u) u = parent[u] = parent[parent[u]];
        return u;
    };
    for (const Arc& arc : d.arcs) parent[find(arc.a)] = find(arc.b);
    std::map<int, std::vector<int>> comp;
    for (int v = 1; v <= n; ++v) comp[find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& [root, vals] : comp) comps.push_back(vals);
    std::sort(comps.begin(), comps.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::map<int, int> comp_of;
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = int(c);
    // priority: X < Y if an arc has A-point in X with endpoints in Y, or
    // endpoints in X with B-point in Y
    int k = int(comps.size());
    std::vector<std::set<int>> succ(k);
    std::vector<int> indeg(k, 0);
    auto add_edge = [&](int x, int y) {
        if (x != y && succ[x].insert(y).second) ++indeg[y];
    };
    for (const Arc& arc : d.arcs) {
        int y = comp_of[arc.a];
        for (int v : mask_elems(arc.above)) add_edge(comp_of[v], y);
        for (int v : mask_elems(arc.below)) add_edge(y, comp_of[v]);
    }
    // linear extension; ties to the leftmost (down) / rightmost (up) component
    Perm word;
    std::vector<bool> used(k, false);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int c = 0; c < k; ++c) {
            if (used[c] || indeg[c] != 0) continue;
            if (pick == -1) { pick = c; continue; }
            bool better = d.color == Color::down ? comps[c].front() < comps[pick].front()
                                                 : comps[c].front() > comps[pick].front();
            if (better) pick = c;
        }
        require(pick >= 0, "InvalidDiagram", "cyclic priority poset");
        used[pick] = true;
        for (int y : succ[pick]) --indeg[y];
        auto vals = comps[pick];
        if (d.color == Color::down) std::sort(vals.rbegin(), vals.rend());
        else std::sort(vals.begin(), vals.end());
        word.insert(word.end(), vals.begin(), vals.end());
    }
    return word;
}

Arc cover_arc(const Perm& tau, int i) {
    int n = int(tau.size());
    require(1 <= i && i < n && tau[i - 1] > tau[i], "NotADescent", "no descent at position");
    return descent_arc(tau, i, n);
}

Perm arc_to_join_irreducible(const Arc& arc) {
    Perm p;
    for (int v = 1; v < arc.a; ++v) p.push_back(v);
    for (int v : mask_elems(arc.above)) p.push_back(v);
    p.push_back(arc.b);
    p.push_back(arc.a);
    for (int v : mask_elems(arc.below)) p.push_back(v);
    for (int v = arc.b + 1; v <= arc.n; ++v) p.push_back(v);
    return p;
}

// ---- ideals ----

bool ArcIdeal::contains(const Arc& arc) const {
    return std::binary_search(arcs.begin(), arcs.end(), arc);
}

bool is_upper_ideal(const ArcIdeal& ideal) {
    auto all = enumerate_arcs(ideal.n);
    for (const Arc& x : ideal.arcs)
        for (const Arc& y : all)
            if (forces(y, x) && !ideal.contains(y)) return false;
    return true;
}

ArcIdeal make_ideal(int n, std::vector<Arc> arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    ArcIdeal ideal{n, std::move(arcs)};
    for (const Arc& arc : ideal.arcs) {
        validate_arc(arc);
        require(arc.n == n, "NotAnIdeal", "mixed ambient sizes");
    }
    require(is_upper_ideal(ideal), "NotAnIdeal", "not closed under forcing");
    return ideal;
}

ArcIdeal close_upward(const std::vector<Arc>& seed, int n) {
    std::vector<Arc> out;
    for (const Arc& y : enumerate_arcs(n))
        for (const Arc& x : seed)
            if (forces(y, x)) {
                out.push_back(y);
                break;
            }
    std::sort(out.begin(), out.end());
    return ArcIdeal{n, std::move(out)};
}

ArcIdeal cambrian_ideal(const Arc& arc) { return close_upward({arc}, arc.n); }

ArcIdeal sylvester_ideal(int n) {
    std::vector<Arc> arcs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            arcs.push_back(Arc{a, b, interval_open(a, b), 0, n});
    std::sort(arcs.begin(), arcs.end());
    return ArcIdeal{n, std::move(arcs)};
}

ArcIdeal full_ideal(int n) { return ArcIdeal{n, enumerate_arcs(n)}; }

std::vector<Arc> minimal_arcs(const ArcIdeal& ideal) {
    std::vector<Arc> out;
    for (const Arc& x : ideal.arcs) {
        bool minimal = true;
        for (const Arc& y : ideal.arcs)
            if (y != x && forces(x, y)) { minimal = false; break; }
        if (minimal) out.push_back(x);
    }
    return out;
}

void for_each_arc_ideal(int n, const std::function<void(const ArcIdeal&)>& fn) {
    auto arcs = enumerate_arcs(n);
    int m = int(arcs.size());
    // process long arcs (poset-minimal) first; a member forces the inclusion
    // of every arc forcing it, which appears later in this order
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return arcs[i].b - arcs[i].a > arcs[j].b - arcs[j].a;
    });
    std::vector<std::vector<int>> below(m);  // below[i] = members forced by arcs[i]
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && forces(arcs[i], arcs[j])) below[i].push_back(j);
    std::vector<bool> in(m, false);
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            std::vector<Arc> sel;
            for (int i : chosen) sel.push_back(arcs[i]);
            std::sort(sel.begin(), sel.end());
            fn(ArcIdeal{n, std::move(sel)});
            return;
        }
        int e = order[k];
        bool forced = false;
        for (int j : below[e])
            if (in[j]) { forced = true; break; }
        if (!forced) rec(k + 1);
        in[e] = true;
        chosen.push_back(e);
        rec(k + 1);
        chosen.pop_back();
        in[e] = false;
    };
    rec(0);
}

std::vector<ArcIdeal> enumerate_arc_ideals(int n) {
    require(n <= 5, "SizeCap", "arc ideal enumeration capped at n = 5");
    std::vector<ArcIdeal> out;
    for_each_arc_ideal(n, [&](const ArcIdeal& ideal) { out.push_back(ideal); });
    return out;
}

// ---- congruences ----

void for_each_weak_cover(int n, const std::function<void(long, long, const Arc&)>& fn) {
    long nf = factorial(n);
    for (long r = 0; r < nf; ++r) {
        Perm p = perm_unrank(n, r);
        for (int i = 1; i < n; ++i) {
            if (p[i - 1] <= p[i]) continue;
            Arc arc = descent_arc(p, i, n);
            Perm q = p;
            std::swap(q[i - 1], q[i]);
            fn(perm_rank(q), r, arc);
        }
    }
}

Vec weak_order_direction(int n) {
    Vec g(n);
    for (int i = 1; i <= n; ++i) g[i - 1] = 2 * i - n - 1;
    return g;
}

namespace {
struct UnionFind {
    std::vector<long> parent;
    explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0L); }
    long find(long u) {
        while (parent[u] != u) u = parent[u] = parent[parent[u]];
        return u;
    }
    void unite(long u, long v) {
        u = find(u); v = find(v);
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
    }
};
} // namespace

CongruencePartition congruence_classes(const ArcIdeal& ideal) {
    int n = ideal.n;
    long nf = factorial(n);
    UnionFind uf(nf);
    for_each_weak_cover(n, [&](long lo, long hi, const Arc& arc) {
        if (!ideal.contains(arc)) uf.unite(lo, hi);
    });
    CongruencePartition part;
    part.n = n;
    part.class_of.assign(nf, -1);
    std::map<long, int> id_of_root;
    for (long r = 0; r < nf; ++r) {
        long root = uf.find(r);
        auto [it, fresh] = id_of_root.try_emplace(root, part.num_classes);
        if (fresh) ++part.num_classes;
        part.class_of[r] = it->second;
    }
    // class minimum: the unique element whose descent diagram stays in the ideal
    part.class_min.assign(part.num_classes, -1);
    for (long r = 0; r < nf; ++r) {
        Perm p = perm_unrank(n, r);
        bool minimal = true;
        for (int i = 1; i < n && minimal; ++i)
            if (p[i - 1] > p[i] && !ideal.contains(descent_arc(p, i, n))) minimal = false;
        if (minimal) {
            int c = part.class_of[r];
            require(part.class_min[c] == -1, "Internal", "two minima in a class");
            part.class_min[c] = r;
        }
    }
    for (int c = 0; c < part.num_classes; ++c)
        require(part.class_min[c] >= 0, "Internal", "class without minimum");
    return part;
}

Perm pi_down(const Perm& sigma, const ArcIdeal& ideal) {
    auto part = congruence_classes(ideal);
    return perm_unrank(ideal.n, part.class_min[part.class_of[perm_rank(sigma)]]);
}

RegularityReport regularity_check(const ArcIdeal& ideal) {
    RegularityReport rep;
    auto part = congruence_classes(ideal);
    std::set<std::pair<int, int>> edges;
    for_each_weak_cover(ideal.n, [&](long lo, long hi, const Arc& arc) {
        if (!ideal.contains(arc)) return;
        int cl = part.class_of[lo], ch = part.class_of[hi];
        if (cl != ch) edges.insert({std::min(cl, ch), std::max(cl, ch)});
    });
    std::vector<int> deg(part.num_classes, 0);
    for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
    rep.hasse_regular =
        std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
    // HM21: every forcing-maximal arc outside the ideal is an up or down arc
    rep.hm21 = true;
    auto all = enumerate_arcs(ideal.n);
    std::vector<Arc> comp;
    for (const Arc& arc : all)
        if (!ideal.contains(arc)) comp.push_back(arc);
    for (const Arc& x : comp) {
        bool maximal = true;
        for (const Arc& y : comp)
            if (y != x && forces(y, x)) { maximal = false; break; }
        if (maximal && x.above != 0 && x.below != 0) rep.hm21 = false;
    }
    return rep;
}

} // namespace shards
