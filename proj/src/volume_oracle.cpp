#include "shards/volume_oracle.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace shards {

namespace {

// primitive integer normal spanning the nullspace of the (d-1) x d matrix of
// differences, or empty if the points are affinely dependent
Vec hyperplane_normal(const std::vector<const Vec*>& pts, int d) {
    std::vector<Vec> m;
    for (int i = 1; i < d; ++i) {
        Vec r(d);
        for (int j = 0; j < d; ++j) r[j] = (*pts[i])[j] - (*pts[0])[j];
        m.push_back(std::move(r));
    }
    // eliminate
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < d && r < int(m.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(m.size()); ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (int j = 0; j < d; ++j) m[r][j] /= lead;
        for (int i = 0; i < int(m.size()); ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat fac = m[i][c];
            for (int j = 0; j < d; ++j) m[i][j] -= fac * m[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    if (r != d - 1) return {};
    int free = 0;
    while (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) ++free;
    Vec nv(d, 0);
    nv[free] = 1;
    for (int i = 0; i < r; ++i) nv[pivcol[i]] = -m[i][free];
    // clear denominators, canonical sign
    Int lcm = 1;
    for (const Rat& x : nv) {
        Int den = denominator(x);
        lcm = lcm / gcd(lcm, den) * den;
    }
    for (Rat& x : nv) x *= lcm;
    for (const Rat& x : nv)
        if (x != 0) {
            if (x < 0)
                for (Rat& y : nv) y = -y;
            break;
        }
    return nv;
}

Rat pyramid_volume(const std::vector<Vec>& pts, int d);

// facets as (normal, point-index set), every point on the <= side
struct Facet {
    Vec normal;
    Rat rhs;
    std::vector<int> idx;
};

std::vector<Facet> brute_facets(const std::vector<Vec>& pts, int d) {
    std::vector<Facet> out;
    std::set<std::vector<int>> seen;
    int m = int(pts.size());
    std::vector<int> comb(d);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == d) {
            std::vector<const Vec*> sel;
            for (int i : comb) sel.push_back(&pts[i]);
            Vec nv = hyperplane_normal(sel, d);
            if (nv.empty()) return;
            Rat rhs = dot(nv, pts[comb[0]]);
            bool le = true, ge = true;
            for (const Vec& p : pts) {
                Rat v = dot(nv, p);
                if (v > rhs) le = false;
                if (v < rhs) ge = false;
                if (!le && !ge) return;
            }
            if (!le) {
                for (Rat& x : nv) x = -x;
                rhs = -rhs;
            }
            std::vector<int> on;
            for (int i = 0; i < m; ++i)
                if (dot(nv, pts[i]) == rhs) on.push_back(i);
            if (seen.insert(on).second) out.push_back(Facet{std::move(nv), rhs, std::move(on)});
            return;
        }
        for (int i = start; i <= m - (d - k); ++i) {
            comb[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return out;
}

Rat pyramid_volume(const std::vector<Vec>& pts, int d) {
    if (d == 0) return 1;
    if (int(pts.size()) <= d || affine_dim(pts) < d) return 0;
    if (d == 1) {
        Rat mn = pts[0][0], mx = pts[0][0];
        for (const Vec& p : pts) {
            mn = std::min(mn, p[0]);
            mx = std::max(mx, p[0]);
        }
        return mx - mn;
    }
    Rat total = 0;
    const Vec& apex = pts[0];
    for (const Facet& f : brute_facets(pts, d)) {
        if (f.idx.front() == 0) continue;
        int k = 0;
        while (f.normal[k] == 0) ++k;
        std::set<Vec> sub;
        for (int i : f.idx) {
            Vec q;
            for (int j = 0; j < d; ++j)
                if (j != k) q.push_back(pts[i][j]);
            sub.insert(std::move(q));
        }
        Rat h = abs(dot(f.normal, apex) - f.rhs) / abs(f.normal[k]);
        total += h * pyramid_volume(std::vector<Vec>(sub.begin(), sub.end()), d - 1);
    }
    return total / d;
}

} // namespace

Rat euclidean_volume(const std::vector<Vec>& pts, int d) {
    std::set<Vec> dedup(pts.begin(), pts.end());
    return pyramid_volume(std::vector<Vec>(dedup.begin(), dedup.end()), d);
}

Rat volume(const VPolytope& v) {
    if (v.kind == Kind::B) return euclidean_volume(v.verts, v.n);
    std::vector<Vec> proj;
    for (const Vec& p : v.verts) proj.push_back(Vec(p.begin(), p.end() - 1));
    return euclidean_volume(proj, v.n - 1);
}

// ---- face tree for weighted Minkowski sums ----
// The common-refinement face structure of y_1 P_1 + ... + y_m P_m is constant
// over positive weights, so the recursion skeleton is built once (at weights
// one) and only the rational arithmetic reruns per grid point.

namespace {

struct TreeNode {
    std::vector<int> pts;     // block indices
    std::vector<int> active;  // active coordinates
    struct Child {
        Vec normal;  // over the parent's active coordinates
        int drop;    // position within the parent's active coordinates
        int base;    // block index on the facet
        std::unique_ptr<TreeNode> node;
    };
    std::vector<Child> children;
};

std::unique_ptr<TreeNode> build_tree(const std::vector<Vec>& P, std::vector<int> pts,
                                     std::vector<int> active, const std::vector<Vec>& cands) {
    auto node = std::make_unique<TreeNode>();
    node->pts = std::move(pts);
    node->active = std::move(active);
    int d = int(node->active.size());
    if (d <= 1) return node;
    auto adot = [&](const Vec& g, int b) {
        Rat r = 0;
        for (int j = 0; j < d; ++j) r += g[j] * P[b][node->active[j]];
        return r;
    };
    struct Fct {
        Vec normal;
        std::vector<int> idx;
    };
    std::vector<Fct> facets;
    std::set<std::vector<int>> seen;
    for (const Vec& g : cands) {
        Rat best = adot(g, node->pts[0]);
        for (int b : node->pts) best = std::max(best, adot(g, b));
        std::vector<int> on;
        for (int b : node->pts)
            if (adot(g, b) == best) on.push_back(b);
        if (int(on.size()) <= d - 1) continue;
        std::vector<Vec> face_pts;
        for (int b : on) {
            Vec q(d);
            for (int j = 0; j < d; ++j) q[j] = P[b][node->active[j]];
            face_pts.push_back(std::move(q));
        }
        if (affine_dim(face_pts) != d - 1) continue;
        if (seen.insert(on).second) facets.push_back(Fct{g, std::move(on)});
    }
    for (const Fct& f : facets) {
        if (std::binary_search(f.idx.begin(), f.idx.end(), node->pts.front())) continue;
        int k = 0;
        while (f.normal[k] == 0) ++k;
        std::vector<int> sub_active;
        for (int j = 0; j < d; ++j)
            if (j != k) sub_active.push_back(node->active[j]);
        // ridge normals: the other facet normals restricted to the facet chart
        std::vector<Vec> sub_cands;
        std::set<Vec> cseen;
        for (const Fct& g : facets) {
            Vec h;
            Rat fac = g.normal[k] / f.normal[k];
            for (int j = 0; j < d; ++j)
                if (j != k) h.push_back(g.normal[j] - fac * f.normal[j]);
            bool zero = std::all_of(h.begin(), h.end(), [](const Rat& x) { return x == 0; });
            if (!zero && cseen.insert(h).second) sub_cands.push_back(std::move(h));
        }
        TreeNode::Child child;
        child.normal = f.normal;
        child.drop = k;
        child.base = f.idx.front();
        child.node = build_tree(P, f.idx, std::move(sub_active), sub_cands);
        node->children.push_back(std::move(child));
    }
    return node;
}

Rat eval_tree(const TreeNode& node, const std::vector<Vec>& P) {
    int d = int(node.active.size());
    if (d == 1) {
        Rat mn = P[node.pts[0]][node.active[0]], mx = mn;
        for (int b : node.pts) {
            const Rat& x = P[b][node.active[0]];
            mn = std::min(mn, x);
            mx = std::max(mx, x);
        }
        return mx - mn;
    }
    Rat total = 0;
    int apex = node.pts.front();
    for (const auto& ch : node.children) {
        Rat h = 0;
        for (int j = 0; j < d; ++j)
            h += ch.normal[j] * (P[ch.base][node.active[j]] - P[apex][node.active[j]]);
        total += abs(h) / abs(ch.normal[ch.drop]) * eval_tree(*ch.node, P);
    }
    return total / d;
}

std::vector<std::vector<Rat>> vandermonde_inverse(int n) {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        Rat x = i + 1, p = 1;
        for (int j = 0; j < n; ++j) {
            a[i][j] = p;
            p *= x;
        }
        a[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[c], a[piv]);
        Rat lead = a[c][c];
        for (Rat& x : a[c]) x /= lead;
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat fac = a[i][c];
            for (int j = 0; j < 2 * n; ++j) a[i][j] -= fac * a[c][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

} // namespace

Rat mixed_volume_oracle(const std::vector<SupportVector>& polys) {
    require(!polys.empty(), "InvalidInput", "no polytopes given");
    const FanFrame& f = *polys[0].frame;
    require(f.kind() == Kind::A, "FrameMismatch", "mixed volumes are computed in type A");
    int n = f.n();
    int m = int(polys.size());
    require(m == n - 1, "InvalidInput", "expected n-1 polytopes");
    for (const auto& s : polys)
        require(s.frame == &f, "FrameMismatch", "summands on different frames");
    int d = n - 1;
    // block = common-refinement chamber class; per block the projected vertex
    // of every summand
    std::map<std::vector<Rat>, int> block_of_key;
    std::vector<std::vector<Vec>> block_summands;
    for (int c = 0; c < f.num_chambers(); ++c) {
        std::vector<Rat> key;
        std::vector<Vec> vs;
        for (const auto& s : polys) {
            Vec v = chamber_vertex(s, c);
            v.pop_back();  // drop the last coordinate
            key.insert(key.end(), v.begin(), v.end());
            vs.push_back(std::move(v));
        }
        if (block_of_key.emplace(std::move(key), int(block_summands.size())).second)
            block_summands.push_back(std::move(vs));
    }
    int nb = int(block_summands.size());
    auto points_at = [&](const std::vector<Rat>& y) {
        std::vector<Vec> P(nb, Vec(d, 0));
        for (int b = 0; b < nb; ++b)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < d; ++j) P[b][j] += y[i] * block_summands[b][i][j];
        return P;
    };
    std::vector<Vec> P1 = points_at(std::vector<Rat>(m, 1));
    if (affine_dim(P1) < d) return 0;
    // facet candidates: projections of the subset directions, both signs arise
    // from complements
    std::vector<Vec> cands;
    std::set<Vec> cseen;
    for (Mask r = 1; r < full_mask(n); ++r) {
        Vec g(d, 0);
        if (!has(r, n)) {
            for (int i = 1; i <= n - 1; ++i)
                if (has(r, i)) g[i - 1] = 1;
        } else {
            for (int i = 1; i <= n - 1; ++i)
                if (!has(r, i)) g[i - 1] = -1;
        }
        if (cseen.insert(g).second) cands.push_back(std::move(g));
    }
    std::vector<int> all_pts(nb), all_active(d);
    for (int i = 0; i < nb; ++i) all_pts[i] = i;
    for (int j = 0; j < d; ++j) all_active[j] = j;
    auto tree = build_tree(P1, all_pts, all_active, cands);
    // evaluate on the grid {1..n}^{n-1}
    std::map<std::vector<int>, Rat> grid;
    std::vector<int> ys(m, 1);
    while (true) {
        std::vector<Rat> y(ys.begin(), ys.end());
        grid[ys] = eval_tree(*tree, points_at(y));
        int ax = m - 1;
        while (ax >= 0 && ys[ax] == n) { ys[ax] = 1; --ax; }
        if (ax < 0) break;
        ++ys[ax];
    }
    // tensor interpolation, one axis at a time
    auto vinv = vandermonde_inverse(n);
    for (int ax = 0; ax < m; ++ax) {
        std::map<std::vector<int>, Rat> next;
        std::map<std::vector<int>, std::vector<Rat>> lines;
        for (const auto& [key, val] : grid) {
            std::vector<int> rest = key;
            int pos = rest[ax];
            rest.erase(rest.begin() + ax);
            auto& line = lines[rest];
            if (line.empty()) line.resize(n);
            line[pos - 1] = val;
        }
        for (const auto& [rest, line] : lines)
            for (int k = 0; k < n; ++k) {
                Rat c = 0;
                for (int i = 0; i < n; ++i) c += vinv[k][i] * line[i];
                std::vector<int> key = rest;
                key.insert(key.begin() + ax, k);
                next[key] = c;
            }
        grid = std::move(next);
    }
    std::vector<int> target(m, 1);
    Rat coeff = 0;
    auto it = grid.find(target);
    if (it != grid.end()) coeff = it->second;
    return coeff / factorial(d);
}

} // namespace shards
