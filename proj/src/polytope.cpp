#include "shards/polytope.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shards {

SupportVector zero_support(Kind kind, int n) {
    const FanFrame& f = FanFrame::get(kind, n);
    return SupportVector{&f, std::vector<Rat>(f.num_rays(), Rat(0))};
}

SupportVector support_from_points(const std::vector<Vec>& pts, Kind kind, int n) {
    require(!pts.empty(), "EmptyPolytope", "support of an empty point set");
    const FanFrame& f = FanFrame::get(kind, n);
    SupportVector s{&f, std::vector<Rat>(f.num_rays())};
    for (int r = 0; r < f.num_rays(); ++r) {
        Vec dir = f.ray_vector(r);
        Rat best = dot(dir, pts[0]);
        for (size_t i = 1; i < pts.size(); ++i) best = std::max(best, dot(dir, pts[i]));
        s.s[r] = best;
    }
    return s;
}

SupportVector support_from_vertices(const VPolytope& v) {
    return support_from_points(v.verts, v.kind, v.n);
}

Vec chamber_vertex(const SupportVector& s, int c) {
    const FanFrame& f = *s.frame;
    int n = f.n();
    const Perm& w = f.chamber(c);
    const std::vector<int>& chain = f.chamber_rays(c);
    Vec v(n);
    Rat prev = 0;
    for (int k = n; k >= 1; --k) {
        Rat val = s.s[chain[k - 1]];
        Rat coord = val - prev;
        int e = w[k - 1];
        if (e > 0) v[e - 1] = coord;
        else v[-e - 1] = -coord;
        prev = val;
    }
    return v;
}

static std::vector<Vec> chamber_vertices_dedup(const SupportVector& s) {
    std::set<Vec> seen;
    for (int c = 0; c < s.frame->num_chambers(); ++c) seen.insert(chamber_vertex(s, c));
    return std::vector<Vec>(seen.begin(), seen.end());
}

bool is_tight(const SupportVector& s) {
    auto pts = chamber_vertices_dedup(s);
    return support_from_points(pts, s.frame->kind(), s.frame->n()).s == s.s;
}

VPolytope vertices_from_support(const SupportVector& s) {
    auto pts = chamber_vertices_dedup(s);
    require(support_from_points(pts, s.frame->kind(), s.frame->n()).s == s.s, "NotTight",
            "support values are not attained by the chamber solve");
    return VPolytope{s.frame->kind(), s.frame->n(), std::move(pts)};
}

VPolytope hull_of_points(std::vector<Vec> pts, Kind kind, int n) {
    SupportVector s = support_from_points(pts, kind, n);
    VPolytope v = vertices_from_support(s);
    std::set<Vec> cloud(pts.begin(), pts.end());
    for (const Vec& p : v.verts)
        require(cloud.count(p), "Internal", "hull vertex missing from the point cloud");
    return v;
}

bool is_deformed_permutahedron(const SupportVector& s) {
    const FanFrame& f = *s.frame;
    int n = f.n();
    if (f.kind() == Kind::A) {
        // submodularity on all pairs of subsets, empty set excluded (s(0)=0)
        auto val = [&](Mask m) { return m == 0 ? Rat(0) : s.s[m - 1]; };
        for (Mask r = 1; r <= full_mask(n); ++r)
            for (Mask t = r + 1; t <= full_mask(n); ++t)
                if (val(r) + val(t) < val(r | t) + val(r & t)) return false;
        return true;
    }
    // wall-local check: the vertex of each chamber satisfies the inequality of
    // the neighboring chamber's odd ray out
    for (auto [c, d] : f.walls()) {
        Vec vc = chamber_vertex(s, c);
        for (int r : f.chamber_rays(d))
            if (dot(f.ray_vector(r), vc) > s.s[r]) return false;
        Vec vd = chamber_vertex(s, d);
        for (int r : f.chamber_rays(c))
            if (dot(f.ray_vector(r), vd) > s.s[r]) return false;
    }
    return true;
}

SupportVector minkowski_sum(const SupportVector& a, const SupportVector& b) {
    require(a.frame == b.frame, "FrameMismatch", "sum of supports on different frames");
    SupportVector out = a;
    for (size_t i = 0; i < out.s.size(); ++i) out.s[i] += b.s[i];
    return out;
}

SupportVector scale(const SupportVector& a, const Rat& lambda) {
    require(lambda >= 0, "NegativeScale", "negative dilation factor");
    SupportVector out = a;
    for (Rat& x : out.s) x *= lambda;
    return out;
}

SupportVector translate(const SupportVector& a, const Vec& t) {
    SupportVector out = a;
    for (int r = 0; r < a.frame->num_rays(); ++r) out.s[r] += dot(a.frame->ray_vector(r), t);
    return out;
}

ChamberPartition chamber_partition(const SupportVector& s) {
    require(is_tight(s), "NotTight", "chamber partition of a loose support");
    ChamberPartition part;
    part.frame = s.frame;
    part.block_of.resize(s.frame->num_chambers());
    std::map<Vec, int> id_of;
    for (int c = 0; c < s.frame->num_chambers(); ++c) {
        auto [it, fresh] = id_of.try_emplace(chamber_vertex(s, c), part.num_blocks);
        if (fresh) ++part.num_blocks;
        part.block_of[c] = it->second;
    }
    return part;
}

bool coarsens(const ChamberPartition& p, const ChamberPartition& q) {
    require(p.frame == q.frame, "FrameMismatch", "partitions on different frames");
    // every block of q inside a block of p
    std::map<int, int> image;
    for (size_t c = 0; c < q.block_of.size(); ++c) {
        auto [it, fresh] = image.try_emplace(q.block_of[c], p.block_of[c]);
        if (!fresh && it->second != p.block_of[c]) return false;
    }
    return true;
}

ChamberPartition common_refinement(const ChamberPartition& p, const ChamberPartition& q) {
    require(p.frame == q.frame, "FrameMismatch", "partitions on different frames");
    ChamberPartition out;
    out.frame = p.frame;
    out.block_of.resize(p.block_of.size());
    std::map<std::pair<int, int>, int> id_of;
    for (size_t c = 0; c < p.block_of.size(); ++c) {
        auto [it, fresh] =
            id_of.try_emplace({p.block_of[c], q.block_of[c]}, out.num_blocks);
        if (fresh) ++out.num_blocks;
        out.block_of[c] = it->second;
    }
    return out;
}

bool partition_blocks_connected(const ChamberPartition& p) {
    const FanFrame& f = *p.frame;
    std::vector<int> parent(f.num_chambers());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int u) {
        while (parent[u] != u) u = parent[u] = parent[parent[u]];
        return u;
    };
    for (auto [c, d] : f.walls())
        if (p.block_of[c] == p.block_of[d]) parent[find(c)] = find(d);
    std::map<int, std::set<int>> roots_of_block;
    for (int c = 0; c < f.num_chambers(); ++c) roots_of_block[p.block_of[c]].insert(find(c));
    for (auto& [b, roots] : roots_of_block)
        if (roots.size() > 1) return false;
    return true;
}

int affine_dim(const std::vector<Vec>& pts) {
    if (pts.empty()) return -1;
    std::vector<Vec> rows;
    for (size_t i = 1; i < pts.size(); ++i) {
        Vec r(pts[i].size());
        for (size_t j = 0; j < r.size(); ++j) r[j] = pts[i][j] - pts[0][j];
        rows.push_back(std::move(r));
    }
    return rank_of(std::move(rows));
}

std::vector<int> facet_directions(const SupportVector& s) {
    const FanFrame& f = *s.frame;
    int target = f.kind() == Kind::A ? f.n() - 2 : f.n() - 1;
    VPolytope v = vertices_from_support(s);
    std::vector<int> out;
    for (int r = 0; r < f.num_rays(); ++r) {
        if (f.kind() == Kind::A && f.ray(r).size() == size_t(f.n())) continue;  // improper
        Vec dir = f.ray_vector(r);
        std::vector<Vec> face;
        for (const Vec& p : v.verts)
            if (dot(dir, p) == s.s[r]) face.push_back(p);
        if (affine_dim(face) == target) out.push_back(r);
    }
    return out;
}

std::vector<std::vector<int>> intrinsic_facets(const VPolytope& v) {
    const FanFrame& f = FanFrame::get(v.kind, v.n);
    SupportVector s = support_from_vertices(v);
    int dim = affine_dim(v.verts);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (int r = 0; r < f.num_rays(); ++r) {
        Vec dir = f.ray_vector(r);
        std::vector<int> face;
        std::vector<Vec> pts;
        for (size_t i = 0; i < v.verts.size(); ++i)
            if (dot(dir, v.verts[i]) == s.s[r]) {
                face.push_back(int(i));
                pts.push_back(v.verts[i]);
            }
        if (affine_dim(pts) == dim - 1 && seen.insert(face).second) out.push_back(face);
    }
    return out;
}

Vec caging_vector(const VPolytope& v) {
    Vec t(v.n, 0);
    for (int i = 0; i < v.n; ++i) {
        Rat mn = v.verts[0][i];
        for (const Vec& p : v.verts) mn = std::min(mn, p[i]);
        t[i] = -mn;
    }
    return t;
}

VPolytope caged_translate(const VPolytope& v) {
    Vec t = caging_vector(v);
    VPolytope out = v;
    for (Vec& p : out.verts)
        for (int i = 0; i < v.n; ++i) p[i] += t[i];
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

int rank_of(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    size_t m = rows[0].size();
    int r = 0;
    for (size_t c = 0; c < m && r < int(rows.size()); ++c) {
        int piv = -1;
        for (size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) { piv = int(i); break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (int(i) == r || rows[i][c] == 0) continue;
            Rat fac = rows[i][c] / rows[r][c];
            for (size_t j = c; j < m; ++j) rows[i][j] -= fac * rows[r][j];
        }
        ++r;
    }
    return r;
}

int summand_space_dim(const SupportVector& s) {
    const FanFrame& f = *s.frame;
    int n = f.n();
    int nrays = f.num_rays();
    ChamberPartition part = chamber_partition(s);
    // rows of the wall system: for every same-block wall, the two triangular
    // solves must agree coordinate by coordinate
    std::vector<Vec> pivots;  // reduced rows
    int rank = 0;
    auto add_row = [&](Vec row) {
        for (const Vec& p : pivots) {
            int lead = -1;
            for (int j = 0; j < nrays; ++j)
                if (p[j] != 0) { lead = j; break; }
            if (row[lead] != 0) {
                Rat fac = row[lead] / p[lead];
                for (int j = 0; j < nrays; ++j) row[j] -= fac * p[j];
            }
        }
        for (int j = 0; j < nrays; ++j)
            if (row[j] != 0) {
                pivots.push_back(std::move(row));
                ++rank;
                return;
            }
    };
    for (auto [c, d] : f.walls()) {
        if (part.block_of[c] != part.block_of[d]) continue;
        // vertex coordinates are +-(w(chain_k) - w(chain_{k+1})); equate
        const Perm& wc = f.chamber(c);
        const Perm& wd = f.chamber(d);
        const auto& ch_c = f.chamber_rays(c);
        const auto& ch_d = f.chamber_rays(d);
        for (int coord = 1; coord <= n; ++coord) {
            Vec row(nrays, 0);
            auto accum = [&](const Perm& w, const std::vector<int>& chain, int sgn) {
                for (int k = 1; k <= n; ++k) {
                    int e = w[k - 1];
                    if (std::abs(e) != coord) continue;
                    int sign = (e > 0 ? 1 : -1) * sgn;
                    row[chain[k - 1]] += sign;
                    if (k < n) row[chain[k]] -= sign;
                }
            };
            accum(wc, ch_c, 1);
            accum(wd, ch_d, -1);
            add_row(std::move(row));
        }
    }
    return nrays - rank - n;
}

bool is_indecomposable(const SupportVector& s) { return summand_space_dim(s) == 1; }

bool mcmullen_check(const VPolytope& v, int vi, int vj) {
    auto facets = intrinsic_facets(v);
    // the segment is an edge iff the vertices on all its common facets are
    // exactly its two endpoints
    std::vector<int> common;
    for (size_t k = 0; k < facets.size(); ++k) {
        bool i_in = std::binary_search(facets[k].begin(), facets[k].end(), vi);
        bool j_in = std::binary_search(facets[k].begin(), facets[k].end(), vj);
        if (i_in && j_in) common.push_back(int(k));
    }
    std::vector<char> on_all(v.verts.size(), 1);
    for (int k : common)
        for (size_t x = 0; x < v.verts.size(); ++x)
            if (!std::binary_search(facets[k].begin(), facets[k].end(), int(x))) on_all[x] = 0;
    int cnt = 0;
    for (size_t x = 0; x < v.verts.size(); ++x) cnt += on_all[x];
    require(cnt == 2 && on_all[vi] && on_all[vj] && affine_dim(v.verts) >= 1, "NotAnEdge",
            "the given vertex pair is not an edge");
    for (const auto& face : facets)
        if (!std::binary_search(face.begin(), face.end(), vi) &&
            !std::binary_search(face.begin(), face.end(), vj))
            return false;
    return true;
}

std::map<Mask, Rat> support_convert_to_inner(const SupportVector& s) {
    const FanFrame& f = *s.frame;
    require(f.kind() == Kind::A, "FrameMismatch", "inner heights are a type A concept");
    int n = f.n();
    std::map<Mask, Rat> z;
    Rat total = s.s[full_mask(n) - 1];
    for (Mask r = 1; r <= full_mask(n); ++r) {
        Mask comp = full_mask(n) & ~r;
        z[r] = comp == 0 ? total : total - s.s[comp - 1];
    }
    return z;
}

SupportVector support_from_inner(const std::map<Mask, Rat>& z, int n) {
    const FanFrame& f = FanFrame::get(Kind::A, n);
    SupportVector s{&f, std::vector<Rat>(f.num_rays())};
    auto zval = [&](Mask m) {
        if (m == 0) return Rat(0);
        auto it = z.find(m);
        return it == z.end() ? Rat(0) : it->second;
    };
    Rat total = zval(full_mask(n));
    for (Mask r = 1; r <= full_mask(n); ++r)
        s.s[r - 1] = total - zval(full_mask(n) & ~r);
    return s;
}

} // namespace shards
