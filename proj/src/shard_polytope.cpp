#include "shards/shard_polytope.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shards {

namespace {

// decorated element lists of the host (pseudoshards simply skip points)
std::vector<int> starts_of(const Arc& arc) {
    std::vector<int> s{arc.a};
    for (int v : mask_elems(arc.above)) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}
std::vector<int> ends_of(const Arc& arc) {
    std::vector<int> e = mask_elems(arc.below);
    e.push_back(arc.b);
    std::sort(e.begin(), e.end());
    return e;
}

} // namespace

std::vector<Matching> enumerate_matchings(const Arc& arc) {
    validate_arc(arc, true);
    std::vector<int> elems = mask_elems(arc.above | arc.below);
    elems.insert(elems.begin(), arc.a);
    elems.push_back(arc.b);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Matching> out;
    Matching cur;
    std::function<void(size_t, bool)> rec = [&](size_t k, bool open) {
        if (!open) out.push_back(cur);
        for (size_t i = k; i < elems.size(); ++i) {
            int e = elems[i];
            bool start = e == arc.a || has(arc.above, e);
            bool end = e == arc.b || has(arc.below, e);
            if (!open && start) {
                cur.push_back(e);
                rec(i + 1, true);
                cur.pop_back();
            }
            if (open && end) {
                cur.push_back(e);
                rec(i + 1, false);
                cur.pop_back();
            }
        }
    };
    rec(0, false);
    std::sort(out.begin(), out.end());
    return out;
}

long matching_count(const Arc& arc) {
    // v(i) counts odd prefixes, w(i) even prefixes of matchings within [a,i]
    long v = 0, w = 1;
    for (int i = arc.a; i <= arc.b; ++i) {
        bool start = i == arc.a || has(arc.above, i);
        bool end = i == arc.b || has(arc.below, i);
        long nv = v + (start ? w : 0);
        long nw = w + (end ? v : 0);
        v = nv;
        w = nw;
    }
    return w;
}

Vec matching_vector(const Matching& m, int n) {
    Vec x(n, 0);
    for (size_t k = 0; k < m.size(); ++k) x[m[k] - 1] += (k % 2 == 0) ? 1 : -1;
    return x;
}

VPolytope shard_polytope(const Arc& arc) {
    std::vector<Vec> pts;
    for (const Matching& m : enumerate_matchings(arc)) pts.push_back(matching_vector(m, arc.n));
    std::sort(pts.begin(), pts.end());
    return VPolytope{Kind::A, arc.n, std::move(pts)};
}

SupportVector shard_support(const Arc& arc) {
    return support_from_vertices(shard_polytope(arc));
}

std::vector<int> arc_falls(const Arc& arc) {
    std::vector<int> elems{arc.a};
    for (int v : mask_elems(arc.above | arc.below)) elems.push_back(v);
    elems.push_back(arc.b);
    std::sort(elems.begin(), elems.end());
    std::vector<int> out;
    for (size_t i = 0; i + 1 < elems.size(); ++i) {
        int j = elems[i], k = elems[i + 1];
        bool j_start = j == arc.a || has(arc.above, j);
        bool k_end = k == arc.b || has(arc.below, k);
        if (j_start && k_end) out.push_back(j);
    }
    return out;
}

std::vector<int> arc_rises(const Arc& arc) {
    std::vector<int> elems{arc.a};
    for (int v : mask_elems(arc.above | arc.below)) elems.push_back(v);
    elems.push_back(arc.b);
    std::sort(elems.begin(), elems.end());
    std::vector<int> out;
    for (size_t i = 0; i + 1 < elems.size(); ++i) {
        int j = elems[i], k = elems[i + 1];
        bool j_low = j == arc.a || has(arc.below, j);
        bool k_high = k == arc.b || has(arc.above, k);
        if (j_low && k_high) out.push_back(j);
    }
    return out;
}

std::vector<ShardFacet> shard_polytope_facets(const Arc& arc) {
    validate_arc(arc, true);
    int n = arc.n;
    std::vector<ShardFacet> out;
    Mask undecorated = interval_open(arc.a, arc.b) & ~(arc.above | arc.below);
    for (int i = 1; i <= n; ++i)
        if (i < arc.a || i > arc.b || has(undecorated, i)) {
            Vec nv(n, 0);
            nv[i - 1] = 1;
            out.push_back(ShardFacet{FacetKind::zero_coord, i, nv, 0});
        }
    for (int i : mask_elems(arc.above)) {
        Vec nv(n, 0);
        nv[i - 1] = -1;  // x_i >= 0
        out.push_back(ShardFacet{FacetKind::above_sign, i, nv, 0});
    }
    for (int i : mask_elems(arc.below)) {
        Vec nv(n, 0);
        nv[i - 1] = 1;  // x_i <= 0
        out.push_back(ShardFacet{FacetKind::below_sign, i, nv, 0});
    }
    for (int f : arc_falls(arc)) {
        Vec nv(n, 0);
        for (int i = 1; i <= f; ++i) nv[i - 1] = 1;  // prefix <= 1
        out.push_back(ShardFacet{FacetKind::fall, f, nv, 1});
    }
    for (int r : arc_rises(arc)) {
        Vec nv(n, 0);
        for (int i = 1; i <= r; ++i) nv[i - 1] = -1;  // prefix >= 0
        out.push_back(ShardFacet{FacetKind::rise, r, nv, 0});
    }
    return out;
}

bool shard_contains(const Arc& arc, const Vec& x) {
    if (x[arc.a - 1] != x[arc.b - 1]) return false;
    for (int i : mask_elems(arc.above))
        if (x[arc.a - 1] < x[i - 1]) return false;
    for (int i : mask_elems(arc.below))
        if (x[arc.a - 1] > x[i - 1]) return false;
    return true;
}

WallReport wall_report(const Arc& arc, const SupportVector& s) {
    const FanFrame& f = *s.frame;
    WallReport rep;
    for (auto [c, d] : f.walls()) {
        bool split = chamber_vertex(s, c) != chamber_vertex(s, d);
        // the wall between adjacent chambers lies in the shard of its cover arc
        const Perm& lo = f.chamber(c);
        const Perm& hi = f.chamber(d);
        int pos = 1;
        while (lo[pos - 1] == hi[pos - 1]) ++pos;
        const Perm& upper = lo[pos - 1] > lo[pos] ? lo : hi;
        Arc wall_arc = cover_arc(upper, pos);
        if (split && !forces(wall_arc, arc)) rep.walls_force = false;
        if (wall_arc == arc && !split) rep.shard_present = false;
    }
    return rep;
}

WallReport verify_prop48(const Arc& arc) { return wall_report(arc, shard_support(arc)); }

bool is_face_of(const Arc& arc, const Arc& target) {
    // forcing plus endpoint compatibility
    if (!forces(arc, target)) return false;
    bool a_ok = arc.a == target.a || has(target.above, arc.a);
    bool b_ok = arc.b == target.b || has(target.below, arc.b);
    return a_ok && b_ok;
}

std::optional<Vec> face_embedding(const Arc& arc, const Arc& target) {
    if (!forces(arc, target)) return std::nullopt;
    Vec t(arc.n, 0);
    if (has(target.below, arc.a)) {
        t[target.a - 1] += 1;
        t[arc.a - 1] -= 1;
    }
    if (has(target.above, arc.b)) {
        t[arc.b - 1] += 1;
        t[target.b - 1] -= 1;
    }
    return t;
}

Arc symmetry_image(const Arc& arc, Symmetry which) {
    return which == Symmetry::phi ? phi_arc(arc) : psi_arc(arc);
}

bool symmetry_check(const Arc& arc, Symmetry which) {
    VPolytope sp = shard_polytope(arc);
    std::vector<Vec> mapped;
    int n = arc.n;
    for (const Vec& p : sp.verts) {
        Vec q(n);
        if (which == Symmetry::phi) {
            for (int i = 0; i < n; ++i) q[i] = -p[i];
            q[arc.a - 1] += 1;
            q[arc.b - 1] -= 1;
        } else {
            for (int i = 0; i < n; ++i) q[n - 1 - i] = p[i];
            q[(n + 1 - arc.a) - 1] -= 1;
            q[(n + 1 - arc.b) - 1] += 1;
        }
        mapped.push_back(std::move(q));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == shard_polytope(symmetry_image(arc, which)).verts;
}

std::pair<SupportVector, SupportVector> theorem57_instance(const Arc& arc, int x) {
    require(arc.b - arc.a >= 2 && arc.a < x && x < arc.b, "InvalidInput",
            "splitting point must be interior to a long arc");
    validate_arc(arc);
    int n = arc.n;
    auto sup = [&](const Arc& a) { return support_from_points(shard_polytope(a).verts, Kind::A, n); };
    Arc with_above{arc.a, arc.b, Mask(arc.above | bit(x)), Mask(arc.below & ~bit(x)), n};
    Arc with_below{arc.a, arc.b, Mask(arc.above & ~bit(x)), Mask(arc.below | bit(x)), n};
    Arc punctured{arc.a, arc.b, Mask(arc.above & ~bit(x)), Mask(arc.below & ~bit(x)), n};
    Arc left{arc.a, x, Mask(arc.above & interval_open(arc.a, x)),
             Mask(arc.below & interval_open(arc.a, x)), n};
    Arc right{x, arc.b, Mask(arc.above & interval_open(x, arc.b)),
              Mask(arc.below & interval_open(x, arc.b)), n};
    SupportVector lhs = minkowski_sum(sup(with_above), sup(with_below));
    SupportVector rhs = minkowski_sum(minkowski_sum(sup(punctured), sup(left)), sup(right));
    return {lhs, rhs};
}

bool minimal_arc_zonotope_check(int n) {
    require(n >= 2, "InvalidInput", "needs n >= 2");
    SupportVector lhs = zero_support(Kind::A, n);
    Mask mid = interval_open(1, n);
    Mask A = 0;
    while (true) {
        lhs = minkowski_sum(lhs, shard_support(Arc{1, n, A, Mask(mid & ~A), n}));
        if (A == mid) break;
        A = (A - mid) & mid;
    }
    SupportVector rhs = zero_support(Kind::A, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long coeff = (1L << std::max(i - 2, 0)) * (1L << std::max(n - j - 1, 0));
            Vec seg(n, 0);
            seg[i - 1] = 1;
            seg[j - 1] = -1;
            SupportVector s = support_from_points({Vec(n, 0), seg}, Kind::A, n);
            rhs = minkowski_sum(rhs, scale(s, coeff));
        }
    return lhs == rhs;
}

std::variant<std::pair<Matching, Matching>, int> decompose_matching_pair(const Arc& arc,
                                                                         const Matching& m1,
                                                                         const Matching& m2) {
    require(m1 != m2, "InvalidInput", "matchings must differ");
    auto all = enumerate_matchings(arc);
    std::multiset<int> want(m1.begin(), m1.end());
    want.insert(m2.begin(), m2.end());
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (all[i] == m1 || all[i] == m2 || all[j] == m1 || all[j] == m2) continue;
            std::multiset<int> got(all[i].begin(), all[i].end());
            got.insert(all[j].begin(), all[j].end());
            if (got == want) return std::make_pair(all[i], all[j]);
        }
    // no decomposition: classify the special family by the stripped shapes
    size_t h = 0;
    while (h < m1.size() && h < m2.size() && m1[h] == m2[h]) ++h;
    h -= h % 2;  // common head must be a matching
    size_t t = 0;
    while (t < m1.size() - h && t < m2.size() - h && m1[m1.size() - 1 - t] == m2[m2.size() - 1 - t])
        ++t;
    t -= t % 2;
    Matching c1(m1.begin() + h, m1.end() - t), c2(m2.begin() + h, m2.end() - t);
    if (c1.size() < c2.size()) std::swap(c1, c2);
    if (c1.size() == 2 && c2.empty()) return 1;
    if (c1.size() == 2 && c2.size() == 2 && c1[0] == c2[0]) return 2;
    if (c1.size() == 2 && c2.size() == 2 && c1[1] == c2[1]) return 3;
    if (c1.size() == 4 && c2.size() == 2 && c1[0] == c2[0] && c1[3] == c2[1]) return 4;
    fail("Internal", "matching pair admits neither a decomposition nor a tag");
}

bool normal_cone_contains(const Arc& arc, const Matching& m, const Vec& t) {
    // chi(m) maximizes t iff no edge neighbor improves: remove a pair, insert
    // a pair into a gap, or replace one endpoint of a pair
    auto starts = starts_of(arc);
    auto ends = ends_of(arc);
    auto tv = [&](int e) { return t[e - 1]; };
    size_t k = m.size() / 2;
    for (size_t p = 0; p < k; ++p)
        if (tv(m[2 * p]) < tv(m[2 * p + 1])) return false;  // removing the pair improves
    // gaps: before the first pair / between pairs / after the last pair
    auto gap_ok = [&](int lo, int hi) {
        for (int x : starts) {
            if (x <= lo || x >= hi) continue;
            for (int y : ends)
                if (y > x && y < hi && tv(x) > tv(y)) return false;  // insertion improves
        }
        return true;
    };
    int prev = 0;
    for (size_t p = 0; p <= k; ++p) {
        int lo = p == 0 ? 0 : m[2 * p - 1];
        int hi = p == k ? arc.n + 1 : m[2 * p];
        if (!gap_ok(lo, hi)) return false;
        prev = hi;
    }
    (void)prev;
    for (size_t p = 0; p < k; ++p) {
        int lo = p == 0 ? 0 : m[2 * p - 1];
        int hi = m[2 * p + 1];
        for (int x : starts)  // replace the left endpoint
            if (x > lo && x < hi && x != m[2 * p] && tv(x) > tv(m[2 * p])) return false;
        int lo2 = m[2 * p];
        int hi2 = p + 1 == k ? arc.n + 1 : m[2 * p + 2];
        for (int y : ends)  // replace the right endpoint
            if (y > lo2 && y < hi2 && y != m[2 * p + 1] && tv(y) < tv(m[2 * p + 1])) return false;
    }
    // merging two consecutive pairs drops an end and the following start
    for (size_t p = 0; p + 1 < k; ++p)
        if (tv(m[2 * p + 1]) > tv(m[2 * p + 2])) return false;
    // splitting a pair inserts an end and a following start inside its span
    for (size_t p = 0; p < k; ++p)
        for (int y : ends) {
            if (y <= m[2 * p] || y >= m[2 * p + 1]) continue;
            for (int x : starts)
                if (x > y && x < m[2 * p + 1] && tv(x) > tv(y)) return false;
        }
    return true;
}

bool pair_selected(const Arc& arc, int i, int j, const Vec& t) {
    auto starts = starts_of(arc);
    auto ends = ends_of(arc);
    auto tv = [&](int e) { return t[e - 1]; };
    bool i_start = std::binary_search(starts.begin(), starts.end(), i);
    bool j_end = std::binary_search(ends.begin(), ends.end(), j);
    if (!(i_start && j_end && i < j)) return false;
    if (tv(i) < tv(j)) return false;
    for (int k = i + 1; k < j; ++k) {
        if (has(arc.above, k) && tv(i) < tv(k)) return false;
        if (has(arc.below, k) && tv(k) < tv(j)) return false;
    }
    for (int jp = i + 1; jp < j; ++jp)
        for (int ip = jp + 1; ip < j; ++ip)
            if (has(arc.above, ip) && has(arc.below, jp) && tv(ip) > tv(jp)) return false;
    for (int ip : starts) {
        if (ip >= i || tv(ip) <= tv(i)) continue;
        bool blocked = false;
        for (int h = ip + 1; h < i && !blocked; ++h)
            if (has(arc.below, h) && tv(i) >= tv(h)) blocked = true;
        if (!blocked) return false;
    }
    for (int jp : ends) {
        if (jp <= j || tv(jp) >= tv(j)) continue;
        bool blocked = false;
        for (int l = j + 1; l < jp && !blocked; ++l)
            if (has(arc.above, l) && tv(l) >= tv(j)) blocked = true;
        if (!blocked) return false;
    }
    return true;
}

bool edge_normal_cone_contains(const Arc& arc, int i, int j, const Vec& t) {
    require(1 <= i && i < j && j <= arc.n, "InvalidInput", "need i < j");
    if (t[i - 1] != t[j - 1]) return false;
    auto starts = starts_of(arc);
    auto ends = ends_of(arc);
    bool i_start = std::binary_search(starts.begin(), starts.end(), i);
    bool i_end = std::binary_search(ends.begin(), ends.end(), i);
    bool j_start = std::binary_search(starts.begin(), starts.end(), j);
    bool j_end = std::binary_search(ends.begin(), ends.end(), j);
    if (i_start && j_end) return pair_selected(arc, i, j, t);
    if (i_end && j_start) {
        for (int ap : starts)
            if (ap < i)
                for (int bp : ends)
                    if (bp > j && pair_selected(arc, ap, bp, t)) return true;
        return false;
    }
    if (i_start && j_start) {
        for (int bp : ends)
            if (bp > j && pair_selected(arc, i, bp, t)) return true;
        return false;
    }
    if (i_end && j_end) {
        for (int ap : starts)
            if (ap < i && pair_selected(arc, ap, j, t)) return true;
        return false;
    }
    return false;
}

} // namespace shards
