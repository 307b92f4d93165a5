#include "shards/quotientope.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <set>

namespace shards {

Vec v_of(const Vec& t, const Arc& arc) {
    // coordinate rule for the maximizing vertex; ties resolve pairing-through
    int n = arc.n;
    Vec v(n, 0);
    auto tv = [&](int e) { return t[e - 1]; };
    for (int j = arc.a; j <= arc.b; ++j) {
        bool start = j == arc.a || has(arc.above, j);
        bool end = j == arc.b || has(arc.below, j);
        if (start) {
            bool left_ok = true;
            for (int i = arc.a; i < j && left_ok; ++i) {
                if (!(i == arc.a || has(arc.above, i)) || tv(i) <= tv(j)) continue;
                bool blocked = false;
                for (int h = i + 1; h < j && !blocked; ++h)
                    if (has(arc.below, h) && tv(h) <= tv(j)) blocked = true;
                if (!blocked) left_ok = false;
            }
            bool right_ok = false;
            for (int k = j + 1; k <= arc.b && !right_ok; ++k) {
                if (!(k == arc.b || has(arc.below, k)) || tv(j) <= tv(k)) continue;
                bool blocked = false;
                for (int l = j + 1; l < k && !blocked; ++l)
                    if (has(arc.above, l) && tv(j) <= tv(l)) blocked = true;
                if (!blocked) right_ok = true;
            }
            if (left_ok && right_ok) v[j - 1] = 1;
        } else if (end) {
            bool left_ok = false;
            for (int i = arc.a; i < j && !left_ok; ++i) {
                if (!(i == arc.a || has(arc.above, i)) || tv(i) <= tv(j)) continue;
                bool blocked = false;
                for (int h = i + 1; h < j && !blocked; ++h)
                    if (has(arc.below, h) && tv(h) <= tv(j)) blocked = true;
                if (!blocked) left_ok = true;
            }
            bool right_ok = true;
            for (int k = j + 1; k <= arc.b && right_ok; ++k) {
                if (!(k == arc.b || has(arc.below, k)) || tv(j) <= tv(k)) continue;
                bool blocked = false;
                for (int l = j + 1; l < k && !blocked; ++l)
                    if (has(arc.above, l) && tv(l) >= tv(j)) blocked = true;
                if (!blocked) right_ok = false;
            }
            if (left_ok && right_ok) v[j - 1] = -1;
        }
    }
    return v;
}

Vec v_of_ideal(const Vec& t, const ArcIdeal& ideal) {
    Vec v(ideal.n, 0);
    for (const Arc& arc : ideal.arcs) {
        Vec w = v_of(t, arc);
        for (int i = 0; i < ideal.n; ++i) v[i] += w[i];
    }
    return v;
}

long h_of(Mask r, const Arc& arc) {
    // pairs (p,q): p a start in R, q an end outside R, nothing in B^R between
    long cnt = 0;
    for (int p = arc.a; p < arc.b; ++p) {
        if (!(p == arc.a || has(arc.above, p)) || !has(r, p)) continue;
        for (int q = p + 1; q <= arc.b; ++q) {
            if (!(q == arc.b || has(arc.below, q)) || has(r, q)) continue;
            bool ok = true;
            for (int l = p + 1; l < q && ok; ++l)
                if (has(arc.below, l) != has(r, l)) ok = false;
            if (ok) ++cnt;
        }
    }
    return cnt;
}

long h_of_ideal(Mask r, const ArcIdeal& ideal) {
    long s = 0;
    for (const Arc& arc : ideal.arcs) s += h_of(r, arc);
    return s;
}

SupportVector quotientope(const ArcIdeal& ideal) {
    return quotientope(ideal, std::vector<Rat>(ideal.arcs.size(), Rat(1)));
}

SupportVector quotientope(const ArcIdeal& ideal, const std::vector<Rat>& weights) {
    require(weights.size() == ideal.arcs.size(), "InvalidInput", "one weight per arc");
    for (const Rat& w : weights)
        require(w > 0, "NonpositiveWeight", "weights must be positive");
    SupportVector s = zero_support(Kind::A, ideal.n);
    for (Mask r = 1; r < full_mask(ideal.n); ++r)
        for (size_t i = 0; i < ideal.arcs.size(); ++i)
            s.s[r - 1] += weights[i] * h_of(r, ideal.arcs[i]);
    // coordinate sum is zero for every shard polytope
    s.s[full_mask(ideal.n) - 1] = 0;
    return s;
}

bool partitions_agree(const ChamberPartition& cp, const CongruencePartition& cc) {
    if (int(cp.block_of.size()) != int(cc.class_of.size())) return false;
    // both label blocks by first occurrence over the same chamber order
    return cp.block_of == cc.class_of;
}

bool verify_cor50(const ArcIdeal& ideal) {
    return partitions_agree(chamber_partition(quotientope(ideal)), congruence_classes(ideal));
}

bool ray_check(const ArcIdeal& ideal, Mask r) {
    int n = ideal.n;
    require(r != 0 && r != full_mask(n), "InvalidInput", "proper nonempty subset required");
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            Mask mid = interval_open(a, b);
            if (has(r, a) && has(r, b) && (mid & r) == 0) {
                if (!ideal.contains(Arc{a, b, 0, mid, n})) return false;
            }
            if (!has(r, a) && !has(r, b) && (mid & ~r) == 0) {
                if (!ideal.contains(Arc{a, b, mid, 0, n})) return false;
            }
        }
    return true;
}

Vec loday_vertex(const Vec& t, int n) {
    Vec v(n);
    for (int j = 1; j <= n; ++j) {
        int i = 0;
        for (int h = 1; h < j; ++h)
            if (t[h - 1] > t[j - 1]) i = h;
        int k = n + 1;
        for (int l = j + 1; l <= n; ++l)
            if (t[l - 1] > t[j - 1]) { k = l; break; }
        v[j - 1] = (j - i) * (k - j);
    }
    return v;
}

VPolytope reference_loday(int n) {
    auto part = congruence_classes(sylvester_ideal(n));
    std::vector<Vec> pts;
    for (long rep : part.class_min) {
        Perm p = perm_unrank(n, rep);
        Perm inv = perm_inverse(p);
        Vec t(inv.begin(), inv.end());
        pts.push_back(loday_vertex(t, n));
    }
    std::sort(pts.begin(), pts.end());
    return VPolytope{Kind::A, n, std::move(pts)};
}

Vec hl_vertex(const Vec& t, const Arc& arc) {
    // coordinate j combines counts of sub-arc markers on each side
    int n = arc.n;
    auto tv = [&](int e) { return t[e - 1]; };
    Vec out(n, 0);
    for (int j = arc.a; j <= arc.b; ++j) {
        auto cond_i = [&](int ap) {
            // every start of the sub-arc [ap, .] above t_j is blocked below
            for (int i = ap; i < j; ++i) {
                if (!(i == ap || has(arc.above, i)) || tv(i) <= tv(j)) continue;
                bool blocked = false;
                for (int h = i + 1; h < j && !blocked; ++h)
                    if (has(arc.below, h) && tv(h) <= tv(j)) blocked = true;
                if (!blocked) return false;
            }
            return true;
        };
        auto cond_k = [&](int bp) {
            // some end of the sub-arc [., bp] below t_j is reachable
            for (int k = j + 1; k <= bp; ++k) {
                if (!(k == bp || has(arc.below, k)) || tv(j) <= tv(k)) continue;
                bool blocked = false;
                for (int l = j + 1; l < k && !blocked; ++l)
                    if (has(arc.above, l) && tv(l) >= tv(j)) blocked = true;
                if (!blocked) return true;
            }
            return false;
        };
        auto cond_iii = [&](int ap) {
            for (int i = ap; i < j; ++i) {
                if (!(i == ap || has(arc.above, i)) || tv(i) <= tv(j)) continue;
                bool blocked = false;
                for (int h = i + 1; h < j && !blocked; ++h)
                    if (has(arc.below, h) && tv(h) <= tv(j)) blocked = true;
                if (!blocked) return true;
            }
            return false;
        };
        auto cond_iv = [&](int bp) {
            for (int k = j + 1; k <= bp; ++k) {
                if (!(k == bp || has(arc.below, k)) || tv(j) <= tv(k)) continue;
                bool blocked = false;
                for (int l = j + 1; l < k && !blocked; ++l)
                    if (has(arc.above, l) && tv(l) >= tv(j)) blocked = true;
                if (!blocked) return false;
            }
            return true;
        };
        long ci = 0, ck = 0, ciii = 0, civ = 0;
        for (int ap = arc.a; ap < j; ++ap) {
            if (cond_i(ap)) ++ci;
            if (cond_iii(ap)) ++ciii;
        }
        for (int bp = j + 1; bp <= arc.b; ++bp) {
            if (cond_k(bp)) ++ck;
            if (cond_iv(bp)) ++civ;
        }
        long plus = (1 + (has(arc.above, j) ? ci : 0)) * ck;
        long minus = ciii * (1 + (has(arc.below, j) ? civ : 0));
        out[j - 1] = (j - arc.a + 1) + plus - minus;
    }
    return out;
}

VPolytope reference_hl(const Arc& arc) {
    auto part = congruence_classes(cambrian_ideal(arc));
    std::vector<Vec> pts;
    for (long rep : part.class_min) {
        Perm p = perm_unrank(arc.n, rep);
        Perm inv = perm_inverse(p);
        Vec t(inv.begin(), inv.end());
        pts.push_back(hl_vertex(t, arc));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return VPolytope{Kind::A, arc.n, std::move(pts)};
}

bool verify_thm1(const ArcIdeal& ideal) {
    SupportVector sum = zero_support(Kind::A, ideal.n);
    for (const Arc& arc : minimal_arcs(ideal))
        sum = minkowski_sum(sum, quotientope(cambrian_ideal(arc)));
    return partitions_agree(chamber_partition(sum), congruence_classes(ideal));
}

// ---- PS-quotientopes ----

static std::vector<Mask> competitors(Mask s, int n) {
    // proper outward extensions: same trace strictly between min and max,
    // weakly larger span
    int lo = min_elem(s), hi = max_elem(s);
    Mask mid = interval_open(lo, hi);
    std::vector<Mask> out;
    for (Mask r : subsets_ge2(n)) {
        if (r == s) continue;
        if (min_elem(r) <= lo && max_elem(r) >= hi && (r & mid) == (s & mid)) out.push_back(r);
    }
    return out;
}

bool validate_forcing_dominant(const SubsetFn& f, int n) {
    for (Mask s : subsets_ge2(n)) {
        auto it = f.find(s);
        if (it == f.end() || it->second <= 0) return false;
        Rat sum = 0;
        for (Mask r : competitors(s, n)) sum += f.at(r);
        if (it->second <= sum) return false;
    }
    return true;
}

SubsetFn make_forcing_dominant(int n) {
    // downward recursion on the span; the largest spans have no competitors
    SubsetFn f;
    auto subs = subsets_ge2(n);
    std::sort(subs.begin(), subs.end(), [](Mask x, Mask y) {
        return max_elem(x) - min_elem(x) > max_elem(y) - min_elem(y);
    });
    for (Mask s : subs) {
        Rat v = 1;
        for (Mask r : competitors(s, n)) v += f.at(r);
        f[s] = v;
    }
    return f;
}

int gamma_contribution(Mask s, Mask r, int n) {
    (void)n;
    int lo = min_elem(s), hi = max_elem(s);
    Mask ends = bit(lo) | bit(hi);
    if (popcount(ends & r) != 1) return 0;
    Mask mid = interval_open(lo, hi);
    return (s & mid) == (r & mid) ? 1 : 0;
}

int gamma_alternating(Mask s, Mask i, int n) {
    int lo = min_elem(i), hi = max_elem(i);
    Mask left = interval_closed(1, lo), right = interval_closed(hi, n);
    return gamma_contribution(s, i ^ left, n) + gamma_contribution(s, i ^ right, n) -
           gamma_contribution(s, i, n) - gamma_contribution(s, Mask(i ^ (left | right)), n);
}

Rat ps_height(const ArcIdeal& ideal, const SubsetFn& f, Mask r) {
    Rat h = 0;
    for (const Arc& arc : ideal.arcs) {
        Mask s = bit(arc.a) | bit(arc.b) | arc.above;
        h += f.at(s) * gamma_contribution(s, r, ideal.n);
    }
    return h;
}

SupportVector ps_quotientope(const ArcIdeal& ideal, const SubsetFn& f) {
    int n = ideal.n;
    require(validate_forcing_dominant(f, n), "NotForcingDominant",
            "the height function must be forcing dominant");
    // inequalities <r(R), x> <= h(R) with r(R) = |R| 1 - n 1_R, plus the sum
    // hyperplane; enumerate candidate vertices over (n-1)-subsets of tight
    // constraints
    Rat hfull = ps_height(ideal, f, full_mask(n));
    std::vector<std::pair<Vec, Rat>> cons;
    for (Mask r = 1; r < full_mask(n); ++r) {
        Vec c(n, 0);
        int sz = popcount(r);
        for (int i = 1; i <= n; ++i) c[i - 1] = has(r, i) ? sz - n : sz;
        cons.push_back({std::move(c), ps_height(ideal, f, r)});
    }
    std::set<Vec> verts;
    std::vector<int> comb(n - 1);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == n - 1) {
            std::vector<Vec> m;
            Vec rhs;
            for (int i : comb) {
                m.push_back(cons[i].first);
                rhs.push_back(cons[i].second);
            }
            m.push_back(Vec(n, 1));
            rhs.push_back(hfull);
            // solve m x = rhs exactly
            std::vector<Vec> a(m);
            for (int i = 0; i < n; ++i) a[i].push_back(rhs[i]);
            int rk = 0;
            for (int c = 0; c < n && rk < n; ++c) {
                int piv = -1;
                for (int i = rk; i < n; ++i)
                    if (a[i][c] != 0) { piv = i; break; }
                if (piv < 0) continue;
                std::swap(a[rk], a[piv]);
                Rat lead = a[rk][c];
                for (Rat& x : a[rk]) x /= lead;
                for (int i = 0; i < n; ++i) {
                    if (i == rk || a[i][c] == 0) continue;
                    Rat fac = a[i][c];
                    for (int j = c; j <= n; ++j) a[i][j] -= fac * a[rk][j];
                }
                ++rk;
            }
            if (rk < n) return;
            Vec x(n);
            for (int i = 0; i < n; ++i) x[i] = a[i][n];
            for (const auto& [c, b] : cons)
                if (dot(c, x) > b) return;
            verts.insert(std::move(x));
            return;
        }
        for (int i = start; i <= int(cons.size()) - (n - 1 - k); ++i) {
            comb[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    require(!verts.empty(), "Internal", "empty PS-quotientope");
    return support_from_points(std::vector<Vec>(verts.begin(), verts.end()), Kind::A, n);
}

Prop100Report verify_prop100(const ArcIdeal& ideal, const SubsetFn& f) {
    Prop100Report rep;
    int n = ideal.n;
    SupportVector s = ps_quotientope(ideal, f);
    rep.fan_matches = partitions_agree(chamber_partition(s), congruence_classes(ideal));
    // geometric shard coefficients via tight caged inner heights
    VPolytope v = vertices_from_support(s);
    VPolytope caged = caged_translate(v);
    auto z = support_convert_to_inner(support_from_vertices(caged));
    std::set<Mask> in_ideal;
    for (const Arc& arc : ideal.arcs) in_ideal.insert(bit(arc.a) | bit(arc.b) | arc.above);
    for (Mask i : subsets_ge2(n)) {
        int lo = min_elem(i), hi = max_elem(i);
        Mask left = interval_closed(1, lo), right = interval_closed(hi, n);
        auto zv = [&](Mask m) { return popcount(m) >= 2 ? z.at(m) : Rat(0); };
        Rat si = zv(i) - zv(i ^ left) - zv(i ^ right) + zv(Mask(i ^ (left | right)));
        // accounting identity
        Rat acct = 0;
        for (const Arc& arc : ideal.arcs) {
            Mask s2 = bit(arc.a) | bit(arc.b) | arc.above;
            acct += f.at(s2) * gamma_alternating(s2, i, n);
        }
        acct /= n;
        if (si != acct) rep.coefficients_match = false;
        if (in_ideal.count(i) ? si <= 0 : si != 0) rep.coefficients_match = false;
    }
    return rep;
}

} // namespace shards
