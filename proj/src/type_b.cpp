#include "shards/type_b.hpp"

#include "shards/error.hpp"
#include "shards/shard_polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace shards {

int signed_to_ground(int v, int n) { return v < 0 ? v + n + 1 : v + n; }
int ground_to_signed(int g, int n) { return g <= n ? g - n - 1 : g - n; }

Arc arc_to_ground(int a, int b, const std::vector<int>& above, const std::vector<int>& below,
                  int n) {
    Arc arc;
    arc.n = 2 * n;
    arc.a = signed_to_ground(a, n);
    arc.b = signed_to_ground(b, n);
    for (int v : above) arc.above |= bit(signed_to_ground(v, n));
    for (int v : below) arc.below |= bit(signed_to_ground(v, n));
    return arc;
}

Arc negate_arc(const Arc& arc2n) {
    int m = arc2n.n;
    auto refl = [m](Mask x) {
        Mask r = 0;
        for (int e : mask_elems(x)) r |= bit(m + 1 - e);
        return r;
    };
    return Arc{m + 1 - arc2n.b, m + 1 - arc2n.a, refl(arc2n.below), refl(arc2n.above), m};
}

bool centrally_symmetrizable(const Arc& arc2n) {
    Arc neg = negate_arc(arc2n);
    if (neg == arc2n) return true;
    Mask e1 = bit(arc2n.a) | bit(arc2n.b);
    Mask e2 = bit(neg.a) | bit(neg.b);
    if (e1 & e2) return false;
    return !arcs_cross(arc2n, neg);
}

BArc make_barc(const Arc& arc2n, int n) {
    require(arc2n.n == 2 * n, "InvalidInput", "arc not on the [±n] ground");
    validate_arc(arc2n);
    require(centrally_symmetrizable(arc2n), "InvalidInput", "arc is not centrally symmetrizable");
    // representative: the rightmost of the pair
    Arc neg = negate_arc(arc2n);
    int sb = ground_to_signed(arc2n.b, n), sa = ground_to_signed(arc2n.a, n);
    return BArc{sa + sb >= 0 ? arc2n : neg, n};
}

std::vector<BArc> enumerate_b_arcs(int n) {
    std::set<BArc> out;
    for (const Arc& arc : enumerate_arcs(2 * n))
        if (centrally_symmetrizable(arc)) out.insert(make_barc(arc, n));
    return std::vector<BArc>(out.begin(), out.end());
}

BClass classify(const BArc& b) {
    int sa = ground_to_signed(b.rep.a, b.nb);
    if (sa > 0) return BClass::separated;
    if (negate_arc(b.rep) == b.rep) return BClass::singular;
    return BClass::overlapped;
}

Arc upper_arc(const BArc& b) {
    require(classify(b) == BClass::overlapped, "InvalidInput", "upper arc of a non-overlapped B-arc");
    int n = b.nb;
    int sa = ground_to_signed(b.rep.a, n);
    // the representative is upper iff -a is above it and every below-point of
    // ]a,-a[ has its mirror above
    bool up = has(b.rep.above, signed_to_ground(-sa, n));
    if (up) {
        for (int e : mask_elems(b.rep.below)) {
            int se = ground_to_signed(e, n);
            if (sa < se && se < -sa && !has(b.rep.above, signed_to_ground(-se, n))) {
                up = false;
                break;
            }
        }
    }
    return up ? b.rep : negate_arc(b.rep);
}

bool b_forces(const BArc& x, const BArc& y) {
    if (classify(x) == BClass::overlapped) {
        if (classify(y) != BClass::overlapped) return false;
        return forces(upper_arc(x), upper_arc(y));
    }
    Arc xr = x.rep, xn = negate_arc(x.rep);
    Arc yr = y.rep, yn = negate_arc(y.rep);
    return forces(xr, yr) || forces(xr, yn) || forces(xn, yr) || forces(xn, yn);
}

bool BArcIdeal::contains(const BArc& b) const {
    return std::binary_search(barcs.begin(), barcs.end(), b);
}

BArcIdeal make_b_ideal(int n, std::vector<BArc> barcs) {
    std::sort(barcs.begin(), barcs.end());
    barcs.erase(std::unique(barcs.begin(), barcs.end()), barcs.end());
    BArcIdeal ideal{n, std::move(barcs)};
    auto all = enumerate_b_arcs(n);
    for (const BArc& y : ideal.barcs)
        for (const BArc& x : all)
            if (b_forces(x, y))
                require(ideal.contains(x), "NotAnIdeal", "not closed under B-forcing");
    return ideal;
}

BArcIdeal b_close_upward(const std::vector<BArc>& seed, int n) {
    std::vector<BArc> out;
    for (const BArc& x : enumerate_b_arcs(n))
        for (const BArc& y : seed)
            if (b_forces(x, y)) {
                out.push_back(x);
                break;
            }
    std::sort(out.begin(), out.end());
    return BArcIdeal{n, std::move(out)};
}

BArcIdeal full_b_ideal(int n) { return BArcIdeal{n, enumerate_b_arcs(n)}; }

std::vector<BArc> b_minimal_arcs(const BArcIdeal& ideal) {
    std::vector<BArc> out;
    for (const BArc& x : ideal.barcs) {
        bool minimal = true;
        for (const BArc& y : ideal.barcs)
            if (y != x && b_forces(x, y)) { minimal = false; break; }
        if (minimal) out.push_back(x);
    }
    return out;
}

void for_each_b_ideal(int n, const std::function<void(const BArcIdeal&)>& fn) {
    require(n <= 3, "SizeCap", "B-arc ideal enumeration capped at n = 3");
    auto barcs = enumerate_b_arcs(n);
    int m = int(barcs.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    // forced (poset-small) arcs first; b_forces has no cycles
    std::vector<std::vector<int>> below(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && b_forces(barcs[i], barcs[j])) below[i].push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return below[i].size() > below[j].size(); });
    std::vector<bool> in(m, false);
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int k) {
        if (k == m) {
            std::vector<BArc> sel;
            for (int i : chosen) sel.push_back(barcs[i]);
            std::sort(sel.begin(), sel.end());
            fn(BArcIdeal{n, std::move(sel)});
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

std::vector<BArcIdeal> enumerate_b_ideals(int n) {
    std::vector<BArcIdeal> out;
    for_each_b_ideal(n, [&](const BArcIdeal& ideal) { out.push_back(ideal); });
    return out;
}

BArcIdeal symmetrize_ideal(const ArcIdeal& ideal2n, int n) {
    require(ideal2n.n == 2 * n, "InvalidInput", "ideal not on the [±n] ground");
    std::set<BArc> out;
    for (const Arc& arc : ideal2n.arcs)
        if (centrally_symmetrizable(arc)) out.insert(make_barc(arc, n));
    // Corollary-level guarantee; assert rather than re-close
    return make_b_ideal(n, std::vector<BArc>(out.begin(), out.end()));
}

bool is_symmetrized(const BArcIdeal& ideal) {
    std::vector<Arc> seed;
    for (const BArc& b : ideal.barcs) {
        seed.push_back(b.rep);
        seed.push_back(negate_arc(b.rep));
    }
    ArcIdeal closure = close_upward(seed, 2 * ideal.n);
    return symmetrize_ideal(closure, ideal.n) == ideal;
}

// ---- B permutations ----

Perm b_full_word(const Perm& w) {
    int n = int(w.size());
    Perm full(2 * n);
    for (int i = 0; i < n; ++i) {
        full[n + i] = signed_to_ground(w[i], n);
        full[n - 1 - i] = signed_to_ground(-w[i], n);
    }
    return full;
}

std::optional<Perm> b_signed_from_full(const Perm& word2n) {
    int n = int(word2n.size()) / 2;
    for (int i = 0; i < 2 * n; ++i) {
        int v = ground_to_signed(word2n[i], n);
        int mirror = ground_to_signed(word2n[2 * n - 1 - i], n);
        if (v != -mirror) return std::nullopt;
    }
    Perm w(n);
    for (int i = 0; i < n; ++i) w[i] = ground_to_signed(word2n[n + i], n);
    return w;
}

std::vector<BArc> b_perm_to_diagram(const Perm& w, Color color) {
    int n = int(w.size());
    NoncrossingDiagram d = perm_to_diagram(b_full_word(w), color);
    std::set<BArc> out;
    for (const Arc& arc : d.arcs) out.insert(make_barc(arc, n));
    return std::vector<BArc>(out.begin(), out.end());
}

Perm b_diagram_to_perm(const std::vector<BArc>& diagram, int n, Color color) {
    NoncrossingDiagram d;
    d.n = 2 * n;
    d.color = color;
    std::set<Arc> arcs;
    for (const BArc& b : diagram) {
        arcs.insert(b.rep);
        arcs.insert(negate_arc(b.rep));
    }
    d.arcs.assign(arcs.begin(), arcs.end());
    Perm full = diagram_to_perm(d);
    auto w = b_signed_from_full(full);
    require(w.has_value(), "AsymmetricInverse",
            "type A inverse of the symmetric diagram is not centrally symmetric");
    return *w;
}

Perm barc_to_join_irreducible(const BArc& b) {
    int n = b.nb;
    const Arc& rep = b.rep;
    int sa = ground_to_signed(rep.a, n), sb = ground_to_signed(rep.b, n);
    std::vector<int> A, B;
    for (int e : mask_elems(rep.above)) A.push_back(ground_to_signed(e, n));
    for (int e : mask_elems(rep.below)) B.push_back(ground_to_signed(e, n));
    std::vector<int> w;
    auto push_range = [&](int from, int to) {
        for (int v = from; v <= to; ++v)
            if (v != 0) w.push_back(v);
    };
    BClass cls = classify(b);
    if (cls == BClass::singular) {
        push_range(-n, sa - 1);
        w.insert(w.end(), A.begin(), A.end());
        w.push_back(sb);
        w.push_back(sa);
        w.insert(w.end(), B.begin(), B.end());
        push_range(sb + 1, n);
    } else if (cls == BClass::separated) {
        push_range(-n, -sb - 1);
        for (auto it = B.rbegin(); it != B.rend(); ++it) w.push_back(-*it);
        w.push_back(-sa);
        w.push_back(-sb);
        for (auto it = A.rbegin(); it != A.rend(); ++it) w.push_back(-*it);
        push_range(-sa + 1, sa - 1);
        w.insert(w.end(), A.begin(), A.end());
        w.push_back(sb);
        w.push_back(sa);
        w.insert(w.end(), B.begin(), B.end());
        push_range(sb + 1, n);
    } else if (has(rep.above, signed_to_ground(-sa, n))) {
        // overlapped, representative on top; middle run (-A \ B) u (A \ -B)
        // without the endpoints
        std::set<int> cset;
        std::set<int> bset(B.begin(), B.end());
        for (int x : A)
            if (!bset.count(-x)) {
                cset.insert(-x);
                cset.insert(x);
            }
        cset.erase(sa);
        cset.erase(-sa);
        push_range(-n, -sb - 1);
        for (auto it = B.rbegin(); it != B.rend(); ++it) w.push_back(-*it);
        w.push_back(-sa);
        w.push_back(-sb);
        w.insert(w.end(), cset.begin(), cset.end());
        w.push_back(sb);
        w.push_back(sa);
        w.insert(w.end(), B.begin(), B.end());
        push_range(sb + 1, n);
    } else {
        // overlapped, representative below
        std::vector<int> c, dvec;
        for (int x : B)
            if (std::binary_search(B.begin(), B.end(), -x)) c.push_back(x);
        for (int x : B)
            if (-sa < x && x < sb) dvec.push_back(x);
        push_range(-n, -sb - 1);
        for (auto it = dvec.rbegin(); it != dvec.rend(); ++it) w.push_back(-*it);
        w.insert(w.end(), A.begin(), A.end());
        w.push_back(sb);
        w.push_back(sa);
        w.insert(w.end(), c.begin(), c.end());
        w.push_back(-sa);
        w.push_back(-sb);
        for (auto it = A.rbegin(); it != A.rend(); ++it) w.push_back(-*it);
        w.insert(w.end(), dvec.begin(), dvec.end());
        push_range(sb + 1, n);
    }
    auto signed_word = b_signed_from_full([&] {
        Perm full;
        for (int v : w) full.push_back(signed_to_ground(v, n));
        return full;
    }());
    require(signed_word.has_value(), "Internal", "join irreducible word not symmetric");
    return *signed_word;
}

void for_each_b_cover_down(const Perm& w,
                           const std::function<void(const Perm&, const BArc&)>& fn) {
    int n = int(w.size());
    Perm full = b_full_word(w);
    auto arc_at = [&](int pos) {  // descent between full-word positions pos, pos+1
        int lo = full[pos], hi = full[pos - 1];
        Mask A = 0, B = 0;
        for (int j = 0; j < pos - 1; ++j)
            if (lo < full[j] && full[j] < hi) A |= bit(full[j]);
        for (int j = pos + 1; j < 2 * n; ++j)
            if (lo < full[j] && full[j] < hi) B |= bit(full[j]);
        return Arc{lo, hi, A, B, 2 * n};
    };
    if (w[0] < 0) {
        Perm lower = w;
        lower[0] = -lower[0];
        fn(lower, make_barc(arc_at(n), n));
    }
    for (int i = 1; i < n; ++i)
        if (w[i - 1] > w[i]) {
            Perm lower = w;
            std::swap(lower[i - 1], lower[i]);
            fn(lower, make_barc(arc_at(n + i), n));
        }
}

namespace {
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int u) {
        while (p[u] != u) u = p[u] = p[p[u]];
        return u;
    }
    void unite(int u, int v) {
        u = find(u); v = find(v);
        if (u != v) p[std::max(u, v)] = std::min(u, v);
    }
};
} // namespace

BCongruencePartition b_congruence_classes(const BArcIdeal& ideal) {
    const FanFrame& f = FanFrame::get(Kind::B, ideal.n);
    Dsu uf(f.num_chambers());
    for (int c = 0; c < f.num_chambers(); ++c)
        for_each_b_cover_down(f.chamber(c), [&](const Perm& lower, const BArc& arc) {
            if (!ideal.contains(arc)) uf.unite(c, f.chamber_index(lower));
        });
    BCongruencePartition part;
    part.n = ideal.n;
    part.class_of.resize(f.num_chambers());
    std::map<int, int> id_of;
    for (int c = 0; c < f.num_chambers(); ++c) {
        auto [it, fresh] = id_of.try_emplace(uf.find(c), part.num_classes);
        if (fresh) ++part.num_classes;
        part.class_of[c] = it->second;
    }
    return part;
}

bool b_partitions_agree(const ChamberPartition& cp, const BCongruencePartition& cc) {
    return cp.block_of == cc.class_of;
}

VPolytope rho_b_project(const VPolytope& v2n) {
    require(v2n.kind == Kind::A && v2n.n % 2 == 0, "InvalidInput",
            "expected a type A polytope on [±n] coordinates");
    int n = v2n.n / 2;
    std::vector<Vec> pts;
    for (const Vec& p : v2n.verts) {
        Vec q(n);
        for (int i = 1; i <= n; ++i) q[i - 1] = p[n + i - 1] - p[n - i];
        pts.push_back(std::move(q));
    }
    return hull_of_points(std::move(pts), Kind::B, n);
}

VPolytope b_shard_polytope(const BArc& b) {
    int n = b.nb;
    std::vector<Vec> pts;
    for (const Matching& m : enumerate_matchings(b.rep)) {
        Vec chi = matching_vector(m, 2 * n);
        Vec q(n);
        for (int i = 1; i <= n; ++i) q[i - 1] = chi[n + i - 1] - chi[n - i];
        pts.push_back(std::move(q));
    }
    return hull_of_points(std::move(pts), Kind::B, n);
}

SupportVector b_shard_support(const BArc& b) {
    return support_from_vertices(b_shard_polytope(b));
}

bool b_shard_contains(const BArc& b, const Vec& x) {
    int n = b.nb;
    auto coord = [&](int g) {  // ground [2n] position -> value with x_{-i} = -x_i
        int s = ground_to_signed(g, n);
        return s > 0 ? x[s - 1] : -x[-s - 1];
    };
    const Arc& rep = b.rep;
    if (coord(rep.a) != coord(rep.b)) return false;
    for (int e : mask_elems(rep.above))
        if (coord(rep.a) < coord(e)) return false;
    for (int e : mask_elems(rep.below))
        if (coord(rep.a) > coord(e)) return false;
    return true;
}

SupportVector b_quotientope(const BArcIdeal& ideal) {
    return b_quotientope(ideal, std::vector<Rat>(ideal.barcs.size(), Rat(1)));
}

SupportVector b_quotientope(const BArcIdeal& ideal, const std::vector<Rat>& weights) {
    require(weights.size() == ideal.barcs.size(), "InvalidInput", "one weight per B-arc");
    for (const Rat& w : weights)
        require(w > 0, "NonpositiveWeight", "weights must be positive");
    SupportVector s = zero_support(Kind::B, ideal.n);
    for (size_t i = 0; i < ideal.barcs.size(); ++i)
        s = minkowski_sum(s, scale(b_shard_support(ideal.barcs[i]), weights[i]));
    return s;
}

bool verify_cor131(const BArcIdeal& ideal) {
    return b_partitions_agree(chamber_partition(b_quotientope(ideal)),
                              b_congruence_classes(ideal));
}

bool b_ray_check(const BArcIdeal& ideal, const SignedSet& r) {
    int n = ideal.n;
    require(!r.empty(), "InvalidInput", "nonempty signed subset required");
    std::set<int> rset(r.begin(), r.end());
    auto in_r = [&](int v) { return rset.count(v) > 0; };
    auto in_neg_r = [&](int v) { return rset.count(-v) > 0; };
    // for each signed pair a < b, membership of the responsible B-arc
    for (int sa = -n; sa <= n; ++sa) {
        if (sa == 0) continue;
        for (int sb = sa + 1; sb <= n; ++sb) {
            if (sb == 0) continue;
            std::vector<int> mid;
            for (int v = sa + 1; v < sb; ++v)
                if (v != 0) mid.push_back(v);
            auto build = [&](const std::vector<int>& above) {
                std::vector<int> below;
                std::set<int> aset(above.begin(), above.end());
                for (int v : mid)
                    if (!aset.count(v)) below.push_back(v);
                Arc arc = arc_to_ground(sa, sb, above, below, n);
                if (!centrally_symmetrizable(arc)) return false;
                return ideal.contains(make_barc(arc, n));
            };
            bool need = false, present = true;
            if (in_r(sa) && in_r(sb) && std::none_of(mid.begin(), mid.end(), in_r)) {
                need = true;
                present = build({});
            } else if (in_neg_r(sa) && in_neg_r(sb) &&
                       std::none_of(mid.begin(), mid.end(), in_neg_r)) {
                need = true;
                present = build(mid);
            } else if (!in_r(sa) && !in_neg_r(sa) && !in_r(sb) && !in_neg_r(sb) &&
                       std::all_of(mid.begin(), mid.end(),
                                   [&](int v) { return in_r(v) || in_neg_r(v); })) {
                need = true;
                std::vector<int> above;
                for (int v : mid)
                    if (in_r(v)) above.push_back(v);
                present = build(above);
            }
            if (need && !present) return false;
        }
    }
    return true;
}

BWallReport verify_prop130(const BArc& b) {
    const FanFrame& f = FanFrame::get(Kind::B, b.nb);
    SupportVector s = b_shard_support(b);
    BWallReport rep;
    for (auto [c, d] : f.walls()) {
        bool split = chamber_vertex(s, c) != chamber_vertex(s, d);
        const Perm& wc = f.chamber(c);
        const Perm& wd = f.chamber(d);
        // the upper chamber has the descent at the differing position
        int pos = 0;
        while (wc[pos] == wd[pos]) ++pos;
        const Perm& upper = wc[pos] > wd[pos] ? wc : wd;
        BArc wall_arc{};
        bool found = false;
        for_each_b_cover_down(upper, [&](const Perm& lower, const BArc& arc) {
            if (lower == (wc[pos] > wd[pos] ? wd : wc)) {
                wall_arc = arc;
                found = true;
            }
        });
        require(found, "Internal", "wall without a cover");
        if (split && !b_forces(wall_arc, b)) rep.walls_force = false;
        if (wall_arc == b && !split) rep.shard_present = false;
    }
    return rep;
}

std::vector<BIndecomposabilityRow> b_indecomposability_report(int n) {
    require(n <= 3, "SizeCap", "indecomposability sweep capped at n = 3");
    std::vector<BIndecomposabilityRow> rows;
    for (const BArc& b : enumerate_b_arcs(n))
        rows.push_back({b, summand_space_dim(b_shard_support(b))});
    return rows;
}

std::vector<BCrossing> b_crossings(const BArc& b) {
    int n = b.nb;
    std::vector<int> elems;
    for (int e : mask_elems(b.rep.above | b.rep.below)) elems.push_back(ground_to_signed(e, n));
    std::sort(elems.begin(), elems.end());
    std::vector<BCrossing> out;
    for (size_t i = 0; i + 1 < elems.size(); ++i) {
        bool up1 = has(b.rep.above, signed_to_ground(elems[i], n));
        bool up2 = has(b.rep.above, signed_to_ground(elems[i + 1], n));
        if (up1 != up2) out.push_back({elems[i], elems[i + 1]});
    }
    return out;
}

bool b_quotient_regular(const BArcIdeal& ideal) {
    const FanFrame& f = FanFrame::get(Kind::B, ideal.n);
    auto part = b_congruence_classes(ideal);
    std::set<std::pair<int, int>> edges;
    for (int c = 0; c < f.num_chambers(); ++c)
        for_each_b_cover_down(f.chamber(c), [&](const Perm& lower, const BArc& arc) {
            if (!ideal.contains(arc)) return;
            int cl = part.class_of[f.chamber_index(lower)], ch = part.class_of[c];
            if (cl != ch) edges.insert({std::min(cl, ch), std::max(cl, ch)});
        });
    std::vector<int> deg(part.num_classes, 0);
    for (auto [u, v] : edges) { ++deg[u]; ++deg[v]; }
    return std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end();
}

BRegularityReport b_regularity_experiment(int n) {
    require(n <= 3, "SizeCap", "regularity sweep capped at n = 3");
    auto all = enumerate_b_arcs(n);
    BRegularityReport rep;
    for_each_b_ideal(n, [&](const BArcIdeal& ideal) {
        BRegularityRow row;
        row.ideal = ideal;
        row.regular = b_quotient_regular(ideal);
        std::vector<BArc> comp;
        for (const BArc& b : all)
            if (!ideal.contains(b)) comp.push_back(b);
        std::vector<BArc> maximal;
        for (const BArc& x : comp) {
            bool mx = true;
            for (const BArc& y : comp)
                if (y != x && b_forces(y, x)) { mx = false; break; }
            if (mx) maximal.push_back(x);
        }
        row.cond_i = false;
        row.cond_ii = true;
        for (const BArc& b : maximal) {
            auto cr = b_crossings(b);
            bool singular = classify(b) == BClass::singular;
            if (!singular && !cr.empty()) row.cond_i = true;
            if (singular) {
                for (const auto& c : cr)
                    if (!c.at_origin()) row.cond_ii = false;
            } else if (!cr.empty()) {
                row.cond_ii = false;
            }
        }
        if (row.cond_i && row.regular) ++rep.violations_i;
        if (row.cond_ii && !row.regular) ++rep.violations_ii;
        if (row.regular && !row.cond_ii) ++rep.regular_without_ii;
        if (!row.regular && !row.cond_i) ++rep.irregular_without_i;
        rep.rows.push_back(std::move(row));
    });
    return rep;
}

} // namespace shards
