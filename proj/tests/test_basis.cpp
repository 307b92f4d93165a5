#include "doctest.h"

#include "shards/basis.hpp"
#include "shards/error.hpp"
#include "shards/io.hpp"
#include "shards/quotientope.hpp"
#include "shards/shard_polytope.hpp"

#include <random>

using namespace shards;

namespace {
Mask S(std::vector<int> xs) { return mask_of(xs); }

CoeffVector randc(BasisKind basis, int n, std::mt19937& rng) {
    CoeffVector c{basis, n, {}};
    for (Mask m : subsets_ge2(n))
        if (rng() % 2) c.set(m, int(rng() % 7) - 3);
    return c;
}
} // namespace

TEST_CASE("subset arcs and the triangle relation") {
    CHECK(arc_of_subset(S({1, 3, 4}), 4) == Arc{1, 4, S({3}), S({2}), 4});
    CHECK(triangle(S({1, 2, 3}), S({1, 2, 3})));
    CHECK_FALSE(triangle(S({1, 3}), S({2, 4})));
    CHECK(weight(S({1, 2, 3}), S({1, 3})) == 1);
}

TEST_CASE("shard basis polytopes") {
    // caged segment
    SupportVector seg = translated_shard_support(S({2, 3}), 3);
    auto v = vertices_from_support(seg);
    CHECK(v.verts == std::vector<Vec>{Vec{0, 0, 1}, Vec{0, 1, 0}});
    // full-interval subsets give caged simplices
    SupportVector sp = translated_shard_support(S({1, 2, 3}), 3);
    CHECK(sp == simplex_support(S({1, 2, 3}), 3));
}

TEST_CASE("worked conversion instances") {
    // unit shard coefficient at 134
    CoeffVector s{BasisKind::s, 4, {{S({1, 3, 4}), 1}}};
    CoeffVector y = s_to_y(s);
    CHECK(y.at(S({1, 2})) == 1);
    CHECK(y.at(S({1, 3, 4})) == 1);
    CHECK(y.at(S({2, 3, 4})) == 1);
    CHECK(y.at(S({1, 2, 3, 4})) == -1);
    CHECK(y.entries.size() == 4);
    // unit simplex coefficient at 124
    CoeffVector y2{BasisKind::y, 4, {{S({1, 2, 4}), 1}}};
    CoeffVector s2 = y_to_s(y2);
    CHECK(s2.at(S({1, 2, 4})) == 1);
    CHECK(s2.at(S({1, 2, 3, 4})) == 1);
    CHECK(s2.at(S({3, 4})) == -1);
    CHECK(s2.at(S({1, 2, 3})) == -1);
    CHECK(s2.entries.size() == 4);
    // a segment is its own simplex
    CoeffVector sseg{BasisKind::s, 4, {{S({2, 3}), 1}}};
    CHECK(s_to_y(sseg).entries == std::map<Mask, Rat>{{S({2, 3}), 1}});
    // z of the height example
    CoeffVector s3{BasisKind::s, 4, {}};
    CHECK(height_multiplicity(S({2, 4}), S({2, 3, 4})) == 2);
    CHECK(height_multiplicity(S({1, 4}), S({2, 3, 4})) == 2);
    CHECK(height_multiplicity(S({1, 2, 4}), S({2, 3, 4})) == 1);
    CHECK(height_multiplicity(S({1, 2}), S({2, 3, 4})) == 0);
    // z_to_s display
    CoeffVector z{BasisKind::z, 4, {}};
    for (Mask m : subsets_ge2(4)) z.set(m, 0);
    z.set(S({2, 3, 4}), 1);
    CoeffVector sz = z_to_s(z);
    CHECK(sz.at(S({2, 3, 4})) == 1);
    z = CoeffVector{BasisKind::z, 4, {{S({1, 3}), 1}}};
    CHECK(z_to_s(z).at(S({2, 3, 4})) == 1);
}

TEST_CASE("conversion roundtrips and commutation") {
    std::mt19937 rng(17);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < (n <= 5 ? 8 : 2); ++trial) {
            CoeffVector s = randc(BasisKind::s, n, rng);
            CoeffVector y = s_to_y(s);
            CHECK(y_to_s(y).entries == s.entries);
            CoeffVector z1 = s_to_z(s);
            CoeffVector z2 = y_to_z(y);
            CHECK(z1.entries == z2.entries);
            CHECK(z_to_s(z1).entries == s.entries);
            CHECK(z_to_y(z2).entries == y.entries);
            CoeffVector yy = randc(BasisKind::y, n, rng);
            CHECK(z_to_y(y_to_z(yy)).entries == yy.entries);
        }
}

TEST_CASE("matrices") {
    auto msy = build_matrix(MatrixKind::s_of_y, 3);
    std::vector<Vec> expect = {{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    CHECK(msy == expect);
    auto mzs = build_matrix(MatrixKind::z_of_s, 3);
    std::vector<Vec> expect_z = {{1, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 1, 2}, {0, 0, 0, 1}};
    CHECK(mzs == expect_z);
    for (int n = 2; n <= 5; ++n) {
        int m = int(subsets_ge2(n).size());
        CHECK(matrix_multiply(build_matrix(MatrixKind::s_of_y, n),
                              build_matrix(MatrixKind::y_of_s, n)) == matrix_identity(m));
        CHECK(matrix_multiply(build_matrix(MatrixKind::s_of_z, n),
                              build_matrix(MatrixKind::z_of_s, n)) == matrix_identity(m));
    }
    // minimal polynomial of the height-of-shards matrix at n = 4:
    // (x-1)^7 (x^2-3x+1) (x^2-x+1)
    auto m4 = build_matrix(MatrixKind::z_of_s, 4);
    Vec got = minimal_polynomial(m4);
    // expand the product exactly
    Vec p{1};
    auto mul = [](const Vec& a, const Vec& b) {
        Vec c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
        return c;
    };
    for (int k = 0; k < 7; ++k) p = mul(p, Vec{-1, 1});
    p = mul(p, Vec{1, -3, 1});
    p = mul(p, Vec{1, -1, 1});
    CHECK(got == p);
}

TEST_CASE("perm decomposition") {
    // hull of permutations of (1..n), caged, in the shard basis
    for (int n = 3; n <= 5; ++n) {
        std::vector<Vec> pts;
        for (long r = 0; r < factorial(n); ++r) {
            Perm p = perm_unrank(n, r);
            Vec v(n);
            for (int i = 0; i < n; ++i) v[p[i] - 1] = i + 1;
            pts.push_back(std::move(v));
        }
        SupportVector perm = support_from_points(pts, Kind::A, n);
        CoeffVector s = decompose(perm, BasisKind::s);
        bool has_negative = false;
        for (Mask m : subsets_ge2(n)) {
            Rat expect = (min_elem(m) - 2) * (n - max_elem(m) - 1);
            CHECK(s.at(m) == expect);
            if (expect < 0) has_negative = true;
        }
        CHECK(has_negative == (n >= 4));
        // all-pairs simplices give the permutahedron
        CoeffVector y{BasisKind::y, n, {}};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) y.set(S({i, j}), 1);
        CHECK(y_to_s(y).entries == s.entries);
    }
}

TEST_CASE("realize and decompose") {
    // the two-shard decomposition of the caged permutahedron at n = 3
    CoeffVector s{BasisKind::s, 3, {{S({1, 2, 3}), 1}, {S({1, 3}), 1}}};
    Realization r = realize(s);
    REQUIRE_FALSE(r.virtual_element);
    auto v = vertices_from_support(*r.support);
    CHECK(v.verts.size() == 6);
    CHECK(caged_translate(v) == v);
    std::multiset<Rat> coords(v.verts[0].begin(), v.verts[0].end());
    CHECK(coords == std::multiset<Rat>{0, 1, 2});
    // negative weight on a forcing-minimal subset is virtual
    CoeffVector bad{BasisKind::s, 3, {{S({1, 3}), -1}}};
    CHECK(realize(bad).virtual_element);
    // zero coefficients realize a point
    CoeffVector zero{BasisKind::s, 3, {}};
    Realization rz = realize(zero);
    REQUIRE_FALSE(rz.virtual_element);
    CHECK(vertices_from_support(*rz.support).verts == std::vector<Vec>{Vec(3, 0)});
    // basis elements decompose to units
    for (int n = 2; n <= 4; ++n)
        for (Mask m : subsets_ge2(n)) {
            CoeffVector unit =
                decompose(translated_shard_support(m, n), BasisKind::s);
            CHECK(unit.entries == std::map<Mask, Rat>{{m, 1}});
        }
    // loday decomposes with all-ones on the sylvester ideal
    for (int n = 3; n <= 5; ++n) {
        CoeffVector ds = decompose(quotientope(sylvester_ideal(n)), BasisKind::s);
        for (Mask m : subsets_ge2(n)) {
            auto e = mask_elems(m);
            bool interval = e.back() - e.front() + 1 == int(e.size());
            CHECK(ds.at(m) == (interval ? 1 : 0));
        }
    }
    // an uncaged polytope is rejected without auto-caging
    SupportVector seg = support_from_points({Vec{0, 0}, Vec{1, -1}}, Kind::A, 2);
    CHECK_THROWS_AS(decompose(seg, BasisKind::s, false), error);
    CHECK(decompose(seg, BasisKind::s, true).entries ==
          std::map<Mask, Rat>{{S({1, 2}), 1}});
    // non-submodular input is rejected
    SupportVector bad_s = support_from_points({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}},
                                              Kind::A, 3);
    bad_s.s[FanFrame::get(Kind::A, 3).ray_index_mask(S({1, 2}))] += 3;
    CHECK_THROWS_AS(decompose(bad_s, BasisKind::s), error);
}

TEST_CASE("decomposition stays inside the ideal") {
    for (int n = 2; n <= 4; ++n)
        for (const ArcIdeal& ideal : enumerate_arc_ideals(n)) {
            if (ideal.arcs.empty()) continue;
            CoeffVector s = decompose(quotientope(ideal), BasisKind::s);
            std::set<Mask> allowed;
            for (const Arc& a : ideal.arcs) allowed.insert(bit(a.a) | bit(a.b) | a.above);
            for (const auto& [m, val] : s.entries) {
                CHECK(allowed.count(m));
                CHECK(val > 0);
            }
        }
}

TEST_CASE("basis rank") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Vec> rows;
        for (Mask m : subsets_ge2(n)) rows.push_back(translated_shard_support(m, n).s);
        CHECK(rank_of(rows) == (1 << n) - n - 1);
    }
}

TEST_CASE("cambrian simplex coefficients") {
    // all-ones shard weights on a Cambrian ideal expand with the product rule
    for (int n = 3; n <= 5; ++n)
        for (const Arc& a : enumerate_arcs(n)) {
            auto ideal = cambrian_ideal(a);
            CoeffVector s{BasisKind::s, n, {}};
            for (const Arc& x : ideal.arcs) s.set(bit(x.a) | bit(x.b) | x.above, 1);
            CoeffVector y = s_to_y(s);
            for (Mask j : subsets_ge2(n)) {
                Rat yj = y.at(j);
                Mask span = interval_closed(a.a, a.b);
                if ((j & ~span) != 0) {
                    CHECK(yj == 0);
                    continue;
                }
                int lo = min_elem(j), hi = max_elem(j);
                Mask inner = interval_open(lo, hi);
                if ((a.above & inner & ~j) != 0) {
                    CHECK(yj == 0);
                    continue;
                }
                int w = popcount(j & ~((bit(lo) | bit(hi)) | a.above));
                Rat sign = (w % 2) ? -1 : 1;
                bool lo_in = has(a.above, lo), hi_in = has(a.above, hi);
                Rat expect = sign;
                if (!hi_in) expect *= a.b - hi + 1;
                if (!lo_in) expect *= lo - a.a + 1;
                CHECK(yj == expect);
            }
        }
}

TEST_CASE("coefficient json") {
    CoeffVector c{BasisKind::s, 4, {{S({1, 3, 4}), 1}}};
    std::string j = coeffs_to_json(c);
    CHECK(j.find("\"1,3,4\"") != std::string::npos);
    CHECK(coeffs_from_json(j) == c);
}
