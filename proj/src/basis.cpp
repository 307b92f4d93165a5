#include "shards/basis.hpp"

#include "shards/error.hpp"
#include "shards/shard_polytope.hpp"

#include <algorithm>

namespace shards {

Arc arc_of_subset(Mask i, int n) {
    require(popcount(i) >= 2, "InvalidInput", "subset of size >= 2 required");
    int a = min_elem(i), b = max_elem(i);
    Mask mid = interval_open(a, b);
    return Arc{a, b, Mask(mid & i), Mask(mid & ~i), n};
}

bool triangle(Mask i, Mask j) {
    int lo = min_elem(i), hi = max_elem(i);
    Mask d = interval_open(lo, hi) ^ i;
    Mask jends = bit(min_elem(j)) | bit(max_elem(j));
    if ((jends & ~d) != 0) return false;
    Mask jmid = interval_open(min_elem(j), max_elem(j));
    return (jmid & i & ~j) == 0;
}

int weight(Mask j, Mask i) {
    Mask jends = bit(min_elem(j)) | bit(max_elem(j));
    return popcount(j & ~(jends | i));
}

SupportVector translated_shard_support(Mask i, int n) {
    Arc arc = arc_of_subset(i, n);
    Vec t(n, 0);
    for (int e : mask_elems(arc.below)) t[e - 1] = 1;
    t[arc.b - 1] = 1;
    return translate(shard_support(arc), t);
}

SupportVector simplex_support(Mask j, int n) {
    std::vector<Vec> pts;
    for (int e : mask_elems(j)) {
        Vec p(n, 0);
        p[e - 1] = 1;
        pts.push_back(std::move(p));
    }
    return support_from_points(pts, Kind::A, n);
}

CoeffVector s_to_y(const CoeffVector& s) {
    require(s.basis == BasisKind::s, "InvalidInput", "expected s coordinates");
    CoeffVector y{BasisKind::y, s.n, {}};
    for (Mask j : subsets_ge2(s.n)) {
        Rat v = 0;
        for (const auto& [i, si] : s.entries)
            if (triangle(i, j)) v += (weight(j, i) % 2 ? -1 : 1) * si;
        y.set(j, v);
    }
    return y;
}

CoeffVector y_to_s(const CoeffVector& y) {
    require(y.basis == BasisKind::y, "InvalidInput", "expected y coordinates");
    CoeffVector s{BasisKind::s, y.n, {}};
    for (Mask i : subsets_ge2(y.n)) {
        Mask iends = bit(min_elem(i)) | bit(max_elem(i));
        Rat v = 0;
        for (const auto& [j, yj] : y.entries)
            if (triangle(j, i)) {
                int sign = popcount(iends & (bit(min_elem(j)) | bit(max_elem(j))));
                v += (sign % 2 ? -1 : 1) * yj;
            }
        s.set(i, v);
    }
    return s;
}

CoeffVector y_to_z(const CoeffVector& y) {
    require(y.basis == BasisKind::y, "InvalidInput", "expected y coordinates");
    CoeffVector z{BasisKind::z, y.n, {}};
    for (Mask r : subsets_ge2(y.n)) {
        Rat v = 0;
        for (const auto& [j, yj] : y.entries)
            if ((j & ~r) == 0) v += yj;
        z.set(r, v);
    }
    return z;
}

CoeffVector z_to_y(const CoeffVector& z) {
    require(z.basis == BasisKind::z, "InvalidInput", "expected z coordinates");
    CoeffVector y{BasisKind::y, z.n, {}};
    for (Mask j : subsets_ge2(z.n)) {
        Rat v = 0;
        for (const auto& [r, zr] : z.entries)
            if ((r & ~j) == 0) v += (popcount(j & ~r) % 2 ? -1 : 1) * zr;
        y.set(j, v);
    }
    return y;
}

long height_multiplicity(Mask i, Mask r) {
    int lo = min_elem(i), hi = max_elem(i);
    Mask d = interval_open(lo, hi) ^ i;
    long cnt = 0;
    auto elems = mask_elems(r);
    for (size_t p = 0; p < elems.size(); ++p)
        for (size_t q = p + 1; q < elems.size(); ++q) {
            int x = elems[p], y = elems[q];
            if (!has(d, x) || !has(d, y)) continue;
            Mask between = interval_open(x, y);
            if ((between & i) == (between & r)) ++cnt;
        }
    return cnt;
}

CoeffVector s_to_z(const CoeffVector& s) {
    require(s.basis == BasisKind::s, "InvalidInput", "expected s coordinates");
    CoeffVector z{BasisKind::z, s.n, {}};
    for (Mask r : subsets_ge2(s.n)) {
        Rat v = 0;
        for (const auto& [i, si] : s.entries) v += height_multiplicity(i, r) * si;
        z.set(r, v);
    }
    return z;
}

CoeffVector z_to_s(const CoeffVector& z) {
    require(z.basis == BasisKind::z, "InvalidInput", "expected z coordinates");
    CoeffVector s{BasisKind::s, z.n, {}};
    int n = z.n;
    auto zv = [&](Mask m) { return popcount(m) >= 2 ? z.at(m) : Rat(0); };
    for (Mask i : subsets_ge2(n)) {
        Mask left = interval_closed(1, min_elem(i));
        Mask right = interval_closed(max_elem(i), n);
        s.set(i, zv(i) - zv(i ^ left) - zv(i ^ right) + zv(Mask(i ^ (left | right))));
    }
    return s;
}

std::vector<Vec> build_matrix(MatrixKind which, int n) {
    require(n <= 6, "SizeCap", "conversion matrices capped at n = 6");
    auto keys = subsets_ge2_canonical(n);
    int m = int(keys.size());
    auto convert = [&](const CoeffVector& unit) {
        switch (which) {
            case MatrixKind::y_of_s: return s_to_y(unit);
            case MatrixKind::s_of_y: return y_to_s(unit);
            case MatrixKind::z_of_s: return s_to_z(unit);
            case MatrixKind::s_of_z: return z_to_s(unit);
            case MatrixKind::z_of_y: return y_to_z(unit);
            case MatrixKind::y_of_z: return z_to_y(unit);
        }
        fail("Internal", "unknown matrix kind");
    };
    BasisKind from;
    switch (which) {
        case MatrixKind::y_of_s:
        case MatrixKind::z_of_s: from = BasisKind::s; break;
        case MatrixKind::s_of_y:
        case MatrixKind::z_of_y: from = BasisKind::y; break;
        default: from = BasisKind::z; break;
    }
    std::vector<Vec> out(m, Vec(m, 0));
    for (int col = 0; col < m; ++col) {
        CoeffVector unit{from, n, {{keys[col], Rat(1)}}};
        CoeffVector img = convert(unit);
        for (int row = 0; row < m; ++row) out[row][col] = img.at(keys[row]);
    }
    return out;
}

std::vector<Vec> matrix_multiply(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    int n = int(a.size()), k = int(b.size()), m = int(b[0].size());
    std::vector<Vec> c(n, Vec(m, 0));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

std::vector<Vec> matrix_identity(int n) {
    std::vector<Vec> id(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

Vec minimal_polynomial(const std::vector<Vec>& m) {
    int n = int(m.size());
    // stack powers of m as vectors until dependent; coefficients of the
    // dependence give the monic minimal polynomial
    std::vector<Vec> pow = matrix_identity(n);
    std::vector<Vec> flat;           // rows: vectorized powers
    std::vector<Vec> reduced;        // row-reduced copies
    std::vector<Vec> combos;         // expression of each reduced row in powers
    for (int deg = 0;; ++deg) {
        Vec row(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) row[i * n + j] = pow[i][j];
        Vec combo(deg + 1, 0);
        combo[deg] = 1;
        // reduce against previous rows
        Vec r = row;
        for (size_t p = 0; p < reduced.size(); ++p) {
            int lead = -1;
            for (int j = 0; j < n * n; ++j)
                if (reduced[p][j] != 0) { lead = j; break; }
            if (r[lead] != 0) {
                Rat fac = r[lead] / reduced[p][lead];
                for (int j = 0; j < n * n; ++j) r[j] -= fac * reduced[p][j];
                for (size_t q = 0; q < combos[p].size(); ++q) combo[q] -= fac * combos[p][q];
            }
        }
        bool zero = std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
        if (zero) {
            // monic: divide by the leading coefficient (it is 1 by construction)
            return combo;
        }
        reduced.push_back(std::move(r));
        combos.push_back(std::move(combo));
        pow = matrix_multiply(pow, m);
    }
}

Realization realize(const CoeffVector& coeffs) {
    CoeffVector z;
    switch (coeffs.basis) {
        case BasisKind::s: z = s_to_z(coeffs); break;
        case BasisKind::y: z = y_to_z(coeffs); break;
        case BasisKind::z: z = coeffs; break;
    }
    Realization out;
    out.z = z;
    std::map<Mask, Rat> zm;
    for (const auto& [k, v] : z.entries) zm[k] = v;
    SupportVector s = support_from_inner(zm, z.n);
    if (is_deformed_permutahedron(s) && is_tight(s)) out.support = s;
    else out.virtual_element = true;
    return out;
}

CoeffVector decompose(const SupportVector& s, BasisKind target, bool auto_cage) {
    require(s.frame->kind() == Kind::A, "FrameMismatch", "decompose is a type A operation");
    require(is_deformed_permutahedron(s), "NotDeformedPermutahedron",
            "support is not submodular");
    int n = s.frame->n();
    SupportVector caged = s;
    VPolytope v = vertices_from_support(s);
    Vec cage = caging_vector(v);
    bool is_caged = std::all_of(cage.begin(), cage.end(), [](const Rat& x) { return x == 0; });
    if (!is_caged) {
        require(auto_cage, "NotCaged", "polytope does not touch the coordinate hyperplanes");
        caged = translate(s, cage);
    }
    auto zm = support_convert_to_inner(caged);
    CoeffVector z{BasisKind::z, n, {}};
    for (Mask r : subsets_ge2(n)) z.set(r, zm.at(r));
    switch (target) {
        case BasisKind::s: return z_to_s(z);
        case BasisKind::y: return z_to_y(z);
        case BasisKind::z: return z;
    }
    fail("Internal", "unknown basis");
}

CoeffVector decompose(const VPolytope& v, BasisKind target, bool auto_cage) {
    return decompose(support_from_vertices(v), target, auto_cage);
}

} // namespace shards
