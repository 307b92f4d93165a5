#include "shards/shard_volume.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <functional>

namespace shards {

bool dragon_marriage(const std::vector<Mask>& sets, int n) {
    (void)n;
    int m = int(sets.size());
    for (int pick = 1; pick < (1 << m); ++pick) {
        Mask u = 0;
        for (int i = 0; i < m; ++i)
            if (pick >> i & 1) u |= sets[i];
        if (popcount(u) < popcount(Mask(pick)) + 1) return false;
    }
    return true;
}

namespace {

bool has_sdr(const std::vector<Mask>& sets, Mask avoid) {
    // bipartite matching sets -> points, greedy augmenting paths
    int m = int(sets.size());
    std::vector<int> owner(32, -1);
    std::function<bool(int, Mask&)> augment = [&](int i, Mask& visited) {
        for (Mask t = sets[i] & ~avoid; t; t &= t - 1) {
            int p = __builtin_ctz(t);
            if (visited >> p & 1) continue;
            visited |= Mask(1) << p;
            if (owner[p] < 0 || augment(owner[p], visited)) {
                owner[p] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < m; ++i) {
        Mask visited = 0;
        if (!augment(i, visited)) return false;
    }
    return true;
}

} // namespace

bool dragon_marriage_sdr(const std::vector<Mask>& sets, int n) {
    for (int j = 1; j <= n; ++j)
        if (!has_sdr(sets, bit(j))) return false;
    return true;
}

bool dragon_marriage_tree(const std::vector<Mask>& sets, int n) {
    int m = int(sets.size());
    std::vector<std::vector<std::pair<int, int>>> pairs(m);
    for (int i = 0; i < m; ++i) {
        auto e = mask_elems(sets[i]);
        for (size_t p = 0; p < e.size(); ++p)
            for (size_t q = p + 1; q < e.size(); ++q) pairs[i].push_back({e[p], e[q]});
        if (pairs[i].empty()) return false;
    }
    std::vector<int> parent(n + 1);
    std::function<int(int)> find = [&](int u) {
        while (parent[u] != u) u = parent[u] = parent[parent[u]];
        return u;
    };
    std::function<bool(int)> rec = [&](int i) {
        if (i == m) return true;
        for (auto [u, v] : pairs[i]) {
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;
            std::vector<int> saved = parent;
            parent[std::max(ru, rv)] = std::min(ru, rv);
            if (rec(i + 1)) return true;
            parent = saved;
        }
        return false;
    };
    for (int v = 0; v <= n; ++v) parent[v] = v;
    // m = n-1 edges joining all n points = a spanning tree
    return m == n - 1 && rec(0);
}

Rat simplex_mixed_volume(const std::vector<Mask>& sets, int n) {
    require(int(sets.size()) == n - 1, "InvalidInput", "expected n-1 subsets");
    return dragon_marriage(sets, n) ? Rat(1) / factorial(n - 1) : Rat(0);
}

Rat shard_mixed_volume(const std::vector<Arc>& arcs) {
    require(!arcs.empty(), "InvalidInput", "no arcs given");
    int n = arcs[0].n;
    require(int(arcs.size()) == n - 1, "InvalidInput", "expected n-1 arcs");
    for (const Arc& arc : arcs) {
        validate_arc(arc);
        require(arc.n == n, "InvalidInput", "mixed ambient sizes");
    }
    // admissible subsets per arc with their signs
    std::vector<std::vector<std::pair<Mask, int>>> adm(n - 1);
    auto subs = subsets_ge2(n);
    for (int i = 0; i < n - 1; ++i) {
        Mask host = bit(arcs[i].a) | bit(arcs[i].b) | arcs[i].above;
        int lo = min_elem(host), hi = max_elem(host);
        Mask d = interval_open(lo, hi) ^ host;
        for (Mask j : subs) {
            Mask jends = bit(min_elem(j)) | bit(max_elem(j));
            if ((jends & ~d) != 0) continue;
            Mask jmid = interval_open(min_elem(j), max_elem(j));
            if ((jmid & host & ~j) != 0) continue;
            int w = popcount(j & ~(jends | host));
            adm[i].push_back({j, w % 2 ? -1 : 1});
        }
    }
    long total = 0;
    // prefix unions over all index subfamilies let the Hall condition prune
    // the search: unions[mask] = union of the chosen J's in the subfamily
    std::vector<Mask> unions(1 << (n - 1), 0);
    std::function<void(int, int)> rec = [&](int i, int sign) {
        if (i == n - 1) {
            total += sign;
            return;
        }
        for (auto [j, sg] : adm[i]) {
            bool ok = true;
            for (int sub = 0; sub < (1 << i) && ok; ++sub) {
                Mask u = unions[sub] | j;
                unions[sub | (1 << i)] = u;
                if (popcount(u) < popcount(Mask(sub)) + 2) ok = false;
            }
            if (ok) rec(i + 1, sign * sg);
        }
    };
    rec(0, 1);
    return Rat(total) / factorial(n - 1);
}

Rat shard_volume(const Arc& arc) {
    validate_arc(arc);
    if (arc.b - arc.a != arc.n - 1) return 0;
    return shard_mixed_volume(std::vector<Arc>(arc.n - 1, arc));
}

} // namespace shards
