#include "shards/fan.hpp"

#include "shards/error.hpp"

#include <algorithm>
#include <mutex>

namespace shards {

std::vector<Perm> signed_permutations(int n) {
    std::vector<Perm> out;
    Perm base = perm_identity(n);
    do {
        for (int signs = 0; signs < (1 << n); ++signs) {
            Perm w(n);
            for (int i = 0; i < n; ++i) w[i] = (signs >> i & 1) ? -base[i] : base[i];
            out.push_back(w);
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

FanFrame::FanFrame(Kind kind, int n) : kind_(kind), n_(n) {
    if (kind == Kind::A) {
        require(n <= 8, "SizeCap", "type A frame capped at n = 8");
        long nf = factorial(n);
        for (long r = 0; r < nf; ++r) chambers_.push_back(perm_unrank(n, r));
        rays_.resize(full_mask(n));
        for (Mask m = 1; m <= full_mask(n); ++m) rays_[m - 1] = mask_elems(m);
    } else {
        require(n <= 5, "SizeCap", "type B frame capped at n = 5");
        chambers_ = signed_permutations(n);
        for (int code = 1; code < 1 << (2 * n); ++code) {
            SignedSet s;
            bool ok = true;
            for (int i = 1; i <= n; ++i) {
                int lo = code >> (2 * (i - 1)) & 3;
                if (lo == 1) s.push_back(i);
                else if (lo == 2) s.push_back(-i);
                else if (lo == 3) ok = false;
            }
            if (ok && !s.empty()) {
                std::sort(s.begin(), s.end());
                rays_.push_back(s);
            }
        }
        std::sort(rays_.begin(), rays_.end());
        rays_.erase(std::unique(rays_.begin(), rays_.end()), rays_.end());
    }
    for (int c = 0; c < int(chambers_.size()); ++c) chamber_index_[chambers_[c]] = c;
    for (int r = 0; r < int(rays_.size()); ++r) ray_index_[rays_[r]] = r;
    chain_.resize(chambers_.size());
    for (int c = 0; c < int(chambers_.size()); ++c) {
        const Perm& w = chambers_[c];
        chain_[c].resize(n);
        SignedSet tail;
        for (int k = n; k >= 1; --k) {
            tail.push_back(w[k - 1]);
            SignedSet s = tail;
            std::sort(s.begin(), s.end());
            chain_[c][k - 1] = ray_index(s);
        }
    }
    // adjacent chambers: one adjacent swap; type B also the sign flip of the
    // first letter
    for (int c = 0; c < int(chambers_.size()); ++c) {
        const Perm& w = chambers_[c];
        for (int i = 0; i + 1 < n; ++i) {
            Perm v = w;
            std::swap(v[i], v[i + 1]);
            int d = chamber_index(v);
            if (c < d) walls_.push_back({c, d});
        }
        if (kind == Kind::B) {
            Perm v = w;
            v[0] = -v[0];
            int d = chamber_index(v);
            if (c < d) walls_.push_back({c, d});
        }
    }
    std::sort(walls_.begin(), walls_.end());
}

const FanFrame& FanFrame::get(Kind kind, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<FanFrame>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(int(kind), n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<FanFrame>(new FanFrame(kind, n))).first;
    return *it->second;
}

int FanFrame::chamber_index(const Perm& word) const {
    auto it = chamber_index_.find(word);
    require(it != chamber_index_.end(), "Internal", "unknown chamber word");
    return it->second;
}

int FanFrame::ray_index(const SignedSet& s) const {
    auto it = ray_index_.find(s);
    require(it != ray_index_.end(), "Internal", "unknown ray");
    return it->second;
}

int FanFrame::ray_index_mask(Mask m) const {
    require(kind_ == Kind::A, "FrameMismatch", "mask rays are type A only");
    return int(m) - 1;
}

Vec FanFrame::ray_vector(int r) const {
    Vec v(n_, 0);
    for (int e : rays_[r]) {
        if (e > 0) v[e - 1] += 1;
        else v[-e - 1] -= 1;
    }
    return v;
}

Vec FanFrame::chamber_direction(int c) const {
    // t with t ascending along the word: t_{|w_k|} = +-k
    Vec t(n_, 0);
    const Perm& w = chambers_[c];
    for (int k = 1; k <= n_; ++k) {
        int e = w[k - 1];
        if (e > 0) t[e - 1] = k;
        else t[-e - 1] = -k;
    }
    return t;
}

} // namespace shards
