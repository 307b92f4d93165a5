#pragma once

#include <cstdint>
#include <vector>

namespace shards {

// Subsets of [n] = {1..n} as bitmasks, bit i-1 <-> element i.
using Mask = uint32_t;

inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }
inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline Mask bit(int i) { return Mask(1) << (i - 1); }
inline int popcount(Mask m) { return __builtin_popcount(m); }

// open interval ]a,b[ as a mask
inline Mask interval_open(int a, int b) {
    if (b - a <= 1) return 0;
    return ((Mask(1) << (b - 1)) - 1) & ~((Mask(1) << a) - 1);
}
// closed interval [a,b]
inline Mask interval_closed(int a, int b) {
    return ((Mask(1) << b) - 1) & ~((Mask(1) << (a - 1)) - 1);
}

inline int min_elem(Mask m) { return __builtin_ctz(m) + 1; }
inline int max_elem(Mask m) { return 31 - __builtin_clz(m) + 1; }

std::vector<int> mask_elems(Mask m);
Mask mask_of(const std::vector<int>& elems);

// subsets of size >= 2, in the canonical serialization order:
// sort by (max-min, -|I|, elements lexicographically)
std::vector<Mask> subsets_ge2(int n);
std::vector<Mask> subsets_ge2_canonical(int n);

} // namespace shards
