#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace shards {

// Exact rational scalar. All geometry in this library is exact; there are no
// tolerances and no floating point anywhere in the core.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using Vec = std::vector<Rat>;

// Serialized as "p" when integral, "p/q" otherwise.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

inline Rat dot(const Vec& a, const Vec& b) {
    Rat r = 0;
    for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

} // namespace shards
