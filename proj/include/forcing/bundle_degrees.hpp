#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Degree bookkeeping for the bundles attached to homogeneous f_1, ..., f_n on
// a cone over Y. Line bundles are powers H_Y^k of the hyperplane bundle and
// are identified with their exponent k.
namespace forcing {

struct BundleDegreeData {
    std::size_t n = 0;
    std::vector<long long> degrees;
    long long m = 0;
    std::vector<long long> twists;
    long long detExponent = 0;
};

// e_i = m - d_i, so that d_i + e_i = m for every i.
std::vector<long long> twistExponents(long long m, std::span<const long long> degrees);

// k with Det V_m = H_Y^k: k = sum e_i - m = (n - 1) m - sum d_i.
// Throws std::invalid_argument when degrees.size() != n.
long long detBundleExponent(std::size_t n, std::span<const long long> degrees, long long m);

BundleDegreeData bundleDegreeData(long long m, std::span<const long long> degrees);

// Rank-one kernel V_m = H_Y^(e0 + d0 - d1 - d2) for n = 2.
long long kernelBundleExponentRank2(long long e0, long long d0, long long d1, long long d2);

// Normal bundle H_Y^(d1 + d2 - d0) of the section P(V) in the ruled surface
// P(V'), taken with e0 = 0.
long long normalBundleExponent(long long d1, long long d2, long long d0);

// (d1 + d2 - d0) * deg H_Y. Throws std::invalid_argument for degHY < 1.
long long selfIntersectionNumber(long long d1, long long d2, long long d0, long long degHY);

// Degree window for monomial data x^d1, y^d2, z^d0 on a cone of degree r:
// d1, d2 >= 1 and d1 + d2 < d0 < r.
bool checkCorollaryMonomial(long long r, long long d1, long long d2, long long d0);

} // namespace forcing
