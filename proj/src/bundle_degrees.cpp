#include "forcing/bundle_degrees.hpp"

#include <numeric>
#include <stdexcept>

namespace forcing {

std::vector<long long> twistExponents(long long m, std::span<const long long> degrees)
{
    std::vector<long long> out;
    out.reserve(degrees.size());
    for (long long d : degrees)
        out.push_back(m - d);
    return out;
}

long long detBundleExponent(std::size_t n, std::span<const long long> degrees, long long m)
{
    if (degrees.size() != n)
        throw std::invalid_argument("detBundleExponent: expected " + std::to_string(n) + " degrees, got " +
                                    std::to_string(degrees.size()));
    const long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    return static_cast<long long>(n - 1) * m - sum;
}

BundleDegreeData bundleDegreeData(long long m, std::span<const long long> degrees)
{
    BundleDegreeData out;
    out.n = degrees.size();
    out.degrees.assign(degrees.begin(), degrees.end());
    out.m = m;
    out.twists = twistExponents(m, degrees);
    out.detExponent = detBundleExponent(out.n, degrees, m);
    return out;
}

long long kernelBundleExponentRank2(long long e0, long long d0, long long d1, long long d2)
{
    return e0 + d0 - d1 - d2;
}

long long normalBundleExponent(long long d1, long long d2, long long d0)
{
    return d1 + d2 - d0;
}

long long selfIntersectionNumber(long long d1, long long d2, long long d0, long long degHY)
{
    if (degHY < 1)
        throw std::invalid_argument("deg H_Y must be positive");
    return normalBundleExponent(d1, d2, d0) * degHY;
}

bool checkCorollaryMonomial(long long r, long long d1, long long d2, long long d0)
{
    return d1 >= 1 && d2 >= 1 && d1 + d2 < d0 && d0 < r;
}

} // namespace forcing
