#include "forcing/fermat.hpp"

#include <string>

namespace forcing {

namespace {

// Same ceiling as the polynomial parser.
constexpr long long kMaxExponent = 1LL << 20;

} // namespace

void validateFermat(const FermatInstance& instance)
{
    const auto [r, s] = instance;
    if (r < 4)
        throw FermatBoundsError("r = " + std::to_string(r) + " violates r >= 4");
    if (r > kMaxExponent)
        throw FermatBoundsError("r = " + std::to_string(r) + " exceeds the exponent range");
    if (s < 3 || s >= r)
        throw FermatBoundsError("s = " + std::to_string(s) + " outside 3 <= s < r = " + std::to_string(r));
}

Polynomial fermatPolynomial(long long r)
{
    const auto e = static_cast<Monomial::Exponent>(r);
    const auto ring = xyzRing();
    return Polynomial::variable(ring, 0, e) + Polynomial::variable(ring, 1, e) + Polynomial::variable(ring, 2, e);
}

LoadedProblem fermatProblem(const FermatInstance& instance)
{
    validateFermat(instance);
    const auto ring = xyzRing();
    ConeSurface cone = buildCone(fermatPolynomial(instance.r));
    ForcingDatum datum = makeForcingDatum(Polynomial::variable(ring, 0), Polynomial::variable(ring, 1),
                                          Polynomial::variable(ring, 2, static_cast<Monomial::Exponent>(instance.s)));
    return LoadedProblem{std::move(cone), std::move(datum), {}};
}

std::vector<FermatInstance> enumerateFermat(long long maxR)
{
    if (maxR < 4)
        throw FermatBoundsError("max r = " + std::to_string(maxR) + " violates max r >= 4");
    std::vector<FermatInstance> out;
    for (long long r = 4; r <= maxR; ++r) {
        for (long long s = 3; s < r; ++s)
            out.push_back({r, s});
    }
    return out;
}

} // namespace forcing
