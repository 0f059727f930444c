#include "forcing/cone.hpp"

namespace forcing {

std::string_view coneErrorName(ConeErrorKind kind)
{
    switch (kind) {
    case ConeErrorKind::WrongArity: return "wrongArity";
    case ConeErrorKind::NotHomogeneous: return "notHomogeneous";
    case ConeErrorKind::NoZPower: return "noZPower";
    case ConeErrorKind::Singular: return "singular";
    }
    return "?";
}

ConeError::ConeError(ConeErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(coneErrorName(kind)) + ": " + detail), kind_(kind)
{
}

bool jacobianCheck(const Polynomial& h, const GroebnerLimits& limits)
{
    std::vector<Polynomial> generators{h};
    for (std::size_t v = 0; v < h.ring()->arity(); ++v)
        generators.push_back(partialDerivative(h, v));
    return vanishesOnlyAtOrigin(generators, limits);
}

ConeSurface buildCone(const Polynomial& h, const GroebnerLimits& limits)
{
    if (h.ring()->arity() != 3)
        throw ConeError(ConeErrorKind::WrongArity, "cone equation must live in a 3-variable ring");
    const auto hd = homogeneousDegree(h);
    if (!hd.degree)
        throw ConeError(ConeErrorKind::NotHomogeneous,
                        hd.zero ? "h is the zero polynomial" : "h = " + h.toString() + " is not homogeneous");
    if (*hd.degree == 0)
        throw ConeError(ConeErrorKind::NotHomogeneous, "h is a nonzero constant");

    const auto r = *hd.degree;
    const Rational c = h.coefficientOf(Monomial::variable(3, 2, static_cast<Monomial::Exponent>(r)));
    if (c.isZero())
        throw ConeError(ConeErrorKind::NoZPower,
                        "coefficient of z^" + std::to_string(r) + " in h is zero; x, y are not homogeneous parameters");
    if (!jacobianCheck(h, limits))
        throw ConeError(ConeErrorKind::Singular, "V(h) is singular away from the vertex; no normality certificate");

    ConeSurface cone{h, r, c, true, 0};
    cone.degHY = hyperplaneDegree(cone);
    return cone;
}

std::uint64_t hyperplaneDegree(const ConeSurface& cone)
{
    return cone.r;
}

} // namespace forcing
