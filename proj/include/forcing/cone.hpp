#pragma once

#include <stdexcept>
#include <string>

#include "forcing/groebner.hpp"
#include "forcing/polynomial.hpp"

namespace forcing {

enum class ConeErrorKind { WrongArity, NotHomogeneous, NoZPower, Singular };

std::string_view coneErrorName(ConeErrorKind kind);

class ConeError : public std::runtime_error {
public:
    ConeError(ConeErrorKind kind, const std::string& detail);
    ConeErrorKind kind() const { return kind_; }

private:
    ConeErrorKind kind_;
};

// Affine cone X = V(h) in C^3 over the plane curve Y = V(h) in P^2, with
// vertex P at the origin. Only buildCone produces validated instances.
struct ConeSurface {
    Polynomial h;
    std::uint64_t r = 0;
    Rational zLeadCoefficient;
    bool smoothAwayFromVertex = false;
    std::uint64_t degHY = 0;
};

// Validates h: homogeneous of degree r >= 1 in (x, y, z), containing c*z^r
// with c != 0, and with singular locus at most the vertex.
ConeSurface buildCone(const Polynomial& h, const GroebnerLimits& limits = {});

// h and its three partials vanish simultaneously only at the origin. An
// isolated hypersurface singularity is normal, and Y is then smooth.
bool jacobianCheck(const Polynomial& h, const GroebnerLimits& limits = {});

// deg H_Y for a plane curve of degree r: a generic line meets Y in r points.
std::uint64_t hyperplaneDegree(const ConeSurface& cone);

} // namespace forcing
