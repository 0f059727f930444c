#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "forcing/polynomial.hpp"

namespace forcing {

// Thrown when a Buchberger run exceeds its configured caps.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GroebnerLimits {
    std::uint64_t maxDegree = 60;
    std::size_t maxBasisSize = 5000;
};

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;
};

struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    std::vector<Polynomial> elements;
    bool reduced = false;
    // When tracked: elements[i] = sum_j cofactors[i][j] * generators[j].
    std::optional<std::vector<std::vector<Polynomial>>> cofactors;

    // True when the basis generates the unit ideal.
    bool isUnit() const { return elements.size() == 1 && elements.front().isConstant(); }
};

struct MembershipResult {
    bool member = false;
    // f = sum_j certificate[j] * generators[j], emitted on request when member.
    std::optional<std::vector<Polynomial>> certificate;
};

// Multivariate division. The remainder has no term divisible by any divisor's
// leading monomial and f = sum quotients[i] * divisors[i] + remainder.
// Throws RingMismatch, or std::invalid_argument for a zero divisor.
DivisionResult normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors,
                          MonomialOrder order = MonomialOrder::GradedReverseLex);

// S-polynomial of the monic normalizations:
//   (L / lm f) * f / lc f - (L / lm g) * g / lc g,  L = lcm(lm f, lm g).
// Throws std::invalid_argument on a zero input.
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       MonomialOrder order = MonomialOrder::GradedReverseLex);

// Reduced Groebner basis (monic, sorted by descending leading monomial).
// Zero generators are ignored; an empty list gives the empty basis.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         MonomialOrder order = MonomialOrder::GradedReverseLex,
                         const GroebnerLimits& limits = {}, bool trackCofactors = false);

// Buchberger criterion: every S-pair reduces to zero modulo the elements.
bool isGroebnerBasis(const std::vector<Polynomial>& elements, MonomialOrder order);

MembershipResult idealMembership(const Polynomial& f, const std::vector<Polynomial>& generators,
                                 MonomialOrder order = MonomialOrder::GradedReverseLex,
                                 bool wantCertificate = false, const GroebnerLimits& limits = {});

// g vanishes on V(generators): 1 in (generators, 1 - t*g) for a fresh variable t.
bool radicalMembership(const Polynomial& g, const std::vector<Polynomial>& generators,
                       const GroebnerLimits& limits = {});

// The common zero locus of the generators is at most the origin:
// every ring variable lies in the radical.
bool vanishesOnlyAtOrigin(const std::vector<Polynomial>& generators,
                          const GroebnerLimits& limits = {});

} // namespace forcing
