#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "forcing/monomial.hpp"
#include "forcing/rational.hpp"

namespace forcing {

class RingMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Polynomial ring Q[v_1, ..., v_n]. Rings compare by their variable names.
class Ring {
public:
    explicit Ring(std::vector<std::string> variables);

    std::size_t arity() const { return vars_.size(); }
    const std::string& name(std::size_t i) const { return vars_[i]; }
    const std::vector<std::string>& variables() const { return vars_; }

    // Same variables plus one fresh variable appended; the name avoids collisions.
    std::shared_ptr<const Ring> withFreshVariable(const std::string& hint) const;

    friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

// The ambient ring Q[x, y, z] of every cone computation.
RingPtr xyzRing();

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
};

struct HomogeneousDegree {
    std::optional<std::uint64_t> degree;
    bool zero = false;
};

// Sparse polynomial in canonical form: no zero coefficients, distinct
// monomials, terms strictly descending in the polynomial's order.
// Values are immutable once built.
class Polynomial {
public:
    Polynomial(RingPtr ring, MonomialOrder order = MonomialOrder::GradedReverseLex);
    Polynomial(RingPtr ring, std::vector<Term> terms,
               MonomialOrder order = MonomialOrder::GradedReverseLex);

    static Polynomial constant(RingPtr ring, const Rational& c,
                               MonomialOrder order = MonomialOrder::GradedReverseLex);
    static Polynomial variable(RingPtr ring, std::size_t index, Monomial::Exponent power = 1,
                               MonomialOrder order = MonomialOrder::GradedReverseLex);
    static Polynomial monomial(RingPtr ring, const Rational& c, const Monomial& m,
                               MonomialOrder order = MonomialOrder::GradedReverseLex);

    const RingPtr& ring() const { return ring_; }
    MonomialOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }

    // Leading data; precondition: nonzero.
    const Term& leadingTerm() const;
    const Monomial& leadingMonomial() const { return leadingTerm().mono; }
    const Rational& leadingCoefficient() const { return leadingTerm().coeff; }

    Rational coefficientOf(const Monomial& m) const;
    // Maximum total degree; -1 for the zero polynomial.
    long long totalDegree() const;
    // Highest exponent of one variable; 0 for the zero polynomial.
    Monomial::Exponent degreeIn(std::size_t var) const;

    // Same polynomial with terms re-sorted under another order.
    Polynomial withOrder(MonomialOrder order) const;
    // Same polynomial viewed in a larger ring whose variables extend this one's.
    Polynomial embeddedIn(RingPtr larger) const;

    Polynomial monic() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial shifted(const Rational& c, const Monomial& m) const;
    // All terms but the leading one.
    Polynomial tail() const;

    Polynomial operator-() const { return scaled(Rational(-1)); }

    // Ring mismatch throws RingMismatch. Results carry the left operand's order.
    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

    // Structural equality; order-insensitive because the term set is canonical.
    friend bool operator==(const Polynomial& p, const Polynomial& q);

    // Renders in the text grammar accepted by parsePolynomial.
    std::string toString() const;

private:
    void canonicalize();

    RingPtr ring_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial polyAdd(const Polynomial& p, const Polynomial& q);
Polynomial polyMul(const Polynomial& p, const Polynomial& q);
Polynomial power(const Polynomial& p, unsigned exponent);
Polynomial partialDerivative(const Polynomial& p, std::size_t var);
HomogeneousDegree homogeneousDegree(const Polynomial& p);

void requireSameRing(const Polynomial& p, const Polynomial& q);

} // namespace forcing
