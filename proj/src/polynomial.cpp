#include "forcing/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace forcing {

Ring::Ring(std::vector<std::string> variables) : vars_(std::move(variables))
{
    if (vars_.size() > Monomial::kMaxVariables)
        throw std::invalid_argument("too many ring variables");
}

std::shared_ptr<const Ring> Ring::withFreshVariable(const std::string& hint) const
{
    std::string name = hint;
    while (std::find(vars_.begin(), vars_.end(), name) != vars_.end())
        name += "_";
    auto vars = vars_;
    vars.push_back(name);
    return std::make_shared<const Ring>(std::move(vars));
}

RingPtr xyzRing()
{
    static const RingPtr ring = std::make_shared<const Ring>(std::vector<std::string>{"x", "y", "z"});
    return ring;
}

void requireSameRing(const Polynomial& p, const Polynomial& q)
{
    if (p.ring() != q.ring() && !(*p.ring() == *q.ring()))
        throw RingMismatch("polynomials live in different rings");
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(order)
{
    if (!ring_)
        throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, MonomialOrder order)
    : Polynomial(std::move(ring), order)
{
    for (const auto& t : terms) {
        if (t.mono.arity() != ring_->arity())
            throw std::invalid_argument("term arity does not match the ring");
    }
    terms_ = std::move(terms);
    canonicalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c, MonomialOrder order)
{
    Monomial one(ring->arity());
    return monomial(std::move(ring), c, one, order);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, Monomial::Exponent power,
                                MonomialOrder order)
{
    auto m = Monomial::variable(ring->arity(), index, power);
    return monomial(std::move(ring), Rational(1), m, order);
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, const Monomial& m,
                                MonomialOrder order)
{
    return Polynomial(std::move(ring), std::vector<Term>{{c, m}}, order);
}

void Polynomial::canonicalize()
{
    const auto ord = order_;
    std::sort(terms_.begin(), terms_.end(), [ord](const Term& a, const Term& b) {
        return compare(ord, a.mono, b.mono) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.isZero(); });
    terms_ = std::move(merged);
}

const Term& Polynomial::leadingTerm() const
{
    if (terms_.empty())
        throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

Rational Polynomial::coefficientOf(const Monomial& m) const
{
    for (const auto& t : terms_) {
        if (t.mono == m)
            return t.coeff;
    }
    return Rational(0);
}

long long Polynomial::totalDegree() const
{
    long long d = -1;
    for (const auto& t : terms_)
        d = std::max<long long>(d, static_cast<long long>(t.mono.totalDegree()));
    return d;
}

Monomial::Exponent Polynomial::degreeIn(std::size_t var) const
{
    Monomial::Exponent d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono[var]);
    return d;
}

Polynomial Polynomial::withOrder(MonomialOrder order) const
{
    if (order == order_)
        return *this;
    return Polynomial(ring_, terms_, order);
}

Polynomial Polynomial::embeddedIn(RingPtr larger) const
{
    if (larger->arity() < ring_->arity())
        throw RingMismatch("target ring is smaller");
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
        if (larger->name(i) != ring_->name(i))
            throw RingMismatch("target ring does not extend the source ring");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_)
        terms.push_back({t.coeff, t.mono.extended(larger->arity())});
    return Polynomial(std::move(larger), std::move(terms), order_);
}

Polynomial Polynomial::monic() const
{
    if (isZero() || leadingCoefficient().isOne())
        return *this;
    return scaled(leadingCoefficient().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial out(ring_, order_);
    if (c.isZero())
        return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_)
        t.coeff *= c;
    return out;
}

Polynomial Polynomial::shifted(const Rational& c, const Monomial& m) const
{
    Polynomial out(ring_, order_);
    if (c.isZero())
        return out;
    out.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the term order.
    for (const auto& t : terms_)
        out.terms_.push_back({t.coeff * c, t.mono * m});
    return out;
}

Polynomial Polynomial::tail() const
{
    Polynomial out(ring_, order_);
    if (terms_.size() > 1)
        out.terms_.assign(terms_.begin() + 1, terms_.end());
    return out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& qIn)
{
    requireSameRing(p, qIn);
    const Polynomial q = qIn.withOrder(p.order_);
    Polynomial out(p.ring_, p.order_);
    out.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto a = p.terms_.begin();
    auto b = q.terms_.begin();
    while (a != p.terms_.end() && b != q.terms_.end()) {
        auto c = compare(p.order_, a->mono, b->mono);
        if (c > 0) {
            out.terms_.push_back(*a++);
        } else if (c < 0) {
            out.terms_.push_back(*b++);
        } else {
            Rational s = a->coeff + b->coeff;
            if (!s.isZero())
                out.terms_.push_back({std::move(s), a->mono});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, p.terms_.end());
    out.terms_.insert(out.terms_.end(), b, q.terms_.end());
    return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q)
{
    return p + (-q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    requireSameRing(p, q);
    std::vector<Term> products;
    products.reserve(p.terms_.size() * q.terms_.size());
    for (const auto& a : p.terms_) {
        for (const auto& b : q.terms_)
            products.push_back({a.coeff * b.coeff, a.mono * b.mono});
    }
    return Polynomial(p.ring_, std::move(products), p.order_);
}

bool operator==(const Polynomial& p, const Polynomial& q)
{
    if (!(*p.ring_ == *q.ring_) || p.terms_.size() != q.terms_.size())
        return false;
    if (p.order_ == q.order_)
        return p.terms_ == q.terms_;
    return p.terms_ == q.withOrder(p.order_).terms_;
}

namespace {

void writeMonomial(std::ostream& os, const Ring& ring, const Monomial& m)
{
    bool first = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            os << '*';
        os << ring.name(i);
        if (m[i] > 1)
            os << '^' << m[i];
        first = false;
    }
}

} // namespace

std::string Polynomial::toString() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational magnitude = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
        if (first)
            os << (t.coeff.sign() < 0 ? "-" : "");
        else
            os << (t.coeff.sign() < 0 ? " - " : " + ");
        if (t.mono.isOne()) {
            os << magnitude.toString();
        } else {
            if (!magnitude.isOne())
                os << magnitude.toString() << '*';
            writeMonomial(os, *ring_, t.mono);
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p)
{
    return os << p.toString();
}

Polynomial polyAdd(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial polyMul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial power(const Polynomial& p, unsigned exponent)
{
    Polynomial result = Polynomial::constant(p.ring(), Rational(1), p.order());
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1u)
            result = result * base;
        exponent >>= 1;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

Polynomial partialDerivative(const Polynomial& p, std::size_t var)
{
    if (var >= p.ring()->arity())
        throw std::out_of_range("derivative variable index out of range");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        const auto e = t.mono[var];
        if (e == 0)
            continue;
        terms.push_back({t.coeff * Rational(static_cast<long>(e)),
                         t.mono / Monomial::variable(t.mono.arity(), var)});
    }
    return Polynomial(p.ring(), std::move(terms), p.order());
}

HomogeneousDegree homogeneousDegree(const Polynomial& p)
{
    if (p.isZero())
        return {std::nullopt, true};
    const auto d = p.terms().front().mono.totalDegree();
    for (const auto& t : p.terms()) {
        if (t.mono.totalDegree() != d)
            return {std::nullopt, false};
    }
    return {d, false};
}

} // namespace forcing
