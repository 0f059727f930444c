#include "forcing/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace forcing {

namespace {

struct Element {
    Polynomial poly;
    std::vector<Polynomial> cofactors; // empty unless tracking
};

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

Polynomial zeroLike(const Polynomial& p)
{
    return Polynomial(p.ring(), p.order());
}

std::vector<Polynomial> combine(const std::vector<Polynomial>& a, const Rational& ca, const Monomial& ma,
                                const std::vector<Polynomial>& b, const Rational& cb, const Monomial& mb)
{
    std::vector<Polynomial> out;
    out.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out.push_back(a[k].shifted(ca, ma) + b[k].shifted(cb, mb));
    return out;
}

// cofactors(r) = cofactors(f) - sum_k q_k * cofactors(g_k)
void subtractQuotients(std::vector<Polynomial>& target, const DivisionResult& div,
                       const std::vector<const Element*>& divisors)
{
    for (std::size_t k = 0; k < div.quotients.size(); ++k) {
        if (div.quotients[k].isZero())
            continue;
        for (std::size_t j = 0; j < target.size(); ++j)
            target[j] = target[j] - div.quotients[k] * divisors[k]->cofactors[j];
    }
}

void makeMonic(Element& e)
{
    const Rational inv = e.poly.leadingCoefficient().inverse();
    if (inv.isOne())
        return;
    e.poly = e.poly.scaled(inv);
    for (auto& c : e.cofactors)
        c = c.scaled(inv);
}

class Engine {
public:
    Engine(MonomialOrder order, const GroebnerLimits& limits, bool track)
        : order_(order), limits_(limits), track_(track)
    {
    }

    GroebnerBasis run(const std::vector<Polynomial>& generators)
    {
        GroebnerBasis out;
        out.order = order_;
        out.reduced = true;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            const Polynomial g = generators[j].withOrder(order_);
            requireSameRing(g, generators.front());
            if (g.isZero())
                continue;
            Element e{g, {}};
            if (track_) {
                for (std::size_t k = 0; k < generators.size(); ++k) {
                    e.cofactors.push_back(k == j ? Polynomial::constant(g.ring(), Rational(1), order_)
                                                 : zeroLike(g));
                }
            }
            checkDegree(e.poly);
            makeMonic(e);
            if (e.poly.isConstant())
                return unitBasis(std::move(e));
            addElement(std::move(e));
        }

        while (!pairs_.empty()) {
            const CriticalPair pair = takeNext();
            if (coprime(basis_[pair.i].poly.leadingMonomial(), basis_[pair.j].poly.leadingMonomial()))
                continue;
            if (chainCriterion(pair))
                continue;
            Element r = reducedSPolynomial(pair);
            if (r.poly.isZero())
                continue;
            makeMonic(r);
            if (r.poly.isConstant())
                return unitBasis(std::move(r));
            addElement(std::move(r));
        }

        interreduce();
        for (auto& e : basis_)
            out.elements.push_back(std::move(e.poly));
        if (track_) {
            out.cofactors.emplace();
            for (auto& e : basis_)
                out.cofactors->push_back(std::move(e.cofactors));
        }
        return out;
    }

private:
    GroebnerBasis unitBasis(Element e)
    {
        GroebnerBasis out;
        out.order = order_;
        out.reduced = true;
        out.elements.push_back(e.poly);
        if (track_)
            out.cofactors.emplace(std::vector<std::vector<Polynomial>>{std::move(e.cofactors)});
        return out;
    }

    void checkDegree(const Polynomial& p) const
    {
        if (p.totalDegree() > static_cast<long long>(limits_.maxDegree))
            throw ResourceLimitExceeded("Groebner computation exceeded degree cap " +
                                        std::to_string(limits_.maxDegree));
    }

    void addElement(Element e)
    {
        if (basis_.size() >= limits_.maxBasisSize)
            throw ResourceLimitExceeded("Groebner basis exceeded size cap " +
                                        std::to_string(limits_.maxBasisSize));
        const std::size_t index = basis_.size();
        basis_.push_back(std::move(e));
        for (std::size_t k = 0; k < index; ++k) {
            CriticalPair p{k, index,
                           lcm(basis_[k].poly.leadingMonomial(), basis_[index].poly.leadingMonomial())};
            pairs_.push_back(std::move(p));
            pending_.insert({k, index});
        }
    }

    // Normal strategy: smallest lcm first, ties broken by insertion.
    CriticalPair takeNext()
    {
        auto best = pairs_.begin();
        for (auto it = pairs_.begin() + 1; it < pairs_.end(); ++it) {
            if (compare(order_, it->lcm, best->lcm) < 0)
                best = it;
        }
        CriticalPair p = *best;
        pairs_.erase(best);
        pending_.erase({p.i, p.j});
        return p;
    }

    bool isPending(std::size_t a, std::size_t b) const
    {
        return pending_.count({std::min(a, b), std::max(a, b)}) > 0;
    }

    // Skip (i, j) when some k has lm_k | lcm(i, j) and both (i, k) and (j, k)
    // were already treated.
    bool chainCriterion(const CriticalPair& p) const
    {
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (isPending(p.i, k) || isPending(p.j, k))
                continue;
            if (divides(basis_[k].poly.leadingMonomial(), p.lcm))
                return true;
        }
        return false;
    }

    Element reducedSPolynomial(const CriticalPair& p)
    {
        const Element& f = basis_[p.i];
        const Element& g = basis_[p.j];
        const Monomial mf = p.lcm / f.poly.leadingMonomial();
        const Monomial mg = p.lcm / g.poly.leadingMonomial();
        const Rational cf = f.poly.leadingCoefficient().inverse();
        const Rational cg = -g.poly.leadingCoefficient().inverse();
        Element s{f.poly.shifted(cf, mf) + g.poly.shifted(cg, mg), {}};
        if (track_)
            s.cofactors = combine(f.cofactors, cf, mf, g.cofactors, cg, mg);
        checkDegree(s.poly);
        return reduceAgainst(std::move(s), basis_.size());
    }

    // Reduce e modulo every basis element except the one at `skip`.
    Element reduceAgainst(Element e, std::size_t skip)
    {
        std::vector<Polynomial> divisors;
        std::vector<const Element*> sources;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == skip)
                continue;
            divisors.push_back(basis_[k].poly);
            sources.push_back(&basis_[k]);
        }
        DivisionResult div = normalForm(e.poly, divisors, order_);
        if (track_)
            subtractQuotients(e.cofactors, div, sources);
        e.poly = std::move(div.remainder);
        checkDegree(e.poly);
        return e;
    }

    void interreduce()
    {
        // Drop elements whose leading monomial is a multiple of another's.
        std::vector<bool> redundant(basis_.size(), false);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Monomial& mi = basis_[i].poly.leadingMonomial();
            for (std::size_t j = 0; j < basis_.size() && !redundant[i]; ++j) {
                if (j == i)
                    continue;
                const Monomial& mj = basis_[j].poly.leadingMonomial();
                if (divides(mj, mi) && (!(mj == mi) || j < i))
                    redundant[i] = true;
            }
        }
        std::vector<Element> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!redundant[i])
                kept.push_back(std::move(basis_[i]));
        }
        basis_ = std::move(kept);

        for (std::size_t i = 0; i < basis_.size(); ++i) {
            Element e = std::move(basis_[i]);
            basis_[i] = Element{zeroLike(e.poly), {}};
            // Leading terms are untouched, so the element stays monic.
            basis_[i] = reduceAgainst(std::move(e), i);
        }
        std::sort(basis_.begin(), basis_.end(), [this](const Element& a, const Element& b) {
            return compare(order_, a.poly.leadingMonomial(), b.poly.leadingMonomial()) > 0;
        });
    }

    MonomialOrder order_;
    GroebnerLimits limits_;
    bool track_;
    std::vector<Element> basis_;
    std::vector<CriticalPair> pairs_;
    std::set<std::pair<std::size_t, std::size_t>> pending_;
};

} // namespace

DivisionResult normalForm(const Polynomial& f, const std::vector<Polynomial>& divisors, MonomialOrder order)
{
    std::vector<Polynomial> gs;
    gs.reserve(divisors.size());
    for (const auto& g : divisors) {
        requireSameRing(f, g);
        if (g.isZero())
            throw std::invalid_argument("zero divisor in normalForm");
        gs.push_back(g.withOrder(order));
    }

    std::vector<std::vector<Term>> quotientTerms(gs.size());
    std::vector<Term> remainder;
    Polynomial p = f.withOrder(order);
    while (!p.isZero()) {
        const Term& lead = p.leadingTerm();
        bool reduced = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (!divides(gs[i].leadingMonomial(), lead.mono))
                continue;
            const Rational c = lead.coeff / gs[i].leadingCoefficient();
            const Monomial m = lead.mono / gs[i].leadingMonomial();
            quotientTerms[i].push_back({c, m});
            p = p + gs[i].shifted(-c, m);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(lead);
            p = p.tail();
        }
    }

    DivisionResult out{Polynomial(f.ring(), std::move(remainder), order), {}};
    out.quotients.reserve(gs.size());
    for (auto& q : quotientTerms)
        out.quotients.emplace_back(f.ring(), std::move(q), order);
    return out;
}

Polynomial sPolynomial(const Polynomial& fIn, const Polynomial& gIn, MonomialOrder order)
{
    requireSameRing(fIn, gIn);
    if (fIn.isZero() || gIn.isZero())
        throw std::invalid_argument("S-polynomial of a zero polynomial");
    const Polynomial f = fIn.withOrder(order);
    const Polynomial g = gIn.withOrder(order);
    const Monomial l = lcm(f.leadingMonomial(), g.leadingMonomial());
    return f.shifted(f.leadingCoefficient().inverse(), l / f.leadingMonomial()) +
           g.shifted(-g.leadingCoefficient().inverse(), l / g.leadingMonomial());
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                         const GroebnerLimits& limits, bool trackCofactors)
{
    if (generators.empty())
        return GroebnerBasis{order, {}, true, trackCofactors ? std::optional<std::vector<std::vector<Polynomial>>>(std::in_place) : std::nullopt};
    return Engine(order, limits, trackCofactors).run(generators);
}

bool isGroebnerBasis(const std::vector<Polynomial>& elements, MonomialOrder order)
{
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i + 1; j < elements.size(); ++j) {
            const Polynomial s = sPolynomial(elements[i], elements[j], order);
            if (!normalForm(s, elements, order).remainder.isZero())
                return false;
        }
    }
    return true;
}

MembershipResult idealMembership(const Polynomial& f, const std::vector<Polynomial>& generators,
                                 MonomialOrder order, bool wantCertificate, const GroebnerLimits& limits)
{
    for (const auto& g : generators)
        requireSameRing(f, g);
    const GroebnerBasis basis = buchberger(generators, order, limits, wantCertificate);
    const DivisionResult div = normalForm(f, basis.elements, order);

    MembershipResult out;
    out.member = div.remainder.isZero();
    if (out.member && wantCertificate) {
        std::vector<Polynomial> cert(generators.size(), Polynomial(f.ring(), order));
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
            if (div.quotients[i].isZero())
                continue;
            for (std::size_t j = 0; j < generators.size(); ++j)
                cert[j] = cert[j] + div.quotients[i] * (*basis.cofactors)[i][j];
        }
        out.certificate = std::move(cert);
    }
    return out;
}

bool radicalMembership(const Polynomial& g, const std::vector<Polynomial>& generators,
                       const GroebnerLimits& limits)
{
    for (const auto& p : generators)
        requireSameRing(g, p);
    const RingPtr extended = g.ring()->withFreshVariable("t");
    const Polynomial t = Polynomial::variable(extended, extended->arity() - 1);
    std::vector<Polynomial> lifted;
    lifted.reserve(generators.size() + 1);
    for (const auto& p : generators)
        lifted.push_back(p.embeddedIn(extended));
    lifted.push_back(Polynomial::constant(extended, Rational(1)) - t * g.embeddedIn(extended));
    return buchberger(lifted, MonomialOrder::GradedReverseLex, limits).isUnit();
}

bool vanishesOnlyAtOrigin(const std::vector<Polynomial>& generators, const GroebnerLimits& limits)
{
    if (generators.empty())
        return false;
    const RingPtr& ring = generators.front().ring();
    for (std::size_t v = 0; v < ring->arity(); ++v) {
        if (!radicalMembership(Polynomial::variable(ring, v), generators, limits))
            return false;
    }
    return true;
}

} // namespace forcing
