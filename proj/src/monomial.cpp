#include "forcing/monomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace forcing {

std::string_view orderName(MonomialOrder order)
{
    switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GradedLex: return "grlex";
    case MonomialOrder::GradedReverseLex: return "grevlex";
    }
    return "?";
}

namespace {

void checkArity(std::size_t arity)
{
    if (arity > Monomial::kMaxVariables)
        throw std::invalid_argument("monomial arity " + std::to_string(arity) + " exceeds " +
                                    std::to_string(Monomial::kMaxVariables));
}

void requireSameArity(const Monomial& a, const Monomial& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("monomial arity mismatch: " + std::to_string(a.arity()) +
                                    " vs " + std::to_string(b.arity()));
}

} // namespace

Monomial::Monomial(std::size_t arity) : arity_(static_cast<std::uint8_t>(arity))
{
    checkArity(arity);
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::span<const Exponent>(exponents.begin(), exponents.size()))
{
}

Monomial::Monomial(std::span<const Exponent> exponents)
{
    checkArity(exponents.size());
    arity_ = static_cast<std::uint8_t>(exponents.size());
    std::copy(exponents.begin(), exponents.end(), exps_.begin());
    for (Exponent e : exponents)
        degree_ += e;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power)
{
    if (index >= arity)
        throw std::out_of_range("variable index out of range");
    Monomial m(arity);
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
}

Monomial Monomial::extended(std::size_t arity) const
{
    if (arity < arity_)
        throw std::invalid_argument("cannot shrink a monomial");
    Monomial m(*this);
    checkArity(arity);
    m.arity_ = static_cast<std::uint8_t>(arity);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    requireSameArity(a, b);
    Monomial m(a);
    for (std::size_t i = 0; i < a.arity_; ++i)
        m.exps_[i] += b.exps_[i];
    m.degree_ += b.degree_;
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    if (!divides(b, a))
        throw std::invalid_argument("monomial quotient is not exact");
    Monomial m(a);
    for (std::size_t i = 0; i < a.arity_; ++i)
        m.exps_[i] -= b.exps_[i];
    m.degree_ -= b.degree_;
    return m;
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b)
{
    requireSameArity(a, b);
    const std::size_t n = a.arity();
    if (order != MonomialOrder::Lex && a.totalDegree() != b.totalDegree())
        return a.totalDegree() <=> b.totalDegree();

    if (order == MonomialOrder::GradedReverseLex) {
        // Equal degree: the monomial with the smaller exponent in the last
        // differing variable is larger.
        for (std::size_t i = n; i-- > 0;) {
            if (a[i] != b[i])
                return b[i] <=> a[i];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i])
            return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b)
{
    requireSameArity(a, b);
    if (a.totalDegree() > b.totalDegree())
        return false;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] > b[i])
            return false;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    requireSameArity(a, b);
    std::array<Monomial::Exponent, Monomial::kMaxVariables> e{};
    for (std::size_t i = 0; i < a.arity(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::span<const Monomial::Exponent>(e.data(), a.arity()));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    requireSameArity(a, b);
    std::array<Monomial::Exponent, Monomial::kMaxVariables> e{};
    for (std::size_t i = 0; i < a.arity(); ++i)
        e[i] = std::min(a[i], b[i]);
    return Monomial(std::span<const Monomial::Exponent>(e.data(), a.arity()));
}

bool coprime(const Monomial& a, const Monomial& b)
{
    return gcd(a, b).isOne();
}

} // namespace forcing
