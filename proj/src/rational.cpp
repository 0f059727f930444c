#include "forcing/rational.hpp"

#include <stdexcept>

namespace forcing {

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.isZero())
        throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

} // namespace forcing
