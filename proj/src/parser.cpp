#include "forcing/parser.hpp"

#include <cctype>
#include <sstream>

namespace forcing {

namespace {

constexpr Monomial::Exponent kMaxExponent = 1u << 20;

std::string describe(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::UnknownVariable: return "unknown variable";
    case ParseErrorKind::MalformedExponent: return "malformed exponent";
    }
    return "parse error";
}

class Parser {
public:
    Parser(std::string_view text, RingPtr ring, MonomialOrder order)
        : text_(text), ring_(std::move(ring)), order_(order)
    {
    }

    Polynomial run()
    {
        std::vector<Term> terms;
        skipSpace();
        if (atEnd())
            fail(ParseErrorKind::Syntax, "empty polynomial");
        terms.push_back(term(false));
        skipSpace();
        while (!atEnd()) {
            char c = peek();
            if (c != '+' && c != '-')
                fail(ParseErrorKind::Syntax, std::string("unexpected '") + c + "'");
            ++pos_;
            terms.push_back(term(c == '-'));
            skipSpace();
        }
        return Polynomial(ring_, std::move(terms), order_);
    }

private:
    Term term(bool negated)
    {
        skipSpace();
        if (!atEnd() && peek() == '-') {
            negated = !negated;
            ++pos_;
            skipSpace();
        }
        if (atEnd())
            fail(ParseErrorKind::Syntax, "expected a term");

        Rational coeff(1);
        Monomial mono(ring_->arity());
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coefficient();
            skipSpace();
            if (atEnd() || peek() != '*')
                return {negated ? -coeff : coeff, mono};
            ++pos_;
        }
        mono = mono * factor();
        for (;;) {
            skipSpace();
            if (atEnd() || peek() != '*')
                break;
            ++pos_;
            mono = mono * factor();
        }
        return {negated ? -coeff : coeff, mono};
    }

    Rational coefficient()
    {
        mpz_class num = natural();
        skipSpace();
        if (atEnd() || peek() != '/')
            return Rational(num, 1);
        ++pos_;
        skipSpace();
        const auto at = pos_;
        if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(ParseErrorKind::Syntax, "expected a denominator");
        mpz_class den = natural();
        if (den == 0) {
            pos_ = at;
            fail(ParseErrorKind::Syntax, "zero denominator");
        }
        return Rational(num, den);
    }

    Monomial factor()
    {
        skipSpace();
        const auto start = pos_;
        if (atEnd() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail(ParseErrorKind::Syntax, "expected a variable");
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        std::size_t index = ring_->arity();
        for (std::size_t i = 0; i < ring_->arity(); ++i) {
            if (ring_->name(i) == name)
                index = i;
        }
        if (index == ring_->arity()) {
            pos_ = start;
            fail(ParseErrorKind::UnknownVariable, "'" + name + "'");
        }

        Monomial::Exponent power = 1;
        skipSpace();
        if (!atEnd() && peek() == '^') {
            ++pos_;
            skipSpace();
            const auto at = pos_;
            if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail(ParseErrorKind::MalformedExponent, "expected a non-negative integer after '^'");
            mpz_class e = natural();
            if (e > kMaxExponent) {
                pos_ = at;
                fail(ParseErrorKind::MalformedExponent, "exponent too large");
            }
            power = static_cast<Monomial::Exponent>(e.get_ui());
        }
        return Monomial::variable(ring_->arity(), index, power);
    }

    mpz_class natural()
    {
        const auto start = pos_;
        while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void skipSpace()
    {
        while (!atEnd() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool atEnd() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& detail) const
    {
        throw ParseError(kind, pos_, detail);
    }

    std::string_view text_;
    RingPtr ring_;
    MonomialOrder order_;
    std::size_t pos_ = 0;
};

} // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& what)
    : std::runtime_error((std::ostringstream() << describe(kind) << " at position " << position << ": " << what).str()),
      kind_(kind), position_(position)
{
}

Polynomial parsePolynomial(std::string_view text, RingPtr ring, MonomialOrder order)
{
    return Parser(text, std::move(ring), order).run();
}

} // namespace forcing
