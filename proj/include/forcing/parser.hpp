#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "forcing/polynomial.hpp"

namespace forcing {

enum class ParseErrorKind { Syntax, UnknownVariable, MalformedExponent };

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t position, const std::string& what);

    ParseErrorKind kind() const { return kind_; }
    // Zero-based character offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    ParseErrorKind kind_;
    std::size_t position_;
};

// Grammar (whitespace ignored):
//   poly   := term (('+' | '-') term)*
//   term   := ['-'] (coeff ['*' factor ('*' factor)*] | factor ('*' factor)*)
//   factor := var ['^' nat]
//   coeff  := nat ['/' nat]
// A bare coefficient is a constant term, so "0" and "5" parse.
Polynomial parsePolynomial(std::string_view text, RingPtr ring = xyzRing(),
                           MonomialOrder order = MonomialOrder::GradedReverseLex);

} // namespace forcing
