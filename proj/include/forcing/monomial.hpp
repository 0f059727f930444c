#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace forcing {

enum class MonomialOrder { Lex, GradedLex, GradedReverseLex };

std::string_view orderName(MonomialOrder order);

// Exponent vector for a ring with at most kMaxVariables variables.
class Monomial {
public:
    static constexpr std::size_t kMaxVariables = 8;
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t arity);
    Monomial(std::initializer_list<Exponent> exponents);
    explicit Monomial(std::span<const Exponent> exponents);

    // x_index^power in a ring of the given arity.
    static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

    std::size_t arity() const { return arity_; }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t totalDegree() const { return degree_; }
    bool isOne() const { return degree_ == 0; }

    std::span<const Exponent> exponents() const { return {exps_.data(), arity_}; }

    // Appends zero exponents up to the new arity.
    Monomial extended(std::size_t arity) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // Precondition: divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.arity_ == b.arity_ && a.exps_ == b.exps_;
    }

private:
    std::array<Exponent, kMaxVariables> exps_{};
    std::uint8_t arity_ = 0;
    std::uint64_t degree_ = 0;
};

// Arity mismatch throws std::invalid_argument.
std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

} // namespace forcing
