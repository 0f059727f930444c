#pragma once

#include <stdexcept>
#include <vector>

#include "forcing/polynomial.hpp"

namespace forcing {

class NonHomogeneousInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// All monomials of the given total degree, in descending lex order.
std::vector<Monomial> monomialsOfDegree(std::size_t arity, std::uint64_t degree);

// Dense matrix over Q with exact row reduction.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Reduced row echelon form in place; returns the pivot column of each pivot row.
    std::vector<std::size_t> rowReduce();

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Homogeneous membership f in (g_1, ..., g_k) decided in the single graded
// piece of degree deg f: f = sum a_i g_i with a_i homogeneous of degree
// deg f - deg g_i (generators of larger degree contribute nothing).
// Throws NonHomogeneousInput for a zero or non-homogeneous input.
bool gradedMembership(const Polynomial& f, const std::vector<Polynomial>& generators);

// f0 in (f1, f2, h), decided by linear algebra rather than Groebner bases.
bool linearMembershipOracle(const Polynomial& f0, const Polynomial& f1, const Polynomial& f2,
                            const Polynomial& h);

} // namespace forcing
