#include "forcing/linear_oracle.hpp"

#include <map>
#include <string>

namespace forcing {

namespace {

void enumerate(std::size_t arity, std::size_t var, std::uint64_t remaining,
               std::vector<Monomial::Exponent>& current, std::vector<Monomial>& out)
{
    if (var + 1 == arity) {
        current[var] = static_cast<Monomial::Exponent>(remaining);
        out.emplace_back(std::span<const Monomial::Exponent>(current));
        return;
    }
    for (std::uint64_t e = remaining + 1; e-- > 0;) {
        current[var] = static_cast<Monomial::Exponent>(e);
        enumerate(arity, var + 1, remaining - e, current, out);
    }
}

std::uint64_t requireHomogeneous(const Polynomial& p, const char* name)
{
    const auto hd = homogeneousDegree(p);
    if (!hd.degree)
        throw NonHomogeneousInput(std::string(name) + (hd.zero ? " is zero" : " is not homogeneous"));
    return *hd.degree;
}

} // namespace

std::vector<Monomial> monomialsOfDegree(std::size_t arity, std::uint64_t degree)
{
    std::vector<Monomial> out;
    if (arity == 0) {
        if (degree == 0)
            out.push_back(Monomial(std::size_t{0}));
        return out;
    }
    std::vector<Monomial::Exponent> current(arity, 0);
    enumerate(arity, 0, degree, current, out);
    return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

std::vector<std::size_t> RationalMatrix::rowReduce()
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && (*this)(pivot, col).isZero())
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap((*this)(pivot, c), (*this)(row, c));
        }
        const Rational inv = (*this)(row, col).inverse();
        for (std::size_t c = col; c < cols_; ++c)
            (*this)(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col).isZero())
                continue;
            const Rational factor = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(r, c) -= factor * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

bool gradedMembership(const Polynomial& f, const std::vector<Polynomial>& generators)
{
    const std::uint64_t target = requireHomogeneous(f, "target");
    const std::size_t arity = f.ring()->arity();

    const auto rowMonomials = monomialsOfDegree(arity, target);
    std::map<std::vector<Monomial::Exponent>, std::size_t> rowOf;
    for (std::size_t i = 0; i < rowMonomials.size(); ++i) {
        auto e = rowMonomials[i].exponents();
        rowOf.emplace(std::vector<Monomial::Exponent>(e.begin(), e.end()), i);
    }

    // One column per (generator, multiplier monomial); last column is f.
    std::vector<Polynomial> columns;
    for (const auto& g : generators) {
        requireSameRing(f, g);
        const std::uint64_t d = requireHomogeneous(g, "generator");
        if (d > target)
            continue;
        for (const auto& m : monomialsOfDegree(arity, target - d))
            columns.push_back(g.shifted(Rational(1), m));
    }
    columns.push_back(f);

    RationalMatrix a(rowMonomials.size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (const auto& t : columns[c].terms()) {
            auto e = t.mono.exponents();
            a(rowOf.at(std::vector<Monomial::Exponent>(e.begin(), e.end())), c) = t.coeff;
        }
    }
    const auto pivots = a.rowReduce();
    // Consistent iff the right-hand side column is not a pivot column.
    return pivots.empty() || pivots.back() != columns.size() - 1;
}

bool linearMembershipOracle(const Polynomial& f0, const Polynomial& f1, const Polynomial& f2,
                            const Polynomial& h)
{
    requireHomogeneous(f1, "f1");
    requireHomogeneous(f2, "f2");
    requireHomogeneous(h, "h");
    return gradedMembership(f0, {f1, f2, h});
}

} // namespace forcing
