#pragma once

#include <stdexcept>
#include <vector>

#include "forcing/problem.hpp"

namespace forcing {

class FermatBoundsError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// h = x^r + y^r + z^r with f1 = x, f2 = y, f0 = z^s, for r >= 4 and 3 <= s < r.
struct FermatInstance {
    long long r = 0;
    long long s = 0;

    friend bool operator==(const FermatInstance&, const FermatInstance&) = default;
};

// Throws FermatBoundsError outside r >= 4, 3 <= s < r.
void validateFermat(const FermatInstance& instance);

Polynomial fermatPolynomial(long long r);

LoadedProblem fermatProblem(const FermatInstance& instance);

// Every (r, s) with 4 <= r <= maxR and 3 <= s < r, ordered by r then s.
// Throws FermatBoundsError for maxR < 4.
std::vector<FermatInstance> enumerateFermat(long long maxR);

} // namespace forcing
