#pragma once

#include <stdexcept>
#include <string>

#include "forcing/bundle_degrees.hpp"
#include "forcing/cone.hpp"
#include "forcing/groebner.hpp"

namespace forcing {

class DatumError : public std::runtime_error {
public:
    DatumError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field))
    {
    }
    // "f1", "f2" or "f0".
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Internal consistency failure: Groebner and linear-algebra membership differ.
class OracleDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Homogeneous f1, f2, f0 of positive degrees d1, d2, d0, defining the forcing
// equation f1*t1 + f2*t2 + f0 = 0 over the cone.
struct ForcingDatum {
    Polynomial f1;
    Polynomial f2;
    Polynomial f0;
    long long d1 = 0;
    long long d2 = 0;
    long long d0 = 0;
};

// Throws DatumError for a zero, constant or non-homogeneous entry, or an entry
// outside Q[x, y, z].
ForcingDatum makeForcingDatum(const Polynomial& f1, const Polynomial& f2, const Polynomial& f0);

enum class Label { CounterexampleNotStein, AffineComplement, SerreBoundary, HypothesisFailed };
enum class FailedCondition { None, Condition1, Condition2 };

std::string_view labelName(Label label);      // "CounterexampleNotStein", ...
std::string_view labelSnakeCase(Label label); // "counterexample_not_stein", ...
std::string_view failedConditionName(FailedCondition c);

// The trichotomy once both conditions hold; HypothesisFailed otherwise.
Label labelFor(bool condition1, bool condition2, long long delta);

struct ClassifyOptions {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    bool oracleCheck = false;
    GroebnerLimits limits;
};

struct ClassificationReport {
    bool condition1 = false;
    bool condition2 = false;
    long long d1 = 0;
    long long d2 = 0;
    long long d0 = 0;
    long long delta = 0;
    long long selfIntersection = 0;
    long long normalBundleExponent = 0;
    // Twist m = d0 (so e0 = 0) and the exponents of the rank-one kernel V_m
    // and of its determinant at that m.
    long long m = 0;
    long long kernelExponent = 0;
    long long detExponent = 0;
    Label label = Label::HypothesisFailed;
    FailedCondition failed = FailedCondition::None;
    std::string forcingEquation;
    std::string coneEquation;
    std::uint64_t r = 0;
    std::string zLeadCoefficient;
    bool smooth = false;
    std::uint64_t degHY = 0;
};

// V(f1, f2, h) is the vertex only.
bool checkCondition1(const ConeSurface& cone, const ForcingDatum& datum, const ClassifyOptions& options = {});

// f0 is not in (f1, f2, h). For homogeneous data this is the same as
// f0 not in (f1, f2) in the local ring of X at the vertex. With
// options.oracleCheck the verdict is confirmed by linear algebra and a
// mismatch throws OracleDisagreement.
bool checkCondition2(const ConeSurface& cone, const ForcingDatum& datum, const ClassifyOptions& options = {});

// "f1*t1 + f2*t2 + f0 = 0", parenthesizing compound entries.
std::string renderForcingEquation(const ForcingDatum& datum);

ClassificationReport classify(const ConeSurface& cone, const ForcingDatum& datum,
                              const ClassifyOptions& options = {});

} // namespace forcing
