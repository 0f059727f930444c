#include "forcing/classifier.hpp"

#include <array>

#include "forcing/linear_oracle.hpp"

namespace forcing {

namespace {

long long positiveDegree(const Polynomial& f, const std::string& name)
{
    if (!(*f.ring() == *xyzRing()))
        throw DatumError(name, name + " must be a polynomial in x, y, z");
    const auto hd = homogeneousDegree(f);
    if (hd.zero)
        throw DatumError(name, name + " is the zero polynomial");
    if (!hd.degree)
        throw DatumError(name, "nonHomogeneous(" + name + "): " + f.toString());
    if (*hd.degree == 0)
        throw DatumError(name, name + " is a nonzero constant; degrees must be positive");
    return static_cast<long long>(*hd.degree);
}

std::string grouped(const Polynomial& p)
{
    const std::string s = p.toString();
    if (p.size() > 1 || s.front() == '-')
        return "(" + s + ")";
    return s;
}

void requireConeRing(const ConeSurface& cone, const ForcingDatum& datum)
{
    requireSameRing(cone.h, datum.f1);
    requireSameRing(cone.h, datum.f2);
    requireSameRing(cone.h, datum.f0);
}

} // namespace

ForcingDatum makeForcingDatum(const Polynomial& f1, const Polynomial& f2, const Polynomial& f0)
{
    ForcingDatum d{f1, f2, f0};
    d.d1 = positiveDegree(f1, "f1");
    d.d2 = positiveDegree(f2, "f2");
    d.d0 = positiveDegree(f0, "f0");
    return d;
}

std::string_view labelName(Label label)
{
    switch (label) {
    case Label::CounterexampleNotStein: return "CounterexampleNotStein";
    case Label::AffineComplement: return "AffineComplement";
    case Label::SerreBoundary: return "SerreBoundary";
    case Label::HypothesisFailed: return "HypothesisFailed";
    }
    return "?";
}

std::string_view labelSnakeCase(Label label)
{
    switch (label) {
    case Label::CounterexampleNotStein: return "counterexample_not_stein";
    case Label::AffineComplement: return "affine_complement";
    case Label::SerreBoundary: return "serre_boundary";
    case Label::HypothesisFailed: return "hypothesis_failed";
    }
    return "?";
}

std::string_view failedConditionName(FailedCondition c)
{
    switch (c) {
    case FailedCondition::None: return "none";
    case FailedCondition::Condition1: return "condition1";
    case FailedCondition::Condition2: return "condition2";
    }
    return "?";
}

Label labelFor(bool condition1, bool condition2, long long delta)
{
    if (!condition1 || !condition2)
        return Label::HypothesisFailed;
    if (delta < 0)
        return Label::CounterexampleNotStein;
    if (delta > 0)
        return Label::AffineComplement;
    return Label::SerreBoundary;
}

bool checkCondition1(const ConeSurface& cone, const ForcingDatum& datum, const ClassifyOptions& options)
{
    requireConeRing(cone, datum);
    return vanishesOnlyAtOrigin({datum.f1, datum.f2, cone.h}, options.limits);
}

bool checkCondition2(const ConeSurface& cone, const ForcingDatum& datum, const ClassifyOptions& options)
{
    requireConeRing(cone, datum);
    const bool member =
        idealMembership(datum.f0, {datum.f1, datum.f2, cone.h}, options.order, false, options.limits).member;
    if (options.oracleCheck) {
        const bool oracle = linearMembershipOracle(datum.f0, datum.f1, datum.f2, cone.h);
        if (oracle != member)
            throw OracleDisagreement("membership of f0 = " + datum.f0.toString() +
                                     ": Groebner says " + (member ? "member" : "non-member") +
                                     ", linear oracle says " + (oracle ? "member" : "non-member"));
    }
    return !member;
}

std::string renderForcingEquation(const ForcingDatum& datum)
{
    return grouped(datum.f1) + "*t1 + " + grouped(datum.f2) + "*t2 + " + grouped(datum.f0) + " = 0";
}

ClassificationReport classify(const ConeSurface& cone, const ForcingDatum& datum, const ClassifyOptions& options)
{
    ClassificationReport out;
    out.condition1 = checkCondition1(cone, datum, options);
    out.condition2 = checkCondition2(cone, datum, options);

    out.d1 = datum.d1;
    out.d2 = datum.d2;
    out.d0 = datum.d0;
    out.normalBundleExponent = normalBundleExponent(datum.d1, datum.d2, datum.d0);
    out.delta = out.normalBundleExponent;
    out.selfIntersection =
        selfIntersectionNumber(datum.d1, datum.d2, datum.d0, static_cast<long long>(cone.degHY));

    out.m = datum.d0;
    const std::array<long long, 2> degrees{datum.d1, datum.d2};
    out.kernelExponent = kernelBundleExponentRank2(out.m - datum.d0, datum.d0, datum.d1, datum.d2);
    out.detExponent = detBundleExponent(2, degrees, out.m);

    out.label = labelFor(out.condition1, out.condition2, out.delta);
    if (!out.condition1)
        out.failed = FailedCondition::Condition1;
    else if (!out.condition2)
        out.failed = FailedCondition::Condition2;

    out.forcingEquation = renderForcingEquation(datum);
    out.coneEquation = cone.h.toString();
    out.r = cone.r;
    out.zLeadCoefficient = cone.zLeadCoefficient.toString();
    out.smooth = cone.smoothAwayFromVertex;
    out.degHY = cone.degHY;
    return out;
}

} // namespace forcing
