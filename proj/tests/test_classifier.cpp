#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "forcing/classifier.hpp"
#include "test_support.hpp"

using namespace forcing;
using forcing::testing::P;

namespace {

const ConeSurface& quarticCone()
{
    static const ConeSurface cone = buildCone(P("x^4 + y^4 + z^4"));
    return cone;
}

const ConeSurface& cubicCone()
{
    static const ConeSurface cone = buildCone(P("x^3 + y^3 + z^3"));
    return cone;
}

ForcingDatum datum(const char* f1, const char* f2, const char* f0)
{
    return makeForcingDatum(P(f1), P(f2), P(f0));
}

} // namespace

TEST_CASE("makeForcingDatum records degrees and rejects bad entries")
{
    const auto d = datum("x^3", "y^2", "z^3 + x*y^2");
    CHECK(d.d1 == 3);
    CHECK(d.d2 == 2);
    CHECK(d.d0 == 3);

    auto failsOn = [](const char* f1, const char* f2, const char* f0, const std::string& field) {
        try {
            (void)datum(f1, f2, f0);
            FAIL("expected a DatumError");
        } catch (const DatumError& e) {
            CHECK(e.field() == field);
        }
    };
    failsOn("x + y^2", "y", "z", "f1");
    failsOn("x", "0", "z", "f2");
    failsOn("x", "y", "3", "f0");
}

TEST_CASE("checkCondition1")
{
    CHECK(checkCondition1(quarticCone(), datum("x", "y", "z^3")));
    CHECK_FALSE(checkCondition1(quarticCone(), datum("x", "x^2", "z^3")));

    const auto d = datum("x^3", "y^2", "z^6");
    CHECK(checkCondition1(quarticCone(), d));
    for (const char* v : {"x", "y", "z"})
        CHECK(radicalMembership(P(v), {d.f1, d.f2, quarticCone().h}));
}

TEST_CASE("checkCondition2")
{
    CHECK(checkCondition2(quarticCone(), datum("x", "y", "z^3")));
    CHECK_FALSE(checkCondition2(quarticCone(), datum("x", "y", "z^4")));
    CHECK_FALSE(checkCondition2(quarticCone(), datum("x + y", "x*y", "x + y")));

    ClassifyOptions withOracle;
    withOracle.oracleCheck = true;
    CHECK(checkCondition2(quarticCone(), datum("x", "y", "z^3"), withOracle));
    CHECK_FALSE(checkCondition2(quarticCone(), datum("x", "y", "z^4"), withOracle));
}

TEST_CASE("twistExponents")
{
    CHECK(twistExponents(3, std::array<long long, 2>{1, 1}) == std::vector<long long>{2, 2});
    CHECK(twistExponents(3, std::array<long long, 3>{3, 1, 1}).front() == 0);
    CHECK(twistExponents(0, std::array<long long, 2>{2, 5}) == std::vector<long long>{-2, -5});
}

TEST_CASE("detBundleExponent")
{
    CHECK(detBundleExponent(2, std::array<long long, 2>{1, 1}, 3) == 1);
    CHECK(detBundleExponent(2, std::array<long long, 2>{4, 7}, 11) == 0);
    CHECK(detBundleExponent(3, std::array<long long, 3>{3, 1, 1}, 3) == 1);
    CHECK_THROWS_AS(detBundleExponent(3, std::array<long long, 2>{1, 1}, 3), std::invalid_argument);

    const auto data = bundleDegreeData(3, std::array<long long, 2>{1, 1});
    CHECK(data.n == 2);
    CHECK(data.twists == std::vector<long long>{2, 2});
    CHECK(data.detExponent == 1);
}

TEST_CASE("rank-two exponents and self-intersection")
{
    CHECK(kernelBundleExponentRank2(0, 3, 1, 1) == 1);
    CHECK(kernelBundleExponentRank2(0, 5, 2, 3) == 0);
    CHECK(kernelBundleExponentRank2(2, 2, 1, 1) == 2);

    CHECK(normalBundleExponent(1, 1, 3) == -1);
    CHECK(normalBundleExponent(1, 1, 2) == 0);
    CHECK(normalBundleExponent(2, 2, 1) == 3);

    CHECK(selfIntersectionNumber(1, 1, 3, 4) == -4);
    CHECK(selfIntersectionNumber(1, 1, 2, 3) == 0);
    CHECK(selfIntersectionNumber(4, 5, 9, 17) == 0);
    CHECK_THROWS_AS(selfIntersectionNumber(1, 1, 3, 0), std::invalid_argument);
}

TEST_CASE("checkCorollaryMonomial")
{
    CHECK(checkCorollaryMonomial(4, 1, 1, 3));
    CHECK_FALSE(checkCorollaryMonomial(4, 1, 1, 4));
    CHECK_FALSE(checkCorollaryMonomial(4, 2, 2, 3));
    CHECK_FALSE(checkCorollaryMonomial(9, 0, 1, 3));
}

TEST_CASE("degree identities on a grid")
{
    for (long long d0 = 0; d0 <= 6; ++d0)
        for (long long d1 = 0; d1 <= 6; ++d1)
            for (long long d2 = 0; d2 <= 6; ++d2)
                for (long long m = -6; m <= 12; ++m) {
                    const std::array<long long, 2> pair{d1, d2};
                    const std::array<long long, 3> triple{d0, d1, d2};
                    const long long e0 = m - d0;
                    const long long kernel = kernelBundleExponentRank2(e0, d0, d1, d2);
                    REQUIRE(detBundleExponent(2, pair, m) == kernel);
                    REQUIRE(kernel == m - d1 - d2);
                    REQUIRE(detBundleExponent(3, triple, m) == kernel + e0);
                    for (long long shift : {-3LL, 1LL, 4LL}) {
                        const long long m2 = m + shift;
                        REQUIRE(kernelBundleExponentRank2(m2 - d0, d0, d1, d2) - kernel == shift);
                        REQUIRE(detBundleExponent(3, triple, m2) - detBundleExponent(3, triple, m) == 2 * shift);
                    }
                    const auto twists = twistExponents(m, triple);
                    for (std::size_t i = 0; i < 3; ++i)
                        REQUIRE(twists[i] + triple[i] == m);
                }
}

TEST_CASE("labelFor partitions the satisfied-hypothesis cases by the sign of delta")
{
    for (long long delta = -20; delta <= 20; ++delta) {
        const Label label = labelFor(true, true, delta);
        const int hits = (label == Label::CounterexampleNotStein) + (label == Label::AffineComplement) +
                         (label == Label::SerreBoundary);
        CHECK(hits == 1);
        CHECK((label == Label::CounterexampleNotStein) == (delta < 0));
        CHECK((label == Label::AffineComplement) == (delta > 0));
        CHECK((label == Label::SerreBoundary) == (delta == 0));
        CHECK(labelFor(false, true, delta) == Label::HypothesisFailed);
        CHECK(labelFor(true, false, delta) == Label::HypothesisFailed);
        CHECK(labelFor(false, false, delta) == Label::HypothesisFailed);
    }
}

TEST_CASE("classify: Fermat quartic with (x, y, z^3) is a counter-example")
{
    const auto report = classify(quarticCone(), datum("x", "y", "z^3"));
    CHECK(report.label == Label::CounterexampleNotStein);
    CHECK(report.condition1);
    CHECK(report.condition2);
    CHECK(report.delta == -1);
    CHECK(report.selfIntersection == -4);
    CHECK(report.degHY == 4);
    CHECK(report.normalBundleExponent == -1);
    CHECK(report.m == 3);
    CHECK(report.kernelExponent == 1);
    CHECK(report.detExponent == 1);
    CHECK(report.failed == FailedCondition::None);
    CHECK(report.forcingEquation == "x*t1 + y*t2 + z^3 = 0");
    CHECK(report.coneEquation == "x^4 + y^4 + z^4");
}

TEST_CASE("classify: the cubic with (x, y, z^2) sits on the Serre boundary")
{
    const auto report = classify(cubicCone(), datum("x", "y", "z^2"));
    CHECK(report.label == Label::SerreBoundary);
    CHECK(report.delta == 0);
    CHECK(report.selfIntersection == 0);
}

TEST_CASE("classify: the quartic with (x, y, z) has affine complement")
{
    const auto report = classify(quarticCone(), datum("x", "y", "z"));
    CHECK(report.label == Label::AffineComplement);
    CHECK(report.delta == 1);
    CHECK(report.selfIntersection == 4);
}

TEST_CASE("classify: failed hypotheses carry the first failed condition")
{
    const auto c2 = classify(quarticCone(), datum("x", "y", "z^4"));
    CHECK(c2.label == Label::HypothesisFailed);
    CHECK(c2.failed == FailedCondition::Condition2);
    CHECK(c2.condition1);
    CHECK_FALSE(c2.condition2);

    const auto c1 = classify(quarticCone(), datum("x", "x^2", "z^5"));
    CHECK(c1.label == Label::HypothesisFailed);
    CHECK(c1.failed == FailedCondition::Condition1);

    const auto same = classify(quarticCone(), datum("x", "y", "x"));
    CHECK(same.failed == FailedCondition::Condition2);
}

TEST_CASE("compound entries are parenthesized in the forcing equation")
{
    CHECK(renderForcingEquation(datum("x + y", "-y", "z^3 - 1/2*x^3")) ==
          "(x + y)*t1 + (-y)*t2 + (-1/2*x^3 + z^3) = 0");
}

TEST_CASE("rescaling f0 changes no verdict")
{
    const std::array<std::array<const char*, 3>, 4> cases{{{"x", "y", "z^3"}, {"x", "y", "z^4"}, {"x^2", "y", "z^3 + x*z^2"}, {"x", "y", "z"}}};
    for (const auto& c : cases) {
        const auto base = classify(quarticCone(), datum(c[0], c[1], c[2]));
        for (long num : {-1L, 3L, -7L}) {
            const Rational lambda(mpz_class(num), mpz_class(4));
            const auto d = makeForcingDatum(P(c[0]), P(c[1]), P(c[2]).scaled(lambda));
            const auto scaled = classify(quarticCone(), d);
            CHECK(scaled.label == base.label);
            CHECK(scaled.condition1 == base.condition1);
            CHECK(scaled.condition2 == base.condition2);
            CHECK(scaled.delta == base.delta);
        }
    }
}

TEST_CASE("classification does not depend on the monomial order")
{
    std::mt19937 rng(606);
    const std::vector<const ConeSurface*> cones{&quarticCone(), &cubicCone()};
    for (int trial = 0; trial < 40; ++trial) {
        const auto& cone = *cones[trial % 2];
        const auto d = makeForcingDatum(forcing::testing::randomHomogeneous(rng, 1 + trial % 2, 2),
                                        forcing::testing::randomHomogeneous(rng, 1 + (trial / 2) % 2, 2),
                                        forcing::testing::randomHomogeneous(rng, 1 + trial % 5, 3));
        ClassifyOptions options;
        options.oracleCheck = true;
        const auto reference = classify(cone, d, options);
        for (auto order : forcing::testing::allOrders()) {
            options.order = order;
            const auto r = classify(cone, d, options);
            CHECK(r.label == reference.label);
            CHECK(r.condition2 == reference.condition2);
        }
    }
}
