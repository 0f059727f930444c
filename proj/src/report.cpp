#include "forcing/report.hpp"

#include <sstream>

#include <json.hpp>

namespace forcing {

namespace {

using Json = nlohmann::ordered_json;

Json toJson(const ClassificationReport& report)
{
    Json j;
    j["schema"] = kReportSchemaVersion;
    j["label"] = labelSnakeCase(report.label);
    j["failed_condition"] = report.failed == FailedCondition::None ? Json(nullptr)
                                                                   : Json(failedConditionName(report.failed));
    j["conditions"] = {{"c1", report.condition1}, {"c2", report.condition2}};
    j["degrees"] = {{"d1", report.d1}, {"d2", report.d2}, {"d0", report.d0}};
    j["delta"] = report.delta;
    j["self_intersection"] = report.selfIntersection;
    j["deg_hy"] = report.degHY;
    j["normal_bundle_exponent"] = report.normalBundleExponent;
    j["det_exponent_at_m"] = {{"m", report.m}, {"value", report.detExponent}};
    j["forcing_equation"] = report.forcingEquation;
    j["cone"] = {{"h", report.coneEquation}, {"r", report.r}, {"c", report.zLeadCoefficient}, {"smooth", report.smooth}};
    return j;
}

const char* yesNo(bool b) { return b ? "true" : "false"; }

} // namespace

std::string labelMeaning(const ClassificationReport& report)
{
    switch (report.label) {
    case Label::CounterexampleNotStein:
        return "W - H is not Stein, yet (W - H) meets every analytic surface of W in a Stein space";
    case Label::AffineComplement:
        return "P(V) is an ample divisor of P(V'); its complement is affine, hence W - H is Stein";
    case Label::SerreBoundary:
        return "not affine; Steinness not decided by this criterion";
    case Label::HypothesisFailed:
        if (report.failed == FailedCondition::Condition1)
            return "V(f1, f2) on X is larger than the vertex P";
        return "forcing equation admits a section near P; no Steinness claim";
    }
    return {};
}

std::string emitReport(const ClassificationReport& report, ReportFormat format)
{
    if (format == ReportFormat::Json)
        return toJson(report).dump(2) + "\n";

    std::ostringstream os;
    os << "forcing equation: " << report.forcingEquation << '\n'
       << "cone: h = " << report.coneEquation << " (r = " << report.r << ", c = " << report.zLeadCoefficient
       << ", smooth = " << yesNo(report.smooth) << ")\n"
       << "degrees: d1 = " << report.d1 << ", d2 = " << report.d2 << ", d0 = " << report.d0 << '\n'
       << "condition 1, V(f1, f2) = P: " << yesNo(report.condition1) << '\n'
       << "condition 2, f0 not in (f1, f2) at P: " << yesNo(report.condition2) << '\n'
       << "delta = " << report.delta << '\n'
       << "deg H_Y = " << report.degHY << '\n'
       << "self-intersection = " << report.selfIntersection << '\n'
       << "normal bundle exponent = " << report.normalBundleExponent << '\n'
       << "kernel bundle exponent at m = " << report.m << ": " << report.kernelExponent << '\n'
       << "det exponent at m = " << report.m << ": " << report.detExponent << '\n'
       << "label: " << labelName(report.label);
    if (report.label == Label::HypothesisFailed)
        os << '(' << failedConditionName(report.failed) << ')';
    os << " - " << labelMeaning(report) << '\n';
    return os.str();
}

std::string emitEnumeration(const std::vector<EnumeratedInstance>& instances, long long maxR, ReportFormat format)
{
    if (format == ReportFormat::Json) {
        Json j;
        j["schema"] = kReportSchemaVersion;
        j["max_r"] = maxR;
        j["count"] = instances.size();
        j["instances"] = Json::array();
        for (const auto& e : instances)
            j["instances"].push_back({{"r", e.instance.r}, {"s", e.instance.s}, {"report", toJson(e.report)}});
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& e : instances) {
        os << "r = " << e.instance.r << ", s = " << e.instance.s << ": " << labelName(e.report.label)
           << ", delta = " << e.report.delta << ", self-intersection = " << e.report.selfIntersection << '\n';
    }
    os << instances.size() << " instances with 4 <= r <= " << maxR << '\n';
    return os.str();
}

} // namespace forcing
