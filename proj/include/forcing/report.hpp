#pragma once

#include <string>
#include <vector>

#include "forcing/classifier.hpp"
#include "forcing/fermat.hpp"

namespace forcing {

enum class ReportFormat { Text, Json };

inline constexpr int kReportSchemaVersion = 1;

// One-sentence reading of the label, e.g. the Serre-boundary caveat.
std::string labelMeaning(const ClassificationReport& report);

// Deterministic rendering: identical reports give identical bytes. JSON
// output ends with a newline.
std::string emitReport(const ClassificationReport& report, ReportFormat format);

struct EnumeratedInstance {
    FermatInstance instance;
    ClassificationReport report;
};

std::string emitEnumeration(const std::vector<EnumeratedInstance>& instances, long long maxR, ReportFormat format);

} // namespace forcing
