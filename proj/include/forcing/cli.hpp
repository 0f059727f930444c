#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "forcing/report.hpp"

namespace forcing {

namespace exit_code {
inline constexpr int kClassified = 0;
inline constexpr int kHypothesisFailed = 2;
inline constexpr int kInputError = 3;
inline constexpr int kInternalError = 4;
} // namespace exit_code

struct ClassifyArgs {
    std::filesystem::path file;
    ReportFormat format = ReportFormat::Text;
    bool oracle = false;
    std::optional<std::string> order;
};

int cmdClassify(const ClassifyArgs& args, std::ostream& out, std::ostream& err);
int cmdFermat(long long r, long long s, ReportFormat format, std::ostream& out, std::ostream& err);
int cmdEnumerate(long long maxR, ReportFormat format, std::ostream& out, std::ostream& err);

// Full command line without the program name, e.g. {"fermat", "--r", "4", "--s", "3"}.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace forcing
