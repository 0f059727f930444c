#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "forcing/classifier.hpp"
#include "forcing/cone.hpp"

namespace forcing {

enum class ProblemErrorKind { Io, MalformedLine, UnknownKey, DuplicateKey, MissingKey, Parse, NonHomogeneous, BadOption };

class ProblemError : public std::runtime_error {
public:
    ProblemError(ProblemErrorKind kind, std::string key, const std::string& what)
        : std::runtime_error(what), kind_(kind), key_(std::move(key))
    {
    }
    ProblemErrorKind kind() const { return kind_; }
    const std::string& key() const { return key_; }

private:
    ProblemErrorKind kind_;
    std::string key_;
};

// Raw contents of a problem file:
//
//   # comment
//   h  = x^4 + y^4 + z^4
//   f1 = x
//   f2 = y
//   f0 = z^3
//   order = grevlex        (optional: grevlex | grlex | lex)
//   oracle = true          (optional: true | false)
struct ProblemFile {
    std::string h;
    std::string f1;
    std::string f2;
    std::string f0;
    std::map<std::string, std::string> options;
};

struct ProblemOptions {
    MonomialOrder order = MonomialOrder::GradedReverseLex;
    bool oracle = false;
};

struct LoadedProblem {
    ConeSurface cone;
    ForcingDatum datum;
    ProblemOptions options;
};

// Throws ProblemError for structural problems.
ProblemFile parseProblemText(const std::string& text);

// Throws ProblemError (kind BadOption) for an unknown name.
MonomialOrder parseOrderName(const std::string& name);

// Parses the four polynomials, validates the cone and the datum.
// Throws ProblemError, or ConeError when h is rejected.
LoadedProblem buildProblem(const ProblemFile& file);

LoadedProblem loadProblem(const std::filesystem::path& path);

} // namespace forcing
