#include "forcing/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "forcing/parser.hpp"

namespace forcing {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Polynomial parseField(const std::string& key, const std::string& text)
{
    try {
        return parsePolynomial(text);
    } catch (const ParseError& e) {
        throw ProblemError(ProblemErrorKind::Parse, key, key + ": " + e.what());
    }
}

bool parseFlag(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "on" || value == "yes")
        return true;
    if (value == "false" || value == "off" || value == "no")
        return false;
    throw ProblemError(ProblemErrorKind::BadOption, key, key + ": expected true or false, got '" + value + "'");
}

} // namespace

ProblemFile parseProblemText(const std::string& text)
{
    ProblemFile file;
    std::map<std::string, std::string*> polys{{"h", &file.h}, {"f1", &file.f1}, {"f2", &file.f2}, {"f0", &file.f0}};
    std::map<std::string, bool> seen;

    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#')
            continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ProblemError(ProblemErrorKind::MalformedLine, {},
                               "line " + std::to_string(lineNo) + ": expected 'key = value'");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (seen[key])
            throw ProblemError(ProblemErrorKind::DuplicateKey, key, "duplicateKey(" + key + ")");
        seen[key] = true;

        if (auto it = polys.find(key); it != polys.end())
            *it->second = value;
        else if (key == "order" || key == "oracle")
            file.options[key] = value;
        else
            throw ProblemError(ProblemErrorKind::UnknownKey, key,
                               "line " + std::to_string(lineNo) + ": unknownKey(" + key + ")");
    }
    for (const char* key : {"h", "f1", "f2", "f0"}) {
        if (!seen[key])
            throw ProblemError(ProblemErrorKind::MissingKey, key, std::string("missingKey(") + key + ")");
    }
    return file;
}

MonomialOrder parseOrderName(const std::string& name)
{
    if (name == "grevlex")
        return MonomialOrder::GradedReverseLex;
    if (name == "grlex")
        return MonomialOrder::GradedLex;
    if (name == "lex")
        return MonomialOrder::Lex;
    throw ProblemError(ProblemErrorKind::BadOption, "order",
                       "order: expected grevlex, grlex or lex, got '" + name + "'");
}

LoadedProblem buildProblem(const ProblemFile& file)
{
    ProblemOptions options;
    if (auto it = file.options.find("order"); it != file.options.end())
        options.order = parseOrderName(it->second);
    if (auto it = file.options.find("oracle"); it != file.options.end())
        options.oracle = parseFlag("oracle", it->second);

    const Polynomial h = parseField("h", file.h);
    const Polynomial f1 = parseField("f1", file.f1);
    const Polynomial f2 = parseField("f2", file.f2);
    const Polynomial f0 = parseField("f0", file.f0);

    ConeSurface cone = buildCone(h);
    try {
        return LoadedProblem{std::move(cone), makeForcingDatum(f1, f2, f0), options};
    } catch (const DatumError& e) {
        throw ProblemError(ProblemErrorKind::NonHomogeneous, e.field(), e.what());
    }
}

LoadedProblem loadProblem(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ProblemError(ProblemErrorKind::Io, {}, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buildProblem(parseProblemText(buffer.str()));
}

} // namespace forcing
