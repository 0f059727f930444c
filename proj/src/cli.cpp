#include "forcing/cli.hpp"

#include <functional>

#include <CLI11.hpp>

#include "forcing/parser.hpp"

namespace forcing {

namespace {

int exitFor(const ClassificationReport& report)
{
    return report.label == Label::HypothesisFailed ? exit_code::kHypothesisFailed : exit_code::kClassified;
}

// Maps the library's exception types onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const ProblemError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ConeError& e) {
        err << "error: cone rejected: " << e.what() << '\n';
    } catch (const DatumError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const FermatBoundsError& e) {
        err << "error: bounds: " << e.what() << '\n';
    } catch (const RingMismatch& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ResourceLimitExceeded& e) {
        err << "error: resource cap: " << e.what() << '\n';
        return exit_code::kInternalError;
    } catch (const OracleDisagreement& e) {
        err << "error: oracle disagreement: " << e.what() << '\n';
        return exit_code::kInternalError;
    }
    return exit_code::kInputError;
}

} // namespace

int cmdClassify(const ClassifyArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        LoadedProblem problem = loadProblem(args.file);
        ClassifyOptions options;
        options.order = args.order ? parseOrderName(*args.order) : problem.options.order;
        options.oracleCheck = args.oracle || problem.options.oracle;
        const auto report = classify(problem.cone, problem.datum, options);
        out << emitReport(report, args.format);
        return exitFor(report);
    });
}

int cmdFermat(long long r, long long s, ReportFormat format, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const LoadedProblem problem = fermatProblem({r, s});
        const auto report = classify(problem.cone, problem.datum);
        out << emitReport(report, format);
        return exitFor(report);
    });
}

int cmdEnumerate(long long maxR, ReportFormat format, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        std::vector<EnumeratedInstance> results;
        int status = exit_code::kClassified;
        for (const auto& instance : enumerateFermat(maxR)) {
            const LoadedProblem problem = fermatProblem(instance);
            auto report = classify(problem.cone, problem.datum);
            if (report.label == Label::HypothesisFailed)
                status = exit_code::kHypothesisFailed;
            results.push_back({instance, std::move(report)});
        }
        out << emitEnumeration(results, maxR, format);
        return status;
    });
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certify and classify forcing equations over affine cones"};
    app.require_subcommand(1);

    ClassifyArgs classifyArgs;
    bool classifyJson = false;
    std::string order;
    auto* classifyCmd = app.add_subcommand("classify", "Classify the problem described in a file");
    classifyCmd->add_option("file", classifyArgs.file, "Problem file")->required();
    classifyCmd->add_flag("--json", classifyJson, "Emit the JSON report");
    classifyCmd->add_flag("--oracle", classifyArgs.oracle, "Cross-check membership with linear algebra");
    classifyCmd->add_option("--order", order, "Monomial order: grevlex, grlex or lex");

    long long r = 0;
    long long s = 0;
    bool fermatJson = false;
    auto* fermatCmd = app.add_subcommand("fermat", "Classify x^r + y^r + z^r with (x, y, z^s)");
    fermatCmd->add_option("--r", r, "Degree of the Fermat curve")->required();
    fermatCmd->add_option("--s", s, "Degree of f0 = z^s")->required();
    fermatCmd->add_flag("--json", fermatJson, "Emit the JSON report");

    long long maxR = 0;
    bool enumerateJson = false;
    auto* enumerateCmd = app.add_subcommand("enumerate", "Classify every Fermat instance up to a degree");
    enumerateCmd->add_option("--max-r", maxR, "Largest r")->required();
    enumerateCmd->add_flag("--json", enumerateJson, "Emit JSON");

    std::vector<std::string> argv{"forcing"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargs;
    for (const auto& a : argv)
        cargs.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::kClassified;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kInputError;
    }

    auto formatOf = [](bool json) { return json ? ReportFormat::Json : ReportFormat::Text; };
    if (*classifyCmd) {
        classifyArgs.format = formatOf(classifyJson);
        if (classifyCmd->count("--order") > 0)
            classifyArgs.order = order;
        return cmdClassify(classifyArgs, out, err);
    }
    if (*fermatCmd)
        return cmdFermat(r, s, formatOf(fermatJson), out, err);
    return cmdEnumerate(maxR, formatOf(enumerateJson), out, err);
}

} // namespace forcing
