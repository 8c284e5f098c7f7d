#include "scheme_atlas_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "scheme_atlas/families.hpp"
#include "scheme_atlas/oracle.hpp"
#include "scheme_atlas_cli/grid.hpp"
#include "scheme_atlas_cli/report.hpp"
#include "scheme_atlas_cli/suites.hpp"

namespace atlas::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ParamFlags {
    std::vector<std::pair<std::string, CLI::Option*>> options;
    std::map<std::string, long> values;

    void attach(CLI::App& app, const std::vector<std::string>& names)
    {
        for (const auto& name : names) {
            options.emplace_back(name, app.add_option("--" + name, values[name], "parameter " + name));
        }
    }

    [[nodiscard]] GridPoint given() const
    {
        GridPoint out;
        for (const auto& [name, option] : options) {
            if (option->count() > 0) {
                out.emplace_back(name, values.at(name));
            }
        }
        return out;
    }
};

Family require_family(const std::string& name)
{
    if (name.empty()) {
        throw UsageError("--family is required");
    }
    const auto family = parse_family(name);
    if (!family) {
        throw UsageError("unknown family '" + name + "'");
    }
    return *family;
}

void write_json(const Json& j, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    file << j.dump(2) << '\n';
    if (!file) {
        throw UsageError("failed writing '" + path + "'");
    }
}

Json matrix_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(m(r, c).str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(const RationalVector& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i).str());
    }
    return out;
}

Json tensor_json(const Tensor3<Rational>& t)
{
    Json out = Json::array();
    for (std::size_t a = 0; a < t.extent(); ++a) {
        Json plane = Json::array();
        for (std::size_t b = 0; b < t.extent(); ++b) {
            Json row = Json::array();
            for (std::size_t c = 0; c < t.extent(); ++c) {
                row.push_back(t(a, b, c).str());
            }
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

Json domain_json(const Domain& d)
{
    Json out = Json::array();
    for (const auto& alpha : d) {
        out.push_back(alpha.entries());
    }
    return out;
}

int cmd_tables(const std::string& family_name, const GridPoint& given, const std::string& path, std::ostream& out,
               std::ostream& err)
{
    const Family family = require_family(family_name);
    const FamilyParams params = family_params(family, given);
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SpectralTable t = make_table(params);
    Json j;
    j["family"] = std::string(to_string(family));
    Json pj = Json::object();
    for (const auto& [name, value] : given) {
        pj[name] = value;
    }
    j["params"] = std::move(pj);
    j["label"] = t.label();
    j["size"] = t.size().get_str();
    j["reduction"] = to_string(t.reduction());
    j["relations"] = domain_json(t.relations());
    j["idempotents"] = domain_json(t.idempotents());
    j["P"] = matrix_json(t.P());
    j["Q"] = matrix_json(t.Q());
    j["valencies"] = vector_json(t.valencies());
    j["multiplicities"] = vector_json(t.multiplicities());
    j["intersection_numbers"] = tensor_json(intersection_tensor(t));
    j["krein_numbers"] = tensor_json(krein_tensor(t));
    write_json(j, path, out);
    err << "tables " << params.str() << ": " << t.relations().size() << " classes\n";
    return exit_ok;
}

int cmd_dump(const std::string& family_name, const GridPoint& given, const std::string& path, std::ostream& out,
             std::ostream& err)
{
    const Family family = require_family(family_name);
    if (family != Family::nonbinary_johnson && family != Family::attenuated) {
        throw UsageError("dump supports nonbinary_johnson and attenuated only");
    }
    const FamilyParams params = family_params(family, given);
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string text;
    try {
        enforce_point_limit(point_count(params));
        const ConcreteScheme s = family == Family::attenuated
                                   ? build_attenuated_scheme(params.n, params.m, params.l, params.q)
                                   : build_nonbinary_johnson_scheme(params.r, params.n, params.k);
        std::string values;
        for (const auto& name : family_parameter_names(family)) {
            values += (values.empty() ? "" : ",") + name + "=" + std::to_string(*lookup(given, name));
        }
        text = s.dump(to_string(family), values);
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << '\n';
        return exit_size_guard;
    } catch (const OracleError& e) {
        err << "oracle: " << e.what() << '\n';
        return exit_mismatch;
    }
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream file(path);
        if (!(file << text)) {
            throw UsageError("failed writing '" + path + "'");
        }
    }
    return exit_ok;
}

struct VerifyArgs {
    std::string suite;
    std::string family;
    std::string grid;
    std::string output;
    std::size_t jobs = 0;
    SuiteOptions options;
};

int cmd_verify(const VerifyArgs& args, const GridPoint& given, std::ostream& out, std::ostream& err)
{
    const auto suite = parse_suite(args.suite);
    if (!suite) {
        throw UsageError("unknown suite '" + args.suite + "'");
    }
    static const std::vector<std::string> orders{"auto", "lex", "grlex", "grlex-reversed", "any"};
    if (std::find(orders.begin(), orders.end(), args.options.order) == orders.end()) {
        throw UsageError("unknown order '" + args.options.order + "'");
    }
    std::optional<Family> family;
    if (!args.family.empty()) {
        family = require_family(args.family);
    }

    std::vector<GridPoint> points;
    GridPoint names = given;
    if (!args.grid.empty()) {
        const auto axes = parse_grid(args.grid);
        for (const auto& axis : axes) {
            names.emplace_back(axis.name, 0);
        }
        check_point_names(*suite, family, names);
        points = expand_grid(axes, given);
    } else if (!given.empty()) {
        check_point_names(*suite, family, given);
        if (family) {
            try {
                family_params(*family, given).validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        points.push_back(given);
    } else {
        points = default_points(*suite);
        if (points.empty()) {
            throw UsageError("suite " + args.suite + " needs parameters or --grid");
        }
        check_point_names(*suite, family, points.front());
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::optional<PointReport>> results(points.size());
    std::vector<std::string> skip_reason(points.size());
    std::exception_ptr usage_failure;
    std::mutex usage_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) {
                return;
            }
            try {
                results[i] = run_point(*suite, family, points[i], args.options);
            } catch (const UsageError&) {
                std::lock_guard lock(usage_mutex);
                if (!usage_failure) {
                    usage_failure = std::current_exception();
                }
            } catch (const NotApplicable& e) {
                skip_reason[i] = std::string("not applicable: ") + e.what();
            } catch (const std::invalid_argument& e) {
                skip_reason[i] = std::string("invalid parameters: ") + e.what();
            } catch (const std::exception& e) {
                PointReport failed;
                failed.params = points[i];
                failed.error = e.what();
                results[i] = std::move(failed);
            }
        }
    };
    std::size_t jobs = args.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : args.jobs;
    jobs = std::min(jobs, std::max<std::size_t>(1, points.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    if (usage_failure) {
        std::rethrow_exception(usage_failure);
    }

    VerificationReport report;
    report.suite = args.suite;
    report.family = family ? std::string(to_string(*family)) : std::string();
    report.grid = args.grid;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (results[i]) {
            report.points.push_back(std::move(*results[i]));
        } else {
            report.skipped.push_back({points[i], skip_reason[i]});
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_json(to_json(report), args.output, out);

    const bool guard = report.size_guard_tripped();
    err << "verify " << args.suite << ": " << report.points.size() << " points run, " << report.skipped.size()
        << " skipped, " << report.checks_passed() << " checks passed, " << report.checks_failed() << " failed"
        << (guard ? ", size guard tripped" : "") << ": " << (report.verdict() ? "PASS" : "FAIL") << '\n';
    for (const auto& p : report.points) {
        if (!p.error.empty()) {
            err << "  " << (p.label.empty() ? std::string("point") : p.label) << ": " << p.error << '\n';
        }
    }
    if (guard) {
        return exit_size_guard;
    }
    return report.verdict() ? exit_ok : exit_mismatch;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact eigenmatrices, Krein numbers and verification suites for association schemes"};
    app.require_subcommand(1);

    const std::vector<std::string> family_names{"r", "n", "k", "q", "m", "l"};

    auto* tables = app.add_subcommand("tables", "Write P, Q, valencies, multiplicities and both tensors as JSON");
    std::string tables_family;
    std::string tables_output;
    ParamFlags tables_params;
    tables->add_option("--family", tables_family,
                       "hamming, johnson, bilinear, grassmann, nonbinary_johnson (nbj), attenuated");
    tables->add_option("-o,--output", tables_output, "Output file (default: stdout)");
    tables_params.attach(*tables, family_names);

    auto* dump = app.add_subcommand("dump", "Write the relation map of a combinatorial instance as text");
    std::string dump_family;
    std::string dump_output;
    ParamFlags dump_params;
    dump->add_option("--family", dump_family, "nonbinary_johnson (nbj) or attenuated");
    dump->add_option("-o,--output", dump_output, "Output file (default: stdout)");
    dump_params.attach(*dump, family_names);

    auto* verify = app.add_subcommand("verify", "Run a verification suite over parameters or a grid");
    VerifyArgs args;
    ParamFlags verify_params;
    verify->add_option("suite", args.suite, "krein, qpoly, ppoly, oracle, leonard, recurrences, identities")
        ->required();
    verify->add_option("--family", args.family, "Scheme family");
    verify->add_option("--grid", args.grid, "Ranges such as \"r=3..5,n=3..8,k=1..n-1\"");
    verify->add_option("-o,--output", args.output, "Report file (default: stdout)");
    verify->add_option("-j,--jobs", args.jobs, "Worker threads (default: hardware concurrency)");
    verify->add_flag("--detail", args.options.detail, "Keep one record per passing comparison");
    verify->add_option("--order", args.options.order, "auto, lex, grlex, grlex-reversed or any");
    verify->add_option("--base-point", args.options.base_point, "Base point of the principal module");
    verify->add_flag("--all-base-points", args.options.all_base_points, "Sweep every base point");
    verify_params.attach(*verify, family_names);
    verify_params.attach(*verify, {"N"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (*tables) {
            return cmd_tables(tables_family, tables_params.given(), tables_output, out, err);
        }
        if (*dump) {
            return cmd_dump(dump_family, dump_params.given(), dump_output, out, err);
        }
        return cmd_verify(args, verify_params.given(), out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace atlas::cli
