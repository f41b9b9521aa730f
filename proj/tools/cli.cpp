#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "operations.hpp"
#include "relgas/errors.hpp"
#include "relgas/grid.hpp"

namespace relgas::cli {

namespace {

constexpr double kEmitTolerance = 1e-12;

struct Options {
    std::string format = "json";
    std::string state;
    double eps = 0.0;
    std::vector<double> params;
    std::vector<double> form;
    std::vector<double> frameIn;
    bool withFrame = false;
    bool scaled = false;
    std::string method = "rk4";
    int steps = 64;
    double tolerance = 1e-12;
    bool annihilation = false;
    double h = 1e-4;
    std::vector<double> cValues;
    double band = 0.2;
    int dim = 1;
    std::string spec;
    int n = 0;
    std::string out;
    std::string grid;
    double closureTolerance = 1e-6;
    std::vector<int> resolutions;
    std::string fixtureFile;
};

struct Emission {
    std::string name;
    std::string operation;
    Json input;
};

void add_format(CLI::App* cmd, Options& o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

/// The state part of a loaded record; embedded dt/dx become the form.
Json split_state(const Json& record, Json& input)
{
    Json state = Json::object();
    for (const char* key : {"rho", "u", "v", "p", "e", "c"}) {
        if (record.contains(key)) {
            state[key] = record.at(key);
        }
    }
    if (record.contains("dt") && record.contains("dx") && !input.contains("form")) {
        input["form"] = Json{{"dt", record.at("dt")}, {"dx", record.at("dx")}};
    }
    return state;
}

Json state_input(const Options& o, const std::string& stdinText)
{
    Json input = Json::object();
    if (!o.form.empty()) {
        if (o.form.size() != 2) {
            throw UsageError("--form takes dt,dx");
        }
        input["form"] = Json{{"dt", o.form[0]}, {"dx", o.form[1]}};
    }
    const Json record = load_record(o.state, stdinText);
    Json ordered = Json::object();
    ordered["state"] = split_state(record, input);
    for (auto it = input.begin(); it != input.end(); ++it) {
        ordered[it.key()] = it.value();
    }
    return ordered;
}

bool state_is_2d(const Json& input)
{
    return input.at("state").contains("u");
}

Json spec_argument(const Options& o)
{
    Json spec = o.spec.empty() ? Json::object() : load_record(o.spec, "");
    if (o.n > 0) {
        spec["n"] = o.n;
    }
    return spec;
}

int grid_dimension(const Options& o)
{
    if (o.grid.empty()) {
        return o.dim;
    }
    std::ifstream in(o.grid);
    std::string header;
    if (!in || !std::getline(in, header)) {
        throw UsageError("cannot read grid file '" + o.grid + "'");
    }
    const int d = csv_dimension(header);
    if (d == 0) {
        throw UsageError("unrecognized grid header in '" + o.grid + "'");
    }
    return d;
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows)
{
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
        }
    }
    else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            flatten(v[k], prefix + "[" + std::to_string(k) + "]", rows);
        }
    }
    else {
        rows.emplace_back(prefix, dump17(v, 0));
    }
}

/// Table rendering of a structured document; derived from the JSON, never
/// the other way round.
std::string as_table(const Json& doc)
{
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) {
        width = std::max(width, r.first.size());
    }
    std::string text;
    for (const auto& [key, value] : rows) {
        text += key;
        text.append(width + 2 - key.size(), ' ');
        text += value;
        text += '\n';
    }
    return text;
}

void print(std::ostream& out, const Json& doc, const std::string& format)
{
    if (format == "table") {
        out << as_table(doc);
    }
    else {
        out << dump17(doc) << '\n';
    }
}

int emit(const Emission& e, const Options& o, std::ostream& out)
{
    const Json result = run_operation(e.operation, e.input);
    Json kase = Json::object();
    kase["name"] = e.name;
    kase["operation"] = e.operation;
    kase["input"] = e.input;
    kase["expected"] = result;
    kase["abs_tol"] = kEmitTolerance;
    kase["rel_tol"] = kEmitTolerance;
    kase["provenance"] = "derived";
    Json doc = Json::object();
    doc["schema"] = "1";
    doc["cases"] = Json::array({kase});
    print(out, doc, o.format);
    return Success;
}

// ---------------------------------------------------------------------------
// Fixture replay.

struct Mismatch {
    std::string path;
    Json expected;
    Json actual;
};

void compare(const Json& expected, const Json& actual, double absTol, double relTol, const std::string& path,
             std::vector<Mismatch>& out)
{
    if (expected.is_number()) {
        if (!actual.is_number()) {
            out.push_back({path, expected, actual});
            return;
        }
        const double e = expected.get<double>();
        const double a = actual.get<double>();
        if (!(std::abs(a - e) <= absTol + relTol * std::abs(e))) {
            out.push_back({path, expected, actual});
        }
        return;
    }
    if (expected.is_object()) {
        if (!actual.is_object()) {
            out.push_back({path, expected, actual});
            return;
        }
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            const std::string sub = path + "." + it.key();
            if (!actual.contains(it.key())) {
                out.push_back({sub, it.value(), Json()});
                continue;
            }
            compare(it.value(), actual.at(it.key()), absTol, relTol, sub, out);
        }
        return;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) {
            out.push_back({path, expected, actual});
            return;
        }
        for (std::size_t k = 0; k < expected.size(); ++k) {
            compare(expected[k], actual[k], absTol, relTol, path + "[" + std::to_string(k) + "]", out);
        }
        return;
    }
    if (expected != actual) {
        out.push_back({path, expected, actual});
    }
}

void check_case_shape(const Json& c, std::size_t index)
{
    const std::string where = "case " + std::to_string(index);
    for (const char* key : {"name", "operation", "input", "expected", "abs_tol", "rel_tol", "provenance"}) {
        if (!c.contains(key)) {
            throw UsageError(where + ": missing '" + key + "'");
        }
    }
    if (!c.at("operation").is_string() || !has_operation(c.at("operation").get<std::string>())) {
        throw UsageError(where + ": unknown operation " + c.at("operation").dump());
    }
    for (const char* key : {"abs_tol", "rel_tol"}) {
        if (!c.at(key).is_number() || !(c.at(key).get<double>() > 0.0)) {
            throw UsageError(where + ": " + key + " must be a positive number");
        }
    }
    const Json& prov = c.at("provenance");
    if (!prov.is_string() || (prov != "paper" && prov != "trivial" && prov != "derived" && prov != "symbolic")) {
        throw UsageError(where + ": provenance must be paper, trivial, derived or symbolic");
    }
    if (!c.at("input").is_object() || !c.at("expected").is_object()) {
        throw UsageError(where + ": input and expected must be objects");
    }
}

int check_fixtures(const Options& o, std::ostream& out)
{
    std::ifstream in(o.fixtureFile);
    if (!in) {
        throw UsageError("cannot open fixture file '" + o.fixtureFile + "'");
    }
    Json doc;
    try {
        doc = Json::parse(in);
    }
    catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed fixture file: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema", std::string()) != "1" || !doc.contains("cases") ||
        !doc.at("cases").is_array()) {
        throw UsageError("fixture file must declare schema \"1\" and a cases array");
    }
    const Json& cases = doc.at("cases");
    for (std::size_t k = 0; k < cases.size(); ++k) {
        check_case_shape(cases[k], k);
    }

    Json failures = Json::array();
    std::size_t passed = 0;
    for (const Json& c : cases) {
        const Json& expected = c.at("expected");
        Json actual;
        try {
            actual = run_operation(c.at("operation").get<std::string>(), c.at("input"));
        }
        catch (const DomainError& e) {
            actual = Json{{"error", std::string(to_string(e.kind()))}};
        }
        std::vector<Mismatch> found;
        compare(expected, actual, c.at("abs_tol").get<double>(), c.at("rel_tol").get<double>(), "expected", found);
        if (found.empty()) {
            ++passed;
            continue;
        }
        for (const auto& m : found) {
            failures.push_back(Json{{"case", c.at("name")}, {"path", m.path}, {"expected", m.expected},
                                    {"actual", m.actual}});
        }
    }
    Json report = Json::object();
    report["schema"] = "1";
    report["file"] = o.fixtureFile;
    report["total"] = cases.size();
    report["passed"] = passed;
    report["failed"] = cases.size() - passed;
    report["mismatches"] = failures;
    print(out, report, o.format);
    return passed == cases.size() ? Success : FixtureMismatch;
}

} // namespace

int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Reciprocal transformations of relativistic gasdynamics", "relgas"};
    app.require_subcommand(1);

    auto* t1 = app.add_subcommand("transform1d", "Map a 1+1 state (and optional dt, dx form)");
    t1->add_option("--state", o.state, "State JSON, file path, or - for stdin")->required();
    auto* t1eps = t1->add_option("--eps", o.eps, "Group parameter");
    auto* t1par = t1->add_option("--params", o.params, "a1,a2,a3,a4")->delimiter(',')->expected(4);
    t1eps->excludes(t1par);
    t1->add_option("--form", o.form, "dt,dx")->delimiter(',')->expected(2);
    add_format(t1, o);

    auto* t2 = app.add_subcommand("transform2d", "Map a plane state and optionally its frame");
    t2->add_option("--state", o.state, "State JSON, file path, or - for stdin")->required();
    auto* t2eps = t2->add_option("--eps", o.eps, "Group parameter");
    auto* t2par = t2->add_option("--params", o.params, "a1,a2,a3,a4")->delimiter(',')->expected(4);
    t2eps->excludes(t2par);
    t2->add_flag("--frame", o.withFrame, "Also report the frame map and its determinant");
    t2->add_flag("--scaled", o.scaled, "Divide the four-parameter frame by a1");
    add_format(t2, o);

    auto* fl = app.add_subcommand("flow", "Integrate the generator from 0 to eps");
    fl->add_option("--state", o.state, "State JSON, file path, or - for stdin")->required();
    fl->add_option("--eps", o.eps, "Group parameter")->required();
    fl->add_option("--form", o.form, "dt,dx (1D)")->delimiter(',')->expected(2);
    fl->add_option("--frame", o.frameIn, "m00,m01,m10,m11 (2D)")->delimiter(',')->expected(4);
    fl->add_option("--method", o.method, "rk4 or adaptive")->check(CLI::IsMember({"rk4", "adaptive"}));
    fl->add_option("--steps", o.steps, "RK4 step count");
    fl->add_option("--tolerance", o.tolerance, "Adaptive tolerance");
    add_format(fl, o);

    auto* inv = app.add_subcommand("invariants", "Evaluate the invariants of the one-parameter group");
    inv->add_option("--state", o.state, "State JSON, file path, or - for stdin")->required();
    inv->add_option("--form", o.form, "dt,dx (1D)")->delimiter(',')->expected(2);
    inv->add_option("--frame", o.frameIn, "m00,m01,m10,m11 (2D)")->delimiter(',')->expected(4);
    inv->add_flag("--annihilation", o.annihilation, "Also check X J = 0 by finite differences");
    inv->add_option("--step", o.h, "Finite-difference step");
    add_format(inv, o);

    auto* ls = app.add_subcommand("limit-scan", "Differences of the maps as c grows");
    ls->add_option("--state", o.state, "State JSON, file path, or - for stdin")->required();
    ls->add_option("--eps", o.eps, "Group parameter")->required();
    ls->add_option("--c", o.cValues, "Ascending c values")->delimiter(',')->required();
    ls->add_option("--band", o.band, "Accepted relative deviation of the ratios");
    add_format(ls, o);

    auto* mf = app.add_subcommand("manufacture", "Write an exact steady solution grid");
    mf->add_option("--dim", o.dim, "1 or 2")->check(CLI::IsMember({1, 2}));
    mf->add_option("--spec", o.spec, "Manufacture spec JSON or file");
    mf->add_option("--n", o.n, "Nodes per axis");
    mf->add_option("--out", o.out, "CSV output path");
    add_format(mf, o);

    auto* vf = app.add_subcommand("verify-field", "Transform a grid and report starred residuals");
    vf->add_option("--dim", o.dim, "1 or 2 when no grid file is given")->check(CLI::IsMember({1, 2}));
    auto* vfGrid = vf->add_option("--grid", o.grid, "Grid CSV");
    auto* vfSpec = vf->add_option("--spec", o.spec, "Manufacture spec JSON or file");
    vfGrid->excludes(vfSpec);
    vf->add_option("--n", o.n, "Nodes per axis for a manufactured grid");
    vf->add_option("--eps", o.eps, "Group parameter")->required();
    vf->add_option("--out", o.out, "Starred grid CSV output path");
    vf->add_option("--closure-tolerance", o.closureTolerance, "Loop defect density tolerance");
    add_format(vf, o);

    auto* cv = app.add_subcommand("convergence", "Observed order of the starred residuals");
    cv->add_option("--dim", o.dim, "1 or 2")->check(CLI::IsMember({1, 2}));
    cv->add_option("--spec", o.spec, "Manufacture spec JSON or file");
    cv->add_option("--resolutions", o.resolutions, "Node counts, refined by 2")->delimiter(',')->required();
    cv->add_option("--eps", o.eps, "Group parameter")->required();
    add_format(cv, o);

    auto* fx = app.add_subcommand("fixtures", "Golden fixture files");
    fx->require_subcommand(1);
    auto* fxCheck = fx->add_subcommand("check", "Replay every case of a fixture file");
    fxCheck->add_option("file", o.fixtureFile, "Fixture JSON")->required();
    add_format(fxCheck, o);

    std::vector<std::string> argvStore{"relgas"};
    argvStore.insert(argvStore.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argvStore) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Success : UsageFailure;
    }

    std::string stdinText;
    if (o.state == "-") {
        stdinText.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        if (t1->parsed() || t2->parsed()) {
            if (o.params.empty() && (t1->parsed() ? t1eps : t2eps)->count() == 0) {
                throw UsageError("one of --eps or --params is required");
            }
            Json input = state_input(o, stdinText);
            const bool two = t2->parsed();
            if (two != state_is_2d(input)) {
                throw UsageError(two ? "transform2d needs a state with u and v" : "transform1d needs a state without u");
            }
            if (o.params.empty()) {
                input["eps"] = o.eps;
            }
            else {
                input["params"] = o.params;
            }
            if (two) {
                input["with_frame"] = o.withFrame;
                if (!o.params.empty()) {
                    input["scaled"] = o.scaled;
                }
            }
            std::string op = o.params.empty() ? "transform_state_1param" : "transform_state_4param";
            if (two) {
                op += "_2d";
            }
            return emit({two ? "transform2d" : "transform1d", op, input}, o, out);
        }
        if (fl->parsed()) {
            Json input = state_input(o, stdinText);
            const bool two = state_is_2d(input);
            if (!o.frameIn.empty()) {
                input["frame"] = o.frameIn;
            }
            input["eps"] = o.eps;
            input["method"] = o.method;
            input["steps"] = o.steps;
            input["tolerance"] = o.tolerance;
            return emit({"flow", two ? "flow_2d" : "flow_1d", input}, o, out);
        }
        if (inv->parsed()) {
            Json input = state_input(o, stdinText);
            const bool two = state_is_2d(input);
            if (!o.frameIn.empty()) {
                input["frame"] = o.frameIn;
            }
            input["annihilation"] = o.annihilation;
            input["h"] = o.h;
            return emit({"invariants", two ? "invariants_2d" : "invariants_1d", input}, o, out);
        }
        if (ls->parsed()) {
            Json input = state_input(o, stdinText);
            input["eps"] = o.eps;
            input["c_values"] = o.cValues;
            input["band"] = o.band;
            return emit({"limit-scan", "limit_scan_c", input}, o, out);
        }
        if (mf->parsed()) {
            Json input = Json::object();
            input["spec"] = spec_argument(o);
            if (!o.out.empty()) {
                input["out"] = o.out;
            }
            return emit({"manufacture", o.dim == 2 ? "manufacture_aligned_2d" : "manufacture_steady_1d", input}, o,
                        out);
        }
        if (vf->parsed()) {
            const int dim = grid_dimension(o);
            Json input = Json::object();
            if (!o.grid.empty()) {
                input["grid_file"] = o.grid;
            }
            else {
                input["spec"] = spec_argument(o);
            }
            input["eps"] = o.eps;
            input["closure_tolerance"] = o.closureTolerance;
            if (!o.out.empty()) {
                input["out"] = o.out;
            }
            return emit({"verify-field", dim == 2 ? "transform_field_2d" : "transform_field_1d", input}, o, out);
        }
        if (cv->parsed()) {
            Json input = Json::object();
            input["spec"] = spec_argument(o);
            input["resolutions"] = o.resolutions;
            input["eps"] = o.eps;
            return emit({"convergence", o.dim == 2 ? "convergence_study_2d" : "convergence_study_1d", input}, o, out);
        }
        if (fxCheck->parsed()) {
            return check_fixtures(o, out);
        }
    }
    catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageFailure;
    }
    catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return UsageFailure;
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return DomainFailure;
    }
    err << app.help();
    return UsageFailure;
}

} // namespace relgas::cli
