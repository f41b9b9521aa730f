#include "operations.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "relgas/field_lab.hpp"
#include "relgas/lie_engine.hpp"
#include "relgas/reciprocal_1d.hpp"
#include "relgas/reciprocal_2d.hpp"

namespace relgas::cli {

namespace {

// ---------------------------------------------------------------------------
// Reading input records.

double num(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw UsageError(std::string("missing numeric field '") + key + "'");
    }
    const Json& v = j.at(key);
    if (!v.is_number()) {
        throw UsageError(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

double num_or(const Json& j, const char* key, double fallback)
{
    return j.is_object() && j.contains(key) ? num(j, key) : fallback;
}

int int_or(const Json& j, const char* key, int fallback)
{
    if (!j.is_object() || !j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_number_integer()) {
        throw UsageError(std::string("field '") + key + "' must be an integer");
    }
    return j.at(key).get<int>();
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw UsageError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

std::vector<double> numbers(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw UsageError(std::string(what) + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw UsageError(std::string(what) + " must be an array of numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

bool is_2d(const Json& state)
{
    return state.is_object() && state.contains("u");
}

ModelConstants constants_of(const Json& input)
{
    const Json& s = field(input, "state");
    return ModelConstants{num_or(s, "c", num_or(input, "c", 1.0))};
}

ModelConstants plain_constants(const Json& input)
{
    return ModelConstants{num_or(input, "c", 1.0)};
}

GasState1D state_1d(const Json& input)
{
    const Json& s = field(input, "state");
    return {num(s, "rho"), num(s, "v"), num(s, "p"), num(s, "e")};
}

GasState2D state_2d(const Json& input)
{
    const Json& s = field(input, "state");
    return {num(s, "rho"), num(s, "u"), num(s, "v"), num(s, "p"), num(s, "e")};
}

/// (dt, dx); defaults to (1, 0).
Covector1D form_of(const Json& input)
{
    if (!input.contains("form")) {
        return {1.0, 0.0};
    }
    const Json& f = input.at("form");
    if (f.is_array()) {
        const auto v = numbers(f, "form");
        if (v.size() != 2) {
            throw UsageError("form needs two components (dt, dx)");
        }
        return {v[0], v[1]};
    }
    return {num(f, "dt"), num(f, "dx")};
}

Mat2 matrix_of(const Json& j, const char* what)
{
    const auto v = numbers(j, what);
    if (v.size() != 4) {
        throw UsageError(std::string(what) + " needs four row-major entries");
    }
    return Mat2{{v[0], v[1], v[2], v[3]}};
}

FrameMap2D frame_of(const Json& input)
{
    return input.contains("frame") ? FrameMap2D{matrix_of(input.at("frame"), "frame")} : FrameMap2D{};
}

ReciprocalParams params_of(const Json& input)
{
    const Json& p = field(input, "params");
    if (p.is_array()) {
        const auto v = numbers(p, "params");
        if (v.size() != 4) {
            throw UsageError("params needs four entries a1..a4");
        }
        return {v[0], v[1], v[2], v[3]};
    }
    return {num(p, "a1"), num(p, "a2"), num(p, "a3"), num(p, "a4")};
}

double eps_of(const Json& input)
{
    return num(input, "eps");
}

SmoothProfile profile_of(const Json& spec, const char* key, SmoothProfile fallback)
{
    if (!spec.contains(key)) {
        return fallback;
    }
    const Json& p = spec.at(key);
    return {num_or(p, "mean", fallback.mean), num_or(p, "amplitude", fallback.amplitude),
            num_or(p, "wavenumber", fallback.wavenumber)};
}

Axis axis_of(const Json& spec, const char* key, Axis fallback)
{
    if (!spec.contains(key)) {
        return fallback;
    }
    const Json& a = spec.at(key);
    return {num_or(a, "origin", fallback.origin), num_or(a, "length", fallback.length),
            int_or(a, "count", fallback.count)};
}

/// Manufacture parameters; "n" sets the node count on both axes.
ManufactureSpec spec_of(const Json& spec)
{
    ManufactureSpec s;
    if (spec.is_null()) {
        return s;
    }
    if (!spec.is_object()) {
        throw UsageError("spec must be an object");
    }
    s.velocity = profile_of(spec, "velocity", s.velocity);
    s.pressure = profile_of(spec, "pressure", s.pressure);
    s.K = num_or(spec, "K", s.K);
    s.C = num_or(spec, "C", s.C);
    s.A = num_or(spec, "A", s.A);
    s.B = num_or(spec, "B", s.B);
    s.margin = num_or(spec, "margin", s.margin);
    const int n = int_or(spec, "n", 0);
    if (n > 0) {
        s.x.count = s.t.count = s.y.count = n;
    }
    s.x = axis_of(spec, "x", s.x);
    s.t = axis_of(spec, "t", s.t);
    s.y = axis_of(spec, "y", s.y);
    return s;
}

Json spec_in(const Json& input)
{
    return input.contains("spec") ? input.at("spec") : Json();
}

std::ifstream open_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    return in;
}

FieldGrid1D grid_1d(const Json& input, const ModelConstants& k)
{
    if (input.contains("grid_file")) {
        std::ifstream in = open_file(field(input, "grid_file").get<std::string>());
        return read_csv_1d(in);
    }
    return manufacture_steady_1d(spec_of(spec_in(input)), k);
}

FieldGrid2D grid_2d(const Json& input, const ModelConstants& k)
{
    if (input.contains("grid_file")) {
        std::ifstream in = open_file(field(input, "grid_file").get<std::string>());
        return read_csv_2d(in);
    }
    return manufacture_aligned_2d(spec_of(spec_in(input)), k);
}

// ---------------------------------------------------------------------------
// Writing output records.

Json state_out(const GasState1D& s, const ModelConstants& k)
{
    return Json{{"rho", s.rho}, {"v", s.v}, {"p", s.p}, {"e", s.e}, {"c", k.c}};
}

Json state_out(const GasState2D& s, const ModelConstants& k)
{
    return Json{{"rho", s.rho}, {"u", s.u}, {"v", s.v}, {"p", s.p}, {"e", s.e}, {"c", k.c}};
}

Json matrix_out(const Mat2& m)
{
    return Json::array({m.m[0], m.m[1], m.m[2], m.m[3]});
}

Json axis_out(const Axis& a)
{
    return Json{{"origin", a.origin}, {"length", a.length}, {"count", a.count}};
}

Json range_out(const Array2& a)
{
    double lo = a.data().front();
    double hi = lo;
    for (double v : a.data()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return Json::array({lo, hi});
}

Json residual_out(const ResidualReport& r)
{
    Json eqs = Json::array();
    for (const auto& e : r.equations) {
        eqs.push_back(Json{{"name", e.name}, {"l2", e.l2}, {"max", e.max}});
    }
    return Json{{"spacing", Json::array({r.spacing[0], r.spacing[1]})}, {"equations", eqs}};
}

Json optional_out(const std::optional<double>& v)
{
    return v ? Json(*v) : Json();
}

Json annihilation_out(InvariantId id, const AnnihilationReport& r)
{
    return Json{{"invariant", std::string(to_string(id))},
                {"residual", r.residual},
                {"central", r.central},
                {"noise_floor", r.noiseFloor},
                {"richardson", r.usedRichardson}};
}

FlowSettings settings_of(const Json& input)
{
    FlowSettings s;
    const std::string method = input.value("method", std::string("rk4"));
    if (method == "rk4") {
        s.method = FlowMethod::Rk4;
    }
    else if (method == "adaptive") {
        s.method = FlowMethod::Adaptive;
    }
    else {
        throw UsageError("method must be rk4 or adaptive");
    }
    s.stepCount = int_or(input, "steps", s.stepCount);
    s.tolerance = num_or(input, "tolerance", s.tolerance);
    s.maxSteps = int_or(input, "max_steps", s.maxSteps);
    try {
        s.validate();
    }
    catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return s;
}

InvariantId invariant_of(const Json& input)
{
    const std::string name = field(input, "invariant").get<std::string>();
    const auto id = invariant_from_string(name);
    if (!id) {
        throw UsageError("unknown invariant '" + name + "'");
    }
    return *id;
}

Json limit_out(const LimitScanReport& r)
{
    Json ratios = Json::array();
    for (const auto& row : r.ratios) {
        Json out = Json::array();
        for (const auto& v : row) {
            out.push_back(optional_out(v));
        }
        ratios.push_back(out);
    }
    return Json{{"components", r.components}, {"c_values", r.cValues},     {"values", r.values},
                {"differences", r.differences}, {"expected_ratios", r.expectedRatios}, {"ratios", ratios},
                {"band", r.band},             {"certified", r.certified}};
}

Json convergence_out(const ConvergenceReport& r)
{
    Json levels = Json::array();
    for (const auto& l : r.levels) {
        levels.push_back(Json{{"resolution", l.resolution},
                              {"h", l.h},
                              {"l2", l.l2},
                              {"max", l.max},
                              {"max_loop_defect", l.maxLoopDefect},
                              {"max_defect_density", l.maxDefectDensity}});
    }
    Json orders = Json::array();
    for (const auto& o : r.orders) {
        orders.push_back(optional_out(o));
    }
    return Json{{"equations", r.equations},
                {"levels", levels},
                {"orders", orders},
                {"loop_defect_order", optional_out(r.loopDefectOrder)},
                {"roundoff_floor", r.roundoffFloor}};
}

std::vector<int> resolutions_of(const Json& input)
{
    std::vector<int> out;
    for (double v : numbers(field(input, "resolutions"), "resolutions")) {
        out.push_back(static_cast<int>(v));
    }
    return out;
}

TransformOptions transform_options_of(const Json& input)
{
    TransformOptions o;
    o.coordinates.closureTolerance = num_or(input, "closure_tolerance", o.coordinates.closureTolerance);
    return o;
}

void maybe_write_csv(const Json& input, const FieldGrid1D& g)
{
    if (input.contains("out")) {
        std::ofstream os(input.at("out").get<std::string>());
        write_csv(os, g);
    }
}

void maybe_write_csv(const Json& input, const FieldGrid2D& g)
{
    if (input.contains("out")) {
        std::ofstream os(input.at("out").get<std::string>());
        write_csv(os, g);
    }
}

// ---------------------------------------------------------------------------
// Registry.

using Operation = std::function<Json(const Json&)>;

const std::map<std::string, Operation>& registry()
{
    static const std::map<std::string, Operation> ops = {
        {"derived_1d",
         [](const Json& in) {
             const Derived1D d = derived_1d(state_1d(in), constants_of(in));
             return Json{{"gammaSq", d.gammaSq}, {"S", d.S}};
         }},
        {"derived_2d",
         [](const Json& in) {
             const Derived2D d = derived_2d(state_2d(in), constants_of(in));
             return Json{{"qSq", d.qSq}, {"Gamma", d.Gamma}, {"R", d.R}, {"S", d.S}};
         }},
        {"validate_state",
         [](const Json& in) {
             const ValidationReport r = is_2d(field(in, "state")) ? validate_state(state_2d(in), constants_of(in))
                                                                  : validate_state(state_1d(in), constants_of(in));
             Json fields = Json::array();
             for (const auto& v : r.violations) {
                 fields.push_back(v.field);
             }
             return Json{{"ok", r.ok()}, {"violations", fields}};
         }},
        {"params_from_epsilon",
         [](const Json& in) {
             const ReciprocalParams p = params_from_epsilon(eps_of(in));
             return Json{{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}, {"a4", p.a4}};
         }},
        {"transform_state_1param",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const GasState1D s = state_1d(in);
             Json out = state_out(transform_state_1param(s, eps_of(in), k), k);
             if (in.contains("form")) {
                 const Covector1D f = transform_form_1param(s, eps_of(in), k, form_of(in));
                 out["dt"] = f.dt;
                 out["dx"] = f.dx;
             }
             return out;
         }},
        {"transform_form_1param",
         [](const Json& in) {
             const Covector1D f = transform_form_1param(state_1d(in), eps_of(in), constants_of(in), form_of(in));
             return Json{{"dt", f.dt}, {"dx", f.dx}};
         }},
        {"transform_state_4param",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const GasState1D s = state_1d(in);
             Json out = state_out(transform_state_4param(s, params_of(in), k), k);
             if (in.contains("form")) {
                 const Covector1D f = transform_form_4param(s, params_of(in), k, form_of(in));
                 out["dt"] = f.dt;
                 out["dx"] = f.dx;
             }
             return out;
         }},
        {"transform_form_4param",
         [](const Json& in) {
             const Covector1D f = transform_form_4param(state_1d(in), params_of(in), constants_of(in), form_of(in));
             return Json{{"dt", f.dt}, {"dx", f.dx}};
         }},
        {"delta_1param_2d",
         [](const Json& in) { return Json{{"delta", delta_1param(state_2d(in), eps_of(in), constants_of(in)).delta}}; }},
        {"delta_4param_2d",
         [](const Json& in) {
             return Json{{"delta", delta_4param(state_2d(in), params_of(in), constants_of(in)).delta}};
         }},
        {"transform_state_1param_2d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const GasState2D s = state_2d(in);
             Json out = state_out(transform_state_1param_2d(s, eps_of(in), k), k);
             if (in.value("with_frame", false)) {
                 const FrameMap2D f = transform_frame_1param_2d(s, eps_of(in), k);
                 const JacobianReport j = jacobian_condition_2d(f);
                 out["frame"] = matrix_out(f.m);
                 out["det"] = j.det;
                 out["jacobian_ok"] = j.ok;
             }
             return out;
         }},
        {"transform_state_4param_2d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const GasState2D s = state_2d(in);
             Json out = state_out(transform_state_4param_2d(s, params_of(in), k), k);
             if (in.value("with_frame", false)) {
                 const FrameMap2D f = transform_frame_4param_2d(s, params_of(in), k, in.value("scaled", false));
                 const JacobianReport j = jacobian_condition_2d(f);
                 out["frame"] = matrix_out(f.m);
                 out["det"] = j.det;
                 out["jacobian_ok"] = j.ok;
             }
             return out;
         }},
        {"transform_frame_1param_2d",
         [](const Json& in) {
             const FrameMap2D f = transform_frame_1param_2d(state_2d(in), eps_of(in), constants_of(in));
             return Json{{"frame", matrix_out(f.m)}, {"det", f.m.det()}};
         }},
        {"transform_frame_4param_2d",
         [](const Json& in) {
             const FrameMap2D f =
                 transform_frame_4param_2d(state_2d(in), params_of(in), constants_of(in), in.value("scaled", false));
             return Json{{"frame", matrix_out(f.m)}, {"det", f.m.det()}};
         }},
        {"jacobian_condition_2d",
         [](const Json& in) {
             const JacobianReport j = jacobian_condition_2d(FrameMap2D{matrix_of(field(in, "frame"), "frame")});
             return Json{{"det", j.det}, {"ok", j.ok}};
         }},
        {"generator_1d",
         [](const Json& in) {
             const Tangent1D t = generator_1d({state_1d(in), form_of(in)}, constants_of(in));
             return Json{{"dRho", t.dRho}, {"dV", t.dV}, {"dP", t.dP}, {"dE", t.dE}, {"dDt", t.dDt}, {"dDx", t.dDx}};
         }},
        {"generator_2d",
         [](const Json& in) {
             const Tangent2D t = generator_2d({state_2d(in), frame_of(in)}, constants_of(in));
             return Json{{"dRho", t.dRho}, {"dU", t.dU},   {"dV", t.dV},
                         {"dP", t.dP},     {"dE", t.dE},   {"dFrame", matrix_out(t.dFrame)}};
         }},
        {"flow_1d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const FlowResult1D r = flow_1d({state_1d(in), form_of(in)}, eps_of(in), settings_of(in), k);
             Json out = state_out(r.end.state, k);
             out["dt"] = r.end.form.dt;
             out["dx"] = r.end.form.dx;
             out["error_estimate"] = r.errorEstimate;
             out["accepted_steps"] = r.acceptedSteps;
             out["rejected_steps"] = r.rejectedSteps;
             return out;
         }},
        {"flow_2d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const FlowResult2D r = flow_2d({state_2d(in), frame_of(in)}, eps_of(in), settings_of(in), k);
             Json out = state_out(r.end.state, k);
             out["frame"] = matrix_out(r.end.frame.m);
             out["error_estimate"] = r.errorEstimate;
             out["accepted_steps"] = r.acceptedSteps;
             out["rejected_steps"] = r.rejectedSteps;
             return out;
         }},
        {"invariants_1d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const ExtendedState1D x{state_1d(in), form_of(in)};
             const Invariants1D j = invariants_1d(x, k);
             Json out{{"J1", j.J1}, {"J2", j.J2}, {"J3", j.J3}};
             if (in.value("annihilation", false)) {
                 const double h = num_or(in, "h", 1e-4);
                 Json checks = Json::array();
                 for (InvariantId id : {InvariantId::J1, InvariantId::J2, InvariantId::J3}) {
                     checks.push_back(annihilation_out(id, check_annihilation(id, x, h, k)));
                 }
                 out["annihilation"] = checks;
             }
             return out;
         }},
        {"invariants_2d",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const ExtendedState2D x{state_2d(in), frame_of(in)};
             const Invariants2D j = invariants_2d(x, k);
             Json out{{"J1", j.J1}, {"J2", j.J2}, {"J3", j.J3}, {"J4", j.J4}, {"J4_printed", j.J4Printed}};
             if (in.value("annihilation", false)) {
                 const double h = num_or(in, "h", 1e-4);
                 Json checks = Json::array();
                 for (InvariantId id : {InvariantId::J1, InvariantId::J2, InvariantId::J3, InvariantId::J4,
                                        InvariantId::J4Printed}) {
                     checks.push_back(annihilation_out(id, check_annihilation(id, x, h, k)));
                 }
                 out["annihilation"] = checks;
             }
             return out;
         }},
        {"check_annihilation",
         [](const Json& in) {
             const ModelConstants k = constants_of(in);
             const InvariantId id = invariant_of(in);
             const double h = num_or(in, "h", 1e-4);
             if (is_2d(field(in, "state"))) {
                 return annihilation_out(id, check_annihilation(id, ExtendedState2D{state_2d(in), frame_of(in)}, h, k));
             }
             if (id == InvariantId::J4 || id == InvariantId::J4Printed) {
                 throw UsageError("the 1D invariants are J1, J2, J3");
             }
             return annihilation_out(id, check_annihilation(id, ExtendedState1D{state_1d(in), form_of(in)}, h, k));
         }},
        {"limit_scan_c",
         [](const Json& in) {
             const std::vector<double> cs = numbers(field(in, "c_values"), "c_values");
             const double band = num_or(in, "band", 0.2);
             try {
                 if (is_2d(field(in, "state"))) {
                     return limit_out(limit_scan_c(state_2d(in), eps_of(in), cs, band));
                 }
                 return limit_out(limit_scan_c(state_1d(in), eps_of(in), cs, band));
             }
             catch (const std::invalid_argument& e) {
                 throw UsageError(e.what());
             }
         }},
        {"manufacture_steady_1d",
         [](const Json& in) {
             const FieldGrid1D g = manufacture_steady_1d(spec_of(spec_in(in)), plain_constants(in));
             maybe_write_csv(in, g);
             return Json{{"t", axis_out(g.t)},        {"x", axis_out(g.x)},     {"rho", range_out(g.rho)},
                         {"v", range_out(g.v)},       {"p", range_out(g.p)},    {"e", range_out(g.e)}};
         }},
        {"manufacture_aligned_2d",
         [](const Json& in) {
             const FieldGrid2D g = manufacture_aligned_2d(spec_of(spec_in(in)), plain_constants(in));
             maybe_write_csv(in, g);
             return Json{{"x", axis_out(g.x)}, {"y", axis_out(g.y)}, {"rho", range_out(g.rho)}, {"u", range_out(g.u)},
                         {"v", range_out(g.v)}, {"p", range_out(g.p)}, {"e", range_out(g.e)}};
         }},
        {"residual_1d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             return residual_out(residual_1d(grid_1d(in, k), k));
         }},
        {"residual_2d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             return residual_out(residual_2d(grid_2d(in, k), k));
         }},
        {"reciprocal_coordinates_1d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const StarredCoordinates1D r =
                 reciprocal_coordinates_1d(grid_1d(in, k), eps_of(in), k, transform_options_of(in).coordinates);
             return Json{{"t_star", range_out(r.tStar)},
                         {"x_star", range_out(r.xStar)},
                         {"max_loop_defect", r.maxLoopDefect},
                         {"max_defect_density", r.maxDefectDensity},
                         {"path_disagreement", r.pathDisagreement}};
         }},
        {"reciprocal_coordinates_2d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const StarredCoordinates2D r =
                 reciprocal_coordinates_2d(grid_2d(in, k), eps_of(in), k, transform_options_of(in).coordinates);
             return Json{{"x_star", range_out(r.xStar)},
                         {"y_star", range_out(r.yStar)},
                         {"max_loop_defect", r.maxLoopDefect},
                         {"max_defect_density", r.maxDefectDensity},
                         {"path_disagreement", r.pathDisagreement}};
         }},
        {"transform_field_1d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const TransformedField1D r = transform_field_1d(grid_1d(in, k), eps_of(in), k, transform_options_of(in));
             maybe_write_csv(in, r.grid);
             Json out = residual_out(r.residual);
             out["t_star"] = axis_out(r.grid.t);
             out["x_star"] = axis_out(r.grid.x);
             out["max_loop_defect"] = r.coordinates.maxLoopDefect;
             out["max_defect_density"] = r.coordinates.maxDefectDensity;
             out["path_disagreement"] = r.coordinates.pathDisagreement;
             return out;
         }},
        {"transform_field_2d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const TransformedField2D r = transform_field_2d(grid_2d(in, k), eps_of(in), k, transform_options_of(in));
             maybe_write_csv(in, r.grid);
             Json out = residual_out(r.residual);
             out["x_star"] = axis_out(r.grid.x);
             out["y_star"] = axis_out(r.grid.y);
             out["max_loop_defect"] = r.coordinates.maxLoopDefect;
             out["max_defect_density"] = r.coordinates.maxDefectDensity;
             out["path_disagreement"] = r.coordinates.pathDisagreement;
             return out;
         }},
        {"convergence_study_1d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const ManufactureSpec base = spec_of(spec_in(in));
             ConvergenceOptions options;
             options.transform = transform_options_of(in);
             const auto family = [&](int n) {
                 ManufactureSpec s = base;
                 s.x.count = s.t.count = n;
                 return manufacture_steady_1d(s, k);
             };
             return convergence_out(convergence_study_1d(family, resolutions_of(in), eps_of(in), k, options));
         }},
        {"convergence_study_2d",
         [](const Json& in) {
             const ModelConstants k = plain_constants(in);
             const ManufactureSpec base = spec_of(spec_in(in));
             ConvergenceOptions options;
             options.transform = transform_options_of(in);
             const auto family = [&](int n) {
                 ManufactureSpec s = base;
                 s.x.count = s.y.count = n;
                 return manufacture_aligned_2d(s, k);
             };
             return convergence_out(convergence_study_2d(family, resolutions_of(in), eps_of(in), k, options));
         }},
    };
    return ops;
}

} // namespace

Json run_operation(const std::string& name, const Json& input)
{
    const auto& ops = registry();
    const auto it = ops.find(name);
    if (it == ops.end()) {
        throw UsageError("unknown operation '" + name + "'");
    }
    try {
        return it->second(input);
    }
    catch (const Json::exception& e) {
        throw UsageError(std::string("malformed input record: ") + e.what());
    }
}

bool has_operation(const std::string& name)
{
    return registry().count(name) != 0;
}

std::vector<std::string> operation_names()
{
    std::vector<std::string> out;
    for (const auto& [name, op] : registry()) {
        out.push_back(name);
    }
    return out;
}

Json load_record(const std::string& argument, const std::string& stdinText)
{
    std::string text;
    if (argument == "-") {
        text = stdinText;
    }
    else if (!argument.empty() && argument.front() == '{') {
        text = argument;
    }
    else {
        std::ifstream in = open_file(argument);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    Json j;
    try {
        j = Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw UsageError("expected a JSON object");
    }
    if (j.contains("cases")) {
        const Json& cases = j.at("cases");
        if (!cases.is_array() || cases.empty() || !cases.front().contains("expected")) {
            throw UsageError("fixture document has no expected record to read");
        }
        return cases.front().at("expected");
    }
    return j;
}

} // namespace relgas::cli
