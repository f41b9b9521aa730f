#include "relgas/gas_core.hpp"

#include <cmath>
#include <sstream>

namespace relgas {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SuperluminalState: return "SuperluminalState";
    case ErrorKind::ZeroEpsilon: return "ZeroEpsilon";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::ZeroA1: return "ZeroA1";
    case ErrorKind::DegenerateJacobian: return "DegenerateJacobian";
    case ErrorKind::OrbitLeftDomain: return "OrbitLeftDomain";
    case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorKind::UnphysicalManufacture: return "UnphysicalManufacture";
    case ErrorKind::NonClosedForm: return "NonClosedForm";
    case ErrorKind::NonMonotoneCoordinates: return "NonMonotoneCoordinates";
    case ErrorKind::InsufficientResolutions: return "InsufficientResolutions";
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    }
    return "UnknownError";
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        }
    }
    return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) {
        r.m[k] = a.m[k] + b.m[k];
    }
    return r;
}

Mat2 operator*(double s, const Mat2& a)
{
    Mat2 r;
    for (std::size_t k = 0; k < 4; ++k) {
        r.m[k] = s * a.m[k];
    }
    return r;
}

Mat2 transpose(const Mat2& a)
{
    return Mat2{{a.m[0], a.m[2], a.m[1], a.m[3]}};
}

Mat2 rotation(double theta)
{
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    return Mat2{{cs, -sn, sn, cs}};
}

namespace {

std::string describe(const char* what, double value)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " (value " << value << ")";
    return os.str();
}

} // namespace

Derived1D derived_1d(const GasState1D& state, const ModelConstants& constants)
{
    const double c = constants.c;
    if (!(std::abs(state.v) < c)) {
        throw DomainError(ErrorKind::SuperluminalState, describe("|v| >= c", state.v));
    }
    Derived1D d;
    d.gammaSq = 1.0 / (c * c - state.v * state.v);
    d.S = (state.e + state.p) * d.gammaSq;
    return d;
}

Derived2D derived_2d(const GasState2D& state, const ModelConstants& constants)
{
    const double c = constants.c;
    Derived2D d;
    d.qSq = state.u * state.u + state.v * state.v;
    if (!(d.qSq < c * c)) {
        throw DomainError(ErrorKind::SuperluminalState, describe("q^2 >= c^2", d.qSq));
    }
    const double gap = c * c - d.qSq;
    d.Gamma = 1.0 / std::sqrt(gap);
    d.R = state.rho * d.Gamma;
    d.S = (state.e + state.p) / gap;
    return d;
}

namespace {

void check_common(ValidationReport& report, double rho, double p, double e, double c)
{
    auto flag = [&](const char* field, const char* msg, double value) {
        report.violations.push_back({field, describe(msg, value), value});
    };
    if (!(c > 0.0)) {
        flag("c", "c <= 0", c);
    }
    if (!(rho > 0.0)) {
        flag("rho", "rho <= 0", rho);
    }
    if (!(p > 0.0)) {
        flag("p", "p <= 0", p);
    }
    if (!(e > 0.0)) {
        flag("e", "e <= 0", e);
    }
    if (!(e + p > 0.0)) {
        flag("e+p", "e + p <= 0", e + p);
    }
}

} // namespace

ValidationReport validate_state(const GasState1D& state, const ModelConstants& constants)
{
    ValidationReport report;
    check_common(report, state.rho, state.p, state.e, constants.c);
    if (!(std::abs(state.v) < constants.c)) {
        report.violations.push_back({"|v|", describe("|v| >= c", state.v), state.v});
    }
    return report;
}

ValidationReport validate_state(const GasState2D& state, const ModelConstants& constants)
{
    ValidationReport report;
    check_common(report, state.rho, state.p, state.e, constants.c);
    const double q = std::hypot(state.u, state.v);
    if (!(q < constants.c)) {
        report.violations.push_back({"q", describe("q >= c", q), q});
    }
    return report;
}

} // namespace relgas
