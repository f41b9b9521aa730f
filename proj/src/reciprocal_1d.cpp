#include "relgas/reciprocal_1d.hpp"

#include <cmath>
#include <sstream>

namespace relgas {

namespace {

[[noreturn]] void fail(ErrorKind kind, const char* what, double value)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " (value " << value << ")";
    throw DomainError(kind, os.str());
}

} // namespace

ReciprocalParams params_from_epsilon(double eps)
{
    if (eps == 0.0) {
        throw DomainError(ErrorKind::ZeroEpsilon, "eps = 0 has no four-parameter representative");
    }
    const double inv = 1.0 / eps;
    return {-inv, inv, 1.0, inv};
}

GasState1D transform_state_4param(const GasState1D& s, const ReciprocalParams& a, const ModelConstants& constants)
{
    const double c = constants.c;
    const Derived1D d = derived_1d(s, constants);

    const double pa = s.p + a.a2;
    if (pa == 0.0) {
        fail(ErrorKind::SingularDenominator, "p + a2 = 0", pa);
    }
    const double den = s.p + d.S * s.v * s.v + a.a2;
    if (den == 0.0) {
        fail(ErrorKind::SingularDenominator, "p + S v^2 + a2 = 0", den);
    }
    // Delta = 1 - a1^2 v^2 / (c^2 (p + a2)^2); the radical sqrt((p+a2)^2 - a1^2 v^2/c^2)
    // is written as (p + a2) sqrt(Delta), the same factorization the 2D class uses.
    const double delta = 1.0 - a.a1 * a.a1 * s.v * s.v / (c * c * pa * pa);
    if (!(delta > 0.0)) {
        fail(ErrorKind::NegativeRadicand, "(p + a2)^2 - a1^2 v^2/c^2 <= 0", delta);
    }
    const double beta = std::sqrt(1.0 - s.v * s.v / (c * c));

    GasState1D out;
    out.rho = a.a3 * s.rho * pa * std::sqrt(delta) / (beta * den);
    out.v = -a.a1 * s.v / pa;
    out.p = a.a4 - a.a1 * a.a1 * a.a3 / pa;
    out.e = a.a3 * d.S * pa * delta * c * c / den - a.a4 + a.a1 * a.a1 * a.a3 / pa;
    return out;
}

Covector1D transform_form_4param(const GasState1D& s, const ReciprocalParams& a, const ModelConstants& constants,
                                 const Covector1D& form)
{
    if (a.a1 == 0.0) {
        throw DomainError(ErrorKind::ZeroA1, "a1 = 0 leaves dt* undefined");
    }
    const Derived1D d = derived_1d(s, constants);
    const double sv = d.S * s.v;
    return {(sv * form.dx - (s.p + sv * s.v + a.a2) * form.dt) / a.a1, form.dx};
}

GasState1D transform_state_1param(const GasState1D& s, double eps, const ModelConstants& constants)
{
    if (eps == 0.0) {
        return s;
    }
    const double c = constants.c;
    const Derived1D d = derived_1d(s, constants);

    const double a = eps * s.p + 1.0;
    if (!(a > 0.0)) {
        fail(ErrorKind::SingularDenominator, "eps p + 1 <= 0", a);
    }
    const double b = eps * (s.p + d.S * s.v * s.v) + 1.0;
    if (!(b > 0.0)) {
        fail(ErrorKind::SingularDenominator, "eps (p + S v^2) + 1 <= 0", b);
    }
    const double vc2 = s.v * s.v / (c * c);
    const double radicand = a * a - vc2;
    if (!(radicand > 0.0)) {
        fail(ErrorKind::NegativeRadicand, "(eps p + 1)^2 - v^2/c^2 <= 0", radicand);
    }

    GasState1D out;
    out.rho = s.rho * std::sqrt(radicand) / (b * std::sqrt(1.0 - vc2));
    out.v = s.v / a;
    out.p = s.p / a;
    out.e = d.S * (c * c * a * a - s.v * s.v) / (a * b) - s.p / a;
    return out;
}

Covector1D transform_form_1param(const GasState1D& s, double eps, const ModelConstants& constants,
                                 const Covector1D& form)
{
    if (eps == 0.0) {
        return form;
    }
    const Derived1D d = derived_1d(s, constants);
    const double sv = d.S * s.v;
    return {-eps * (sv * form.dx - (s.p + sv * s.v) * form.dt) + form.dt, form.dx};
}

} // namespace relgas
