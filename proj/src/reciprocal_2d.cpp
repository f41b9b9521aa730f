#include "relgas/reciprocal_2d.hpp"

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

Delta2D delta_4param(const GasState2D& s, const ReciprocalParams& a, const ModelConstants& constants)
{
    const double c = constants.c;
    const double pa = s.p + a.a2;
    if (pa == 0.0) {
        fail(ErrorKind::SingularDenominator, "p + a2 = 0", pa);
    }
    const double qSq = s.u * s.u + s.v * s.v;
    return {1.0 - a.a1 * a.a1 * qSq / (c * c * pa * pa)};
}

Delta2D delta_1param(const GasState2D& s, double eps, const ModelConstants& constants)
{
    const double c = constants.c;
    const double a = eps * s.p + 1.0;
    const double qSq = s.u * s.u + s.v * s.v;
    return {1.0 - qSq / (c * c * a * a)};
}

GasState2D transform_state_4param_2d(const GasState2D& s, const ReciprocalParams& a, const ModelConstants& constants)
{
    const double c = constants.c;
    const Derived2D d = derived_2d(s, constants);
    const double pa = s.p + a.a2;
    if (pa == 0.0) {
        fail(ErrorKind::SingularDenominator, "p + a2 = 0", pa);
    }
    const double delta = delta_4param(s, a, constants).delta;
    if (!(delta > 0.0)) {
        fail(ErrorKind::NegativeRadicand, "Delta <= 0", delta);
    }
    const double energyDen = pa * (c * c - d.qSq) + (s.e + s.p) * d.qSq;
    if (energyDen == 0.0) {
        fail(ErrorKind::SingularDenominator, "(p + a2)(c^2 - q^2) + (e + p) q^2 = 0", energyDen);
    }
    const double densityDen = s.p + d.S * d.qSq + a.a2;
    if (densityDen == 0.0) {
        fail(ErrorKind::SingularDenominator, "p + S q^2 + a2 = 0", densityDen);
    }

    GasState2D out;
    out.u = -a.a1 * s.u / pa;
    out.v = -a.a1 * s.v / pa;
    out.p = a.a4 - a.a1 * a.a1 * a.a3 / pa;
    out.e = a.a3 * c * c * pa * (s.e + s.p) * delta / energyDen - a.a4 + a.a1 * a.a1 * a.a3 / pa;
    out.rho = a.a3 * s.rho * c * d.Gamma * std::sqrt(delta) * pa / densityDen;
    return out;
}

FrameMap2D transform_frame_4param_2d(const GasState2D& s, const ReciprocalParams& a, const ModelConstants& constants,
                                     bool scaled)
{
    const Derived2D d = derived_2d(s, constants);
    const double suv = d.S * s.u * s.v;
    FrameMap2D frame;
    frame.m = Mat2{{-(s.p + d.S * s.v * s.v + a.a2), suv, suv, -(s.p + d.S * s.u * s.u + a.a2)}};
    if (scaled) {
        if (a.a1 == 0.0) {
            throw DomainError(ErrorKind::ZeroA1, "a1 = 0 cannot scale the starred coordinates");
        }
        frame.m = (1.0 / a.a1) * frame.m;
    }
    const double det = frame.m.det();
    if (det == 0.0 || !std::isfinite(det)) {
        fail(ErrorKind::DegenerateJacobian, "frame determinant not in (0, inf)", det);
    }
    return frame;
}

GasState2D transform_state_1param_2d(const GasState2D& s, double eps, const ModelConstants& constants)
{
    if (eps == 0.0) {
        return s;
    }
    const double c = constants.c;
    const Derived2D d = derived_2d(s, constants);
    const double a = eps * s.p + 1.0;
    if (!(a > 0.0)) {
        fail(ErrorKind::SingularDenominator, "eps p + 1 <= 0", a);
    }
    const double b = eps * (s.p + d.S * d.qSq) + 1.0;
    if (!(b > 0.0)) {
        fail(ErrorKind::SingularDenominator, "eps (p + S q^2) + 1 <= 0", b);
    }
    const double delta = delta_1param(s, eps, constants).delta;
    if (!(delta > 0.0)) {
        fail(ErrorKind::NegativeRadicand, "1 - q^2/(c^2 (eps p + 1)^2) <= 0", delta);
    }
    const double energyDen = a * (c * c - d.qSq) + eps * (s.e + s.p) * d.qSq;
    if (!(energyDen > 0.0)) {
        fail(ErrorKind::SingularDenominator, "(eps p + 1)(c^2 - q^2) + eps (e + p) q^2 <= 0", energyDen);
    }

    GasState2D out;
    out.u = s.u / a;
    out.v = s.v / a;
    out.p = s.p / a;
    out.rho = s.rho * c * d.Gamma * std::sqrt(delta) * a / b;
    out.e = c * c * a * (s.e + s.p) * delta / energyDen - s.p / a;
    return out;
}

FrameMap2D transform_frame_1param_2d(const GasState2D& s, double eps, const ModelConstants& constants)
{
    if (eps == 0.0) {
        return {};
    }
    const Derived2D d = derived_2d(s, constants);
    const double suv = d.S * s.u * s.v;
    FrameMap2D frame;
    frame.m = Mat2{{1.0 + eps * (s.p + d.S * s.v * s.v), -eps * suv, -eps * suv, 1.0 + eps * (s.p + d.S * s.u * s.u)}};
    return frame;
}

JacobianReport jacobian_condition_2d(const FrameMap2D& frame)
{
    const double det = frame.m.det();
    return {det, std::isfinite(det) && det != 0.0};
}

} // namespace relgas
