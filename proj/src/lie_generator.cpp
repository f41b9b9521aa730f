#include "relgas/lie_engine.hpp"

namespace relgas {

Tangent1D generator_1d(const ExtendedState1D& ext, const ModelConstants& constants)
{
    const GasState1D& s = ext.state;
    const double c2 = constants.c * constants.c;
    const double g2 = derived_1d(s, constants).gammaSq;
    const double v2 = s.v * s.v;

    Tangent1D t;
    t.dRho = -s.rho * v2 * s.e * g2;
    t.dV = -s.p * s.v;
    t.dP = -s.p * s.p;
    t.dE = (c2 * s.p * s.p - s.e * s.e * v2) * g2;
    t.dDt = ((c2 * s.p + s.e * v2) * ext.form.dt - s.v * (s.e + s.p) * ext.form.dx) * g2;
    t.dDx = 0.0;
    return t;
}

Tangent2D generator_2d(const ExtendedState2D& ext, const ModelConstants& constants)
{
    const GasState2D& s = ext.state;
    const double c2 = constants.c * constants.c;
    const Derived2D d = derived_2d(s, constants);
    const double g2 = 1.0 / (c2 - d.qSq);
    const double uv = s.u * s.v * (s.e + s.p);

    Tangent2D t;
    t.dRho = -s.rho * s.e * d.qSq * g2;
    t.dU = -s.p * s.u;
    t.dV = -s.p * s.v;
    t.dP = -s.p * s.p;
    t.dE = (c2 * s.p * s.p - s.e * s.e * d.qSq) * g2;

    // Rate of (dx*, dy*) as a linear map acting on the current frame.
    const Mat2 rate{{((c2 - s.u * s.u) * s.p + s.e * s.v * s.v) * g2, -uv * g2, -uv * g2,
                     ((c2 - s.v * s.v) * s.p + s.e * s.u * s.u) * g2}};
    t.dFrame = rate * ext.frame.m;
    return t;
}

ExtendedState1D displace(const ExtendedState1D& ext, const Tangent1D& t, double h)
{
    ExtendedState1D out = ext;
    out.state.rho += h * t.dRho;
    out.state.v += h * t.dV;
    out.state.p += h * t.dP;
    out.state.e += h * t.dE;
    out.form.dt += h * t.dDt;
    out.form.dx += h * t.dDx;
    return out;
}

ExtendedState2D displace(const ExtendedState2D& ext, const Tangent2D& t, double h)
{
    ExtendedState2D out = ext;
    out.state.rho += h * t.dRho;
    out.state.u += h * t.dU;
    out.state.v += h * t.dV;
    out.state.p += h * t.dP;
    out.state.e += h * t.dE;
    out.frame.m = out.frame.m + h * t.dFrame;
    return out;
}

double dt_rate_1d(const ExtendedState1D& ext, const ModelConstants& constants)
{
    const GasState1D& s = ext.state;
    const double S = derived_1d(s, constants).S;
    return (s.p + S * s.v * s.v) * ext.form.dt - S * s.v * ext.form.dx;
}

} // namespace relgas
