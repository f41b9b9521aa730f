#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "relgas/lie_engine.hpp"

namespace relgas {

namespace {

double checked_div(double num, double den, const char* what)
{
    if (den == 0.0 || !std::isfinite(den)) {
        throw DomainError(ErrorKind::SingularDenominator, what);
    }
    return num / den;
}

} // namespace

Invariants1D invariants_1d(const ExtendedState1D& ext, const ModelConstants& constants)
{
    const GasState1D& s = ext.state;
    const double c = constants.c;
    const double cpve = c * s.p + s.v * s.e;
    const double cmv = c - s.v;
    const double cpv = c + s.v;

    Invariants1D j;
    j.J1 = checked_div((c * s.p - s.v * s.e) * cmv, cpve * cpv, "(cp + ve)(c + v) = 0");
    const double ratio = checked_div(cmv, cpv, "c + v = 0");
    if (ratio < 0.0) {
        throw DomainError(ErrorKind::NegativeRadicand, "(c - v)/(c + v) < 0");
    }
    j.J2 = checked_div(s.rho * s.p, cpve, "cp + ev = 0") * std::sqrt(ratio);

    const double c2pev2 = c * c * s.p + s.e * s.v * s.v;
    const double form = c2pev2 * ext.form.dt - s.v * (s.e + s.p) * ext.form.dx;
    j.J3 = checked_div(s.v * cpve * form, s.p * cmv * c2pev2, "p (c - v)(p c^2 + e v^2) = 0");
    return j;
}

Invariants2D invariants_2d(const ExtendedState2D& ext, const ModelConstants& constants)
{
    const GasState2D& s = ext.state;
    const double c = constants.c;
    const double q = std::hypot(s.u, s.v);
    if (!(q < c)) {
        throw DomainError(ErrorKind::SuperluminalState, "q >= c");
    }

    Invariants2D j;
    j.J1 = checked_div(s.u, s.p, "p = 0");
    j.J2 = checked_div(s.v, s.p, "p = 0");
    j.J3 = checked_div((c * s.p - s.e * q) * (c - q), (c * s.p + s.e * q) * (c + q), "(cp + eq)(c + q) = 0");
    const double numerator = s.rho * (j.J3 * (c + q) + c - q);
    j.J4 = numerator / std::sqrt(c * c - q * q);
    j.J4Printed = numerator / (c * c - q * q);
    return j;
}

std::string_view to_string(InvariantId id)
{
    switch (id) {
    case InvariantId::J1: return "J1";
    case InvariantId::J2: return "J2";
    case InvariantId::J3: return "J3";
    case InvariantId::J4: return "J4";
    case InvariantId::J4Printed: return "J4_printed";
    }
    return "?";
}

std::optional<InvariantId> invariant_from_string(std::string_view name)
{
    for (InvariantId id : {InvariantId::J1, InvariantId::J2, InvariantId::J3, InvariantId::J4,
                           InvariantId::J4Printed}) {
        if (to_string(id) == name) {
            return id;
        }
    }
    return std::nullopt;
}

double evaluate_invariant(InvariantId id, const ExtendedState1D& ext, const ModelConstants& constants)
{
    const Invariants1D j = invariants_1d(ext, constants);
    switch (id) {
    case InvariantId::J1: return j.J1;
    case InvariantId::J2: return j.J2;
    case InvariantId::J3: return j.J3;
    default: throw std::invalid_argument("the 1D triad has only J1, J2, J3");
    }
}

double evaluate_invariant(InvariantId id, const ExtendedState2D& ext, const ModelConstants& constants)
{
    const Invariants2D j = invariants_2d(ext, constants);
    switch (id) {
    case InvariantId::J1: return j.J1;
    case InvariantId::J2: return j.J2;
    case InvariantId::J3: return j.J3;
    case InvariantId::J4: return j.J4;
    case InvariantId::J4Printed: return j.J4Printed;
    }
    throw std::invalid_argument("unknown invariant");
}

namespace {

template <class Extended, class Generator>
AnnihilationReport annihilate(InvariantId which, const Extended& ext, double h, const ModelConstants& constants,
                              Generator generator)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    const auto X = generator(ext, constants);
    auto J = [&](double step) { return evaluate_invariant(which, displace(ext, X, step), constants); };
    auto central = [&](double step) { return (J(step) - J(-step)) / (2.0 * step); };

    AnnihilationReport r;
    const double plus = J(h);
    const double minus = J(-h);
    r.central = (plus - minus) / (2.0 * h);
    r.noiseFloor = std::numeric_limits<double>::epsilon() * std::max(std::abs(plus), std::abs(minus)) / h;
    // Along the straight line ext + sX the invariant is only stationary, so
    // the plain central difference carries an O(h^2) curvature term.
    r.residual = (4.0 * r.central - central(2.0 * h)) / 3.0;
    if (std::abs(r.central) <= 10.0 * r.noiseFloor) {
        // Rounding dominates at h; combine the wider steps 2h and 4h, which
        // cancels their O(h^2) truncation and sits further above the noise.
        const double d2 = central(2.0 * h);
        const double d4 = central(4.0 * h);
        r.residual = (4.0 * d2 - d4) / 3.0;
        r.usedRichardson = true;
    }
    return r;
}

} // namespace

AnnihilationReport check_annihilation(InvariantId which, const ExtendedState1D& ext, double h,
                                      const ModelConstants& constants)
{
    return annihilate(which, ext, h, constants,
                      [](const ExtendedState1D& x, const ModelConstants& k) { return generator_1d(x, k); });
}

AnnihilationReport check_annihilation(InvariantId which, const ExtendedState2D& ext, double h,
                                      const ModelConstants& constants)
{
    return annihilate(which, ext, h, constants,
                      [](const ExtendedState2D& x, const ModelConstants& k) { return generator_2d(x, k); });
}

} // namespace relgas
