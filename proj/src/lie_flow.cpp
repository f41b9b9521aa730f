#include <cmath>
#include <limits>
#include <sstream>

#include "ode.hpp"
#include "relgas/lie_engine.hpp"

namespace relgas {

void FlowSettings::validate() const
{
    if (method == FlowMethod::Rk4 && stepCount < 1) {
        throw std::invalid_argument("FlowSettings: stepCount must be >= 1");
    }
    if (method == FlowMethod::Adaptive && !(tolerance > 0.0)) {
        throw std::invalid_argument("FlowSettings: tolerance must be > 0");
    }
    if (maxSteps < 1) {
        throw std::invalid_argument("FlowSettings: maxSteps must be >= 1");
    }
}

namespace {

using Y1 = ode::Vec<6>;
using Y2 = ode::Vec<9>;

Y1 pack(const ExtendedState1D& x)
{
    return {x.state.rho, x.state.v, x.state.p, x.state.e, x.form.dt, x.form.dx};
}

ExtendedState1D unpack(const Y1& y)
{
    return {{y[0], y[1], y[2], y[3]}, {y[4], y[5]}};
}

Y2 pack(const ExtendedState2D& x)
{
    const auto& m = x.frame.m.m;
    return {x.state.rho, x.state.u, x.state.v, x.state.p, x.state.e, m[0], m[1], m[2], m[3]};
}

ExtendedState2D unpack(const Y2& y)
{
    ExtendedState2D x;
    x.state = {y[0], y[1], y[2], y[3], y[4]};
    x.frame.m = Mat2{{y[5], y[6], y[7], y[8]}};
    return x;
}

Y1 rates(const Tangent1D& t)
{
    return {t.dRho, t.dV, t.dP, t.dE, t.dDt, t.dDx};
}

Y2 rates(const Tangent2D& t)
{
    const auto& m = t.dFrame.m;
    return {t.dRho, t.dU, t.dV, t.dP, t.dE, m[0], m[1], m[2], m[3]};
}

template <class Extended, std::size_t N, class Generator>
FlowResult<Extended> integrate(const Extended& ext, double eps, const FlowSettings& settings,
                               const ModelConstants& constants, Generator generator)
{
    settings.validate();
    FlowResult<Extended> result;
    result.end = ext;
    if (eps == 0.0) {
        return result;
    }
    // Starting point must itself be in the domain.
    (void)generator(ext, constants);

    bool domainHit = false;
    auto rhs = [&](const ode::Vec<N>& y) -> ode::Vec<N> {
        ode::Vec<N> r;
        try {
            r = rates(generator(unpack(y), constants));
        }
        catch (const DomainError&) {
            domainHit = true;
            r.fill(std::numeric_limits<double>::quiet_NaN());
        }
        if (!ode::all_finite(r)) {
            domainHit = true;
        }
        return r;
    };

    const ode::Vec<N> y0 = pack(ext);
    ode::Progress progress;
    auto leftDomain = [&]() {
        std::ostringstream os;
        os.precision(17);
        os << "orbit left the valid region; last valid eps = " << progress.lastValid << " (target " << eps << ")";
        return DomainError(ErrorKind::OrbitLeftDomain, os.str());
    };

    if (settings.method == FlowMethod::Rk4) {
        const ode::Vec<N> y = ode::rk4<N>(rhs, y0, eps, settings.stepCount, progress);
        if (domainHit || progress.accepted != settings.stepCount) {
            throw leftDomain();
        }
        // Step-doubling estimate of the error of the returned endpoint.
        ode::Progress fine;
        const ode::Vec<N> y2 = ode::rk4<N>(rhs, y0, eps, 2 * settings.stepCount, fine);
        if (domainHit || fine.accepted != 2 * settings.stepCount) {
            throw leftDomain();
        }
        result.end = unpack(y);
        result.errorEstimate = ode::max_abs_diff(y, y2) * 16.0 / 15.0;
        result.acceptedSteps = progress.accepted;
        return result;
    }

    ode::AdaptiveOutcome outcome;
    const ode::Vec<N> y = ode::dopri5<N>(rhs, y0, eps, settings.tolerance, settings.maxSteps, progress, outcome);
    if (!outcome.converged) {
        if (domainHit) {
            throw leftDomain();
        }
        std::ostringstream os;
        os.precision(17);
        os << "adaptive integration stopped at eps = " << progress.lastValid << " after " << progress.accepted
           << " accepted steps";
        throw DomainError(ErrorKind::ToleranceNotMet, os.str());
    }
    result.end = unpack(y);
    result.errorEstimate = outcome.errorEstimate;
    result.acceptedSteps = progress.accepted;
    result.rejectedSteps = progress.rejected;
    return result;
}

} // namespace

FlowResult1D flow_1d(const ExtendedState1D& ext, double eps, const FlowSettings& settings,
                     const ModelConstants& constants)
{
    return integrate<ExtendedState1D, 6>(ext, eps, settings, constants,
                                         [](const ExtendedState1D& x, const ModelConstants& k) {
                                             return generator_1d(x, k);
                                         });
}

FlowResult2D flow_2d(const ExtendedState2D& ext, double eps, const FlowSettings& settings,
                     const ModelConstants& constants)
{
    return integrate<ExtendedState2D, 9>(ext, eps, settings, constants,
                                         [](const ExtendedState2D& x, const ModelConstants& k) {
                                             return generator_2d(x, k);
                                         });
}

} // namespace relgas
