#pragma once

#include "relgas/gas_core.hpp"

namespace relgas {

/// Parameters (a1, a2, a3, a4) of the four-parameter reciprocal class.
struct ReciprocalParams {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;

    bool operator==(const ReciprocalParams&) const = default;
};

/// (a1, a2, a3, a4) = (-1/eps, 1/eps, 1, 1/eps). Throws ZeroEpsilon at eps = 0.
ReciprocalParams params_from_epsilon(double eps);

// Four-parameter class. The output state is not validated; callers that need a
// physical state run validate_state on it.
GasState1D transform_state_4param(const GasState1D& state, const ReciprocalParams& params,
                                  const ModelConstants& constants);

/// dt* = (S v dx - (p + S v^2 + a2) dt)/a1, dx* = dx.
Covector1D transform_form_4param(const GasState1D& state, const ReciprocalParams& params,
                                 const ModelConstants& constants, const Covector1D& form);

// One-parameter subgroup. eps = 0 is the identity and returns the input
// bitwise. Denominators must be strictly positive, which keeps the map on the
// group component that contains the identity.
GasState1D transform_state_1param(const GasState1D& state, double eps, const ModelConstants& constants);

/// dt* = -eps (S v dx - (p + S v^2) dt) + dt, dx* = dx.
Covector1D transform_form_1param(const GasState1D& state, double eps, const ModelConstants& constants,
                                 const Covector1D& form);

} // namespace relgas
