#pragma once

#include "relgas/gas_core.hpp"
#include "relgas/reciprocal_1d.hpp"

namespace relgas {

/// Delta = 1 - a1^2 q^2 / (c^2 (p + a2)^2); the one-parameter form is
/// 1 - q^2 / (c^2 (eps p + 1)^2).
struct Delta2D {
    double delta = 0.0;
};

Delta2D delta_4param(const GasState2D& state, const ReciprocalParams& params, const ModelConstants& constants);
Delta2D delta_1param(const GasState2D& state, double eps, const ModelConstants& constants);

GasState2D transform_state_4param_2d(const GasState2D& state, const ReciprocalParams& params,
                                     const ModelConstants& constants);

/// Frame [[-(p+Sv^2+a2), Suv], [Suv, -(p+Su^2+a2)]] on (dx, dy). With
/// `scaled` the starred coordinates are divided by a1 (x* -> a1 x*,
/// y* -> a1 y*), which is the normalization the eps-subclass uses.
FrameMap2D transform_frame_4param_2d(const GasState2D& state, const ReciprocalParams& params,
                                     const ModelConstants& constants, bool scaled = false);

GasState2D transform_state_1param_2d(const GasState2D& state, double eps, const ModelConstants& constants);

/// I + eps [[p + S v^2, -S u v], [-S u v, p + S u^2]].
FrameMap2D transform_frame_1param_2d(const GasState2D& state, double eps, const ModelConstants& constants);

struct JacobianReport {
    double det = 0.0;
    bool ok = false; // 0 < |det| < inf
};

JacobianReport jacobian_condition_2d(const FrameMap2D& frame);

} // namespace relgas
