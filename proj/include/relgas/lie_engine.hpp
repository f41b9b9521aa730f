#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relgas/gas_core.hpp"

namespace relgas {

// ---------------------------------------------------------------------------
// Extended spaces: a state together with the differentials it acts on.

struct ExtendedState1D {
    GasState1D state;
    Covector1D form;
};

struct ExtendedState2D {
    GasState2D state;
    FrameMap2D frame;
};

/// Rates with respect to the group parameter. dDx is identically zero.
struct Tangent1D {
    double dRho = 0.0;
    double dV = 0.0;
    double dP = 0.0;
    double dE = 0.0;
    double dDt = 0.0;
    double dDx = 0.0;
};

struct Tangent2D {
    double dRho = 0.0;
    double dU = 0.0;
    double dV = 0.0;
    double dP = 0.0;
    double dE = 0.0;
    Mat2 dFrame = Mat2::zero();
};

Tangent1D generator_1d(const ExtendedState1D& ext, const ModelConstants& constants);
Tangent2D generator_2d(const ExtendedState2D& ext, const ModelConstants& constants);

/// ext + h * X(ext), componentwise.
ExtendedState1D displace(const ExtendedState1D& ext, const Tangent1D& t, double h);
ExtendedState2D displace(const ExtendedState2D& ext, const Tangent2D& t, double h);

// ---------------------------------------------------------------------------
// Flows of the Cauchy problems in the group parameter.

enum class FlowMethod { Rk4, Adaptive };

struct FlowSettings {
    FlowMethod method = FlowMethod::Rk4;
    int stepCount = 64;       // Rk4
    double tolerance = 1e-12; // Adaptive, used as both relative and absolute
    int maxSteps = 100000;    // Adaptive

    void validate() const;
};

template <class Extended>
struct FlowResult {
    Extended end;
    double errorEstimate = 0.0;
    int acceptedSteps = 0;
    int rejectedSteps = 0;
};

using FlowResult1D = FlowResult<ExtendedState1D>;
using FlowResult2D = FlowResult<ExtendedState2D>;

/// Integrates dY/deps = X(Y) from 0 to eps. eps = 0 returns the input.
/// Leaving the subluminal region or producing non-finite values mid-orbit
/// raises OrbitLeftDomain with the last valid parameter in the message.
FlowResult1D flow_1d(const ExtendedState1D& ext, double eps, const FlowSettings& settings,
                     const ModelConstants& constants);
FlowResult2D flow_2d(const ExtendedState2D& ext, double eps, const FlowSettings& settings,
                     const ModelConstants& constants);

/// (p + S v^2) dt - S v dx, constant along 1D orbits.
double dt_rate_1d(const ExtendedState1D& ext, const ModelConstants& constants);

// ---------------------------------------------------------------------------
// Invariants.

struct Invariants1D {
    double J1 = 0.0;
    double J2 = 0.0;
    double J3 = 0.0;
};

/// J4 uses sqrt(c^2 - q^2) in the denominator; J4Printed keeps the bare
/// (c^2 - q^2), which is not annihilated by the generator and is reported as a
/// control only.
struct Invariants2D {
    double J1 = 0.0;
    double J2 = 0.0;
    double J3 = 0.0;
    double J4 = 0.0;
    double J4Printed = 0.0;
};

Invariants1D invariants_1d(const ExtendedState1D& ext, const ModelConstants& constants);
Invariants2D invariants_2d(const ExtendedState2D& ext, const ModelConstants& constants);

enum class InvariantId { J1, J2, J3, J4, J4Printed };

std::string_view to_string(InvariantId id);
std::optional<InvariantId> invariant_from_string(std::string_view name);

double evaluate_invariant(InvariantId id, const ExtendedState1D& ext, const ModelConstants& constants);
double evaluate_invariant(InvariantId id, const ExtendedState2D& ext, const ModelConstants& constants);

struct AnnihilationReport {
    double residual = 0.0;      // XJ from steps h and 2h combined to O(h^4)
    double central = 0.0;       // (J(ext + hX) - J(ext - hX)) / 2h
    double noiseFloor = 0.0;    // machine-epsilon * |J| / h
    bool usedRichardson = false; // residual came from steps 2h and 4h
};

AnnihilationReport check_annihilation(InvariantId which, const ExtendedState1D& ext, double h,
                                      const ModelConstants& constants);
AnnihilationReport check_annihilation(InvariantId which, const ExtendedState2D& ext, double h,
                                      const ModelConstants& constants);

// ---------------------------------------------------------------------------
// Large-c behaviour of the one-parameter maps.

struct LimitScanReport {
    std::vector<std::string> components;
    std::vector<double> cValues;
    std::vector<std::vector<double>> values;      // [c index][component]
    std::vector<std::vector<double>> differences; // values[k+1] - values[k]
    /// |differences[k]| / |differences[k+1]|; empty when the later difference is 0.
    std::vector<std::vector<std::optional<double>>> ratios;
    /// Ratio predicted by a leading c^-2 correction for this c list.
    std::vector<double> expectedRatios;
    double band = 0.2; // accepted relative deviation from expectedRatios
    bool certified = false;
};

LimitScanReport limit_scan_c(const GasState1D& state, double eps, const std::vector<double>& cValues,
                             double band = 0.2);
LimitScanReport limit_scan_c(const GasState2D& state, double eps, const std::vector<double>& cValues,
                             double band = 0.2);

} // namespace relgas
