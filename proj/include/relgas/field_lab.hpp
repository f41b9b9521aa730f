#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relgas/gas_core.hpp"
#include "relgas/grid.hpp"

namespace relgas {

/// mean + amplitude * sin(2 pi wavenumber s).
struct SmoothProfile {
    double mean = 0.0;
    double amplitude = 0.0;
    double wavenumber = 1.0;

    double operator()(double s) const;
};

/// Inputs for the steady 1D and x-only 2D exact solutions.
struct ManufactureSpec {
    SmoothProfile velocity{0.5, 0.05, 1.0};
    SmoothProfile pressure{1.0, 0.0, 1.0}; // 1D only; the 2D pressure follows from A and B

    double K = 1.0;       // mass flux
    double C = 7.0 / 3.0; // 1D momentum flux p + S v^2
    double A = 2.0;       // 2D: S u
    double B = 2.5;       // 2D: p + S u^2

    Axis x{0.0, 1.0, 128};
    Axis t{0.0, 1.0, 128}; // 1D time window
    Axis y{0.0, 1.0, 128}; // 2D transverse axis

    double margin = 1e-8; // minimum for rho, p, e, v and c - |v|
};

/// Steady solution of the 1+1 system: rho = K sqrt(c^2 - v^2)/v and
/// e = (C - p)(c^2 - v^2)/v^2 - p. Throws UnphysicalManufacture.
FieldGrid1D manufacture_steady_1d(const ManufactureSpec& spec, const ModelConstants& constants);

/// Plane solution with v = 0 and fields in x only: S = A/u, p = B - A u,
/// R = K/u. Throws UnphysicalManufacture.
FieldGrid2D manufacture_aligned_2d(const ManufactureSpec& spec, const ModelConstants& constants);

struct EquationResidual {
    std::string name;
    Array2 values; // every node; boundary nodes use one-sided stencils
    double l2 = 0.0;  // sqrt(h0 h1 sum r^2) over nodes at least two away from the boundary
    double max = 0.0; // over the same nodes
};

struct ResidualReport {
    std::array<double, 2> spacing{}; // (dt, dx) in 1D, (dx, dy) in 2D
    std::vector<EquationResidual> equations;
};

/// Order-4 divergence residuals of the two conservation laws.
ResidualReport residual_1d(const FieldGrid1D& grid, const ModelConstants& constants);
/// Order-4 residuals of the four plane conservation laws.
ResidualReport residual_2d(const FieldGrid2D& grid, const ModelConstants& constants);

/// Potential of a 1-form P d(first) + Q d(second) on a lattice.
struct PathIntegral {
    Array2 values;              // first along the second axis, then along the first
    double maxLoopDefect = 0.0; // largest |circulation| around one cell
    double maxDefectDensity = 0.0; // the same divided by the cell area
    double pathDisagreement = 0.0; // max difference to the transposed path order
};

/// Integrates the form along grid lines with the order-4 cumulative rule.
/// `anchor` is the potential at node (0, 0).
PathIntegral integrate_form(const Axis& first, const Axis& second, const Array2& P, const Array2& Q, double anchor);

struct CoordinateOptions {
    double closureTolerance = 1e-6; // on the loop defect density
};

struct StarredCoordinates1D {
    Array2 tStar;
    Array2 xStar;
    double maxLoopDefect = 0.0;
    double maxDefectDensity = 0.0;
    double pathDisagreement = 0.0;
};

struct StarredCoordinates2D {
    Array2 xStar;
    Array2 yStar;
    double maxLoopDefect = 0.0;    // worse of the two forms
    double maxDefectDensity = 0.0;
    double pathDisagreement = 0.0;
};

/// t* from dt* = (1 + eps (p + S v^2)) dt - eps S v dx, x* = x. The potential
/// is anchored to the linearization at the corner through the coordinate
/// origin, so constant states give t* exactly affine in (t, x).
/// Throws NonClosedForm when the defect density exceeds the tolerance.
StarredCoordinates1D reciprocal_coordinates_1d(const FieldGrid1D& grid, double eps, const ModelConstants& constants,
                                               const CoordinateOptions& options = {});
StarredCoordinates2D reciprocal_coordinates_2d(const FieldGrid2D& grid, double eps, const ModelConstants& constants,
                                               const CoordinateOptions& options = {});

struct TransformOptions {
    CoordinateOptions coordinates;
    int targetCount0 = 0; // starred lattice sizes; 0 keeps the source counts
    int targetCount1 = 0;
};

struct TransformedField1D {
    FieldGrid1D grid; // on the uniform starred (t*, x*) lattice
    ResidualReport residual;
    StarredCoordinates1D coordinates;
};

struct TransformedField2D {
    FieldGrid2D grid;
    ResidualReport residual;
    StarredCoordinates2D coordinates;
};

/// Pointwise map, starred coordinates, monotone cubic resampling onto the
/// largest uniform box inside the image, then the starred residuals.
/// eps = 0 returns the input grid unchanged. Throws NonClosedForm and
/// NonMonotoneCoordinates.
TransformedField1D transform_field_1d(const FieldGrid1D& grid, double eps, const ModelConstants& constants,
                                      const TransformOptions& options = {});
TransformedField2D transform_field_2d(const FieldGrid2D& grid, double eps, const ModelConstants& constants,
                                      const TransformOptions& options = {});

using GridFamily1D = std::function<FieldGrid1D(int resolution)>;
using GridFamily2D = std::function<FieldGrid2D(int resolution)>;

struct ConvergenceLevel {
    int resolution = 0;
    double h = 0.0; // source spacing along the refined axis
    std::vector<double> l2;
    std::vector<double> max;
    double maxLoopDefect = 0.0;
    double maxDefectDensity = 0.0;
};

struct ConvergenceReport {
    std::vector<std::string> equations;
    std::vector<ConvergenceLevel> levels;
    std::vector<std::optional<double>> orders; // empty entry: norms at roundoff, order not applicable
    std::optional<double> loopDefectOrder;
    double roundoffFloor = 1e-11;
};

struct ConvergenceOptions {
    TransformOptions transform;
    double roundoffFloor = 1e-11;
};

/// Least-squares slope of log(L2) against log(h) for each equation of the
/// starred residuals. Needs at least two resolutions refined by factors of 2.
ConvergenceReport convergence_study_1d(const GridFamily1D& family, const std::vector<int>& resolutions, double eps,
                                       const ModelConstants& constants, const ConvergenceOptions& options = {});
ConvergenceReport convergence_study_2d(const GridFamily2D& family, const std::vector<int>& resolutions, double eps,
                                       const ModelConstants& constants, const ConvergenceOptions& options = {});

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace relgas
