#pragma once

#include <array>
#include <string>
#include <vector>

#include "relgas/errors.hpp"

namespace relgas {

/// Nondimensional model constants. The light speed is a runtime value so that
/// large-c scans are ordinary parameter sweeps.
struct ModelConstants {
    double c = 1.0;
};

struct GasState1D {
    double rho = 0.0;
    double v = 0.0;
    double p = 0.0;
    double e = 0.0;

    bool operator==(const GasState1D&) const = default;
};

struct GasState2D {
    double rho = 0.0;
    double u = 0.0;
    double v = 0.0;
    double p = 0.0;
    double e = 0.0;

    bool operator==(const GasState2D&) const = default;
};

/// gammaSq = 1/(c^2 - v^2), S = (e + p) gammaSq.
struct Derived1D {
    double gammaSq = 0.0;
    double S = 0.0;
};

struct Derived2D {
    double qSq = 0.0;
    double Gamma = 0.0; // 1/sqrt(c^2 - q^2)
    double R = 0.0;     // rho * Gamma
    double S = 0.0;     // (e + p)/(c^2 - q^2)
};

/// Components of the 1-form pair (dt, dx) attached to a 1D state.
struct Covector1D {
    double dt = 0.0;
    double dx = 0.0;

    bool operator==(const Covector1D&) const = default;
};

/// Row-major 2x2 matrix.
struct Mat2 {
    std::array<double, 4> m{1.0, 0.0, 0.0, 1.0};

    static Mat2 identity() { return {}; }
    static Mat2 zero() { return Mat2{{0.0, 0.0, 0.0, 0.0}}; }

    double operator()(int row, int col) const { return m[static_cast<std::size_t>(2 * row + col)]; }
    double& operator()(int row, int col) { return m[static_cast<std::size_t>(2 * row + col)]; }

    double det() const { return m[0] * m[3] - m[1] * m[2]; }

    bool operator==(const Mat2&) const = default;
};

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator*(double s, const Mat2& a);
Mat2 transpose(const Mat2& a);
Mat2 rotation(double theta);

/// Linear map (dx, dy) -> (dx*, dy*) acting on column vectors.
struct FrameMap2D {
    Mat2 m;

    bool operator==(const FrameMap2D&) const = default;
};

Derived1D derived_1d(const GasState1D& state, const ModelConstants& constants);
Derived2D derived_2d(const GasState2D& state, const ModelConstants& constants);

struct Violation {
    std::string field;   // "rho", "p", "e", "e+p", "|v|", "q", "c"
    std::string message; // human readable, includes the offending value
    double value = 0.0;
};

/// Empty list means the state is physical.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_state(const GasState1D& state, const ModelConstants& constants);
ValidationReport validate_state(const GasState2D& state, const ModelConstants& constants);

} // namespace relgas
