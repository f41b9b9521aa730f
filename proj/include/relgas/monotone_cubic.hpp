#pragma once

#include <vector>

#include "relgas/grid.hpp"

namespace relgas {

/// Shape-preserving node slope from the two neighbouring secants (weighted
/// harmonic mean, zero at extrema).
double monotone_interior_slope(double left, double right);

/// Three-point end slope for the boundary secant `near` and the next one
/// `far`, limited so the end interval stays shape-preserving.
double monotone_end_slope(double near, double far);

/// Cubic Hermite on one interval of width h at fraction theta in [0, 1].
double hermite(double f0, double f1, double d0, double d1, double h, double theta);

/// Slopes for uniformly spaced samples; n >= 3.
std::vector<double> monotone_slopes(const std::vector<double>& f, double h);

/// Tensor-product monotone cubic on a uniform lattice: monotone cubic along
/// the first axis, then along the second through the interpolated column
/// values. Reproduces node values exactly and extrapolates the end cubics
/// outside the lattice.
class TensorMonotoneCubic {
public:
    TensorMonotoneCubic(const Axis& first, const Axis& second, Array2 values);

    double operator()(double s0, double s1) const;

    const Axis& first() const { return first_; }
    const Axis& second() const { return second_; }

private:
    double column(int j, int i, double theta) const;

    Axis first_;
    Axis second_;
    Array2 values_;
    Array2 slopes_; // d/ds0 at each node
};

} // namespace relgas
