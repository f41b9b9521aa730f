#include "relgas/monotone_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relgas {

namespace {

int sign(double x)
{
    return (x > 0.0) - (x < 0.0);
}

/// Cell index and fraction for s on the axis; the end cells are extended.
std::pair<int, double> locate(const Axis& axis, double s)
{
    const double h = axis.spacing();
    const double u = (s - axis.origin) / h;
    int k = static_cast<int>(std::floor(u));
    k = std::clamp(k, 0, axis.count - 2);
    return {k, (s - axis.at(k)) / h};
}

} // namespace

double monotone_interior_slope(double left, double right)
{
    if (left * right <= 0.0) {
        return 0.0;
    }
    return 2.0 / (1.0 / left + 1.0 / right);
}

double monotone_end_slope(double near, double far)
{
    const double d = 0.5 * (3.0 * near - far);
    if (sign(d) != sign(near)) {
        return 0.0;
    }
    if (sign(near) != sign(far) && std::abs(d) > 3.0 * std::abs(near)) {
        return 3.0 * near;
    }
    return d;
}

double hermite(double f0, double f1, double d0, double d1, double h, double theta)
{
    const double om = 1.0 - theta;
    const double h00 = (1.0 + 2.0 * theta) * om * om;
    const double h10 = theta * om * om;
    const double h01 = theta * theta * (3.0 - 2.0 * theta);
    const double h11 = theta * theta * (theta - 1.0);
    return h00 * f0 + h10 * h * d0 + h01 * f1 + h11 * h * d1;
}

std::vector<double> monotone_slopes(const std::vector<double>& f, double h)
{
    const std::size_t n = f.size();
    if (n < 3) {
        throw std::invalid_argument("monotone slopes need at least three samples");
    }
    std::vector<double> secant(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        secant[k] = (f[k + 1] - f[k]) / h;
    }
    std::vector<double> d(n);
    d[0] = monotone_end_slope(secant[0], secant[1]);
    for (std::size_t k = 1; k + 1 < n; ++k) {
        d[k] = monotone_interior_slope(secant[k - 1], secant[k]);
    }
    d[n - 1] = monotone_end_slope(secant[n - 2], secant[n - 3]);
    return d;
}

TensorMonotoneCubic::TensorMonotoneCubic(const Axis& first, const Axis& second, Array2 values)
    : first_(first), second_(second), values_(std::move(values)), slopes_(first.count, second.count)
{
    if (first_.count < 3 || second_.count < 3) {
        throw std::invalid_argument("interpolation lattice needs at least three nodes per axis");
    }
    std::vector<double> line(static_cast<std::size_t>(first_.count));
    for (int j = 0; j < second_.count; ++j) {
        for (int i = 0; i < first_.count; ++i) {
            line[static_cast<std::size_t>(i)] = values_(i, j);
        }
        const std::vector<double> d = monotone_slopes(line, first_.spacing());
        for (int i = 0; i < first_.count; ++i) {
            slopes_(i, j) = d[static_cast<std::size_t>(i)];
        }
    }
}

double TensorMonotoneCubic::column(int j, int i, double theta) const
{
    return hermite(values_(i, j), values_(i + 1, j), slopes_(i, j), slopes_(i + 1, j), first_.spacing(), theta);
}

double TensorMonotoneCubic::operator()(double s0, double s1) const
{
    const auto [i, t0] = locate(first_, s0);
    const auto [k, t1] = locate(second_, s1);
    const int n = second_.count;
    const double h = second_.spacing();

    // Column values at k-1 .. k+2, clipped to the lattice.
    const int lo = std::max(k - 1, 0);
    const int hi = std::min(k + 2, n - 1);
    double g[4];
    for (int m = lo; m <= hi; ++m) {
        g[m - lo] = column(m, i, t0);
    }
    auto at = [&](int m) { return g[m - lo]; };
    auto secant = [&](int m) { return (at(m + 1) - at(m)) / h; };
    auto slope = [&](int m) {
        if (m == 0) {
            return monotone_end_slope(secant(0), secant(1));
        }
        if (m == n - 1) {
            return monotone_end_slope(secant(n - 2), secant(n - 3));
        }
        return monotone_interior_slope(secant(m - 1), secant(m));
    };
    return hermite(at(k), at(k + 1), slope(k), slope(k + 1), h, t1);
}

} // namespace relgas
