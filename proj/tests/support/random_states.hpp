#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "relgas/gas_core.hpp"

namespace relgas::testing {

/// Seeded physical states: rho in [0.5, 2], |v| (or q) <= 0.6, p in [0.2, 2],
/// e in [0.5, 5], c = 1.
class StateSampler {
public:
    explicit StateSampler(unsigned seed) : rng_(seed) {}

    GasState1D state_1d()
    {
        return {uniform(0.5, 2.0), uniform(-0.6, 0.6), uniform(0.2, 2.0), uniform(0.5, 5.0)};
    }

    GasState2D state_2d()
    {
        const double q = uniform(0.0, 0.6);
        const double angle = uniform(0.0, 2.0 * M_PI);
        return {uniform(0.5, 2.0), q * std::cos(angle), q * std::sin(angle), uniform(0.2, 2.0), uniform(0.5, 5.0)};
    }

    Covector1D form()
    {
        return {uniform(0.5, 1.5), uniform(-1.0, 1.0)};
    }

    Mat2 frame()
    {
        return Mat2{{uniform(0.8, 1.2), uniform(-0.2, 0.2), uniform(-0.2, 0.2), uniform(0.8, 1.2)}};
    }

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
};

inline double rel_err(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

inline double max_rel(const GasState1D& a, const GasState1D& b)
{
    return std::max({rel_err(a.rho, b.rho), rel_err(a.v, b.v), rel_err(a.p, b.p), rel_err(a.e, b.e)});
}

inline double max_rel(const GasState2D& a, const GasState2D& b)
{
    return std::max(
        {rel_err(a.rho, b.rho), rel_err(a.u, b.u), rel_err(a.v, b.v), rel_err(a.p, b.p), rel_err(a.e, b.e)});
}

inline double max_rel(const Mat2& a, const Mat2& b)
{
    double m = 0.0;
    for (int k = 0; k < 4; ++k) {
        m = std::max(m, rel_err(a.m[static_cast<std::size_t>(k)], b.m[static_cast<std::size_t>(k)]));
    }
    return m;
}

} // namespace relgas::testing
