#pragma once

// Small fixed-size explicit integrators for the group-parameter flows.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace relgas::ode {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
Vec<N> axpy(const Vec<N>& y, double h, const Vec<N>& k)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        r[i] = y[i] + h * k[i];
    }
    return r;
}

template <std::size_t N>
bool all_finite(const Vec<N>& y)
{
    return std::all_of(y.begin(), y.end(), [](double x) { return std::isfinite(x); });
}

template <std::size_t N>
double max_abs_diff(const Vec<N>& a, const Vec<N>& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

/// Progress marker so callers can report where an orbit failed.
struct Progress {
    double lastValid = 0.0;
    int accepted = 0;
    int rejected = 0;
};

template <std::size_t N, class Rhs>
Vec<N> rk4(Rhs&& f, Vec<N> y, double tEnd, int steps, Progress& progress)
{
    const double h = tEnd / steps;
    for (int n = 0; n < steps; ++n) {
        const Vec<N> k1 = f(y);
        const Vec<N> k2 = f(axpy(y, 0.5 * h, k1));
        const Vec<N> k3 = f(axpy(y, 0.5 * h, k2));
        const Vec<N> k4 = f(axpy(y, h, k3));
        Vec<N> next = y;
        for (std::size_t i = 0; i < N; ++i) {
            next[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        if (!all_finite(next)) {
            return y; // caller inspects progress.accepted
        }
        y = next;
        progress.lastValid = (n + 1 == steps) ? tEnd : (n + 1) * h;
        ++progress.accepted;
    }
    return y;
}

struct AdaptiveOutcome {
    bool converged = true;
    double errorEstimate = 0.0; // sum of accepted local error norms
};

/// Dormand-Prince 5(4) with the standard PI-free step controller.
template <std::size_t N, class Rhs>
Vec<N> dopri5(Rhs&& f, Vec<N> y, double tEnd, double tol, int maxSteps, Progress& progress,
              AdaptiveOutcome& outcome)
{
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double dir = tEnd < 0.0 ? -1.0 : 1.0;
    const double span = std::abs(tEnd);
    double t = 0.0;
    double h = std::min(span, 1e-2 * std::max(span, 1e-3));
    Vec<N> k1 = f(y);

    for (int step = 0; step < maxSteps; ++step) {
        if (t >= span) {
            return y;
        }
        const bool last = h >= span - t;
        h = std::min(h, span - t);
        if (h <= 1e-14 * std::max(span, 1.0)) {
            outcome.converged = false;
            return y;
        }
        const double hs = dir * h;
        Vec<N> tmp;
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * a21 * k1[i];
        const Vec<N> k2 = f(tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a31 * k1[i] + a32 * k2[i]);
        const Vec<N> k3 = f(tmp);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + hs * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const Vec<N> k4 = f(tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const Vec<N> k5 = f(tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + hs * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        const Vec<N> k6 = f(tmp);
        Vec<N> yNew;
        for (std::size_t i = 0; i < N; ++i)
            yNew[i] = y[i] + hs * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        const Vec<N> k7 = f(yNew);
        if (!all_finite(k2) || !all_finite(k3) || !all_finite(k4) || !all_finite(k5) || !all_finite(k6) ||
            !all_finite(k7)) {
            // A stage left the domain of the vector field; retry with a shorter step.
            ++progress.rejected;
            h *= 0.25;
            continue;
        }

        double errSq = 0.0;
        double errAbs = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double local =
                hs * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(yNew[i]));
            errSq += (local / scale) * (local / scale);
            errAbs = std::max(errAbs, std::abs(local));
        }
        const double err = std::sqrt(errSq / static_cast<double>(N));

        if (err <= 1.0) {
            t = last ? span : t + h;
            y = yNew;
            k1 = k7;
            progress.lastValid = dir * t;
            ++progress.accepted;
            outcome.errorEstimate += errAbs;
        }
        else {
            ++progress.rejected;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    outcome.converged = t >= span;
    return y;
}

} // namespace relgas::ode
