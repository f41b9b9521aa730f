#include <cmath>
#include <numbers>
#include <sstream>

#include "relgas/field_lab.hpp"

namespace relgas {

double SmoothProfile::operator()(double s) const
{
    return mean + amplitude * std::sin(2.0 * std::numbers::pi * wavenumber * s);
}

namespace {

void require_margin(double value, double margin, const char* what, double at)
{
    if (!(value > margin)) {
        std::ostringstream os;
        os.precision(17);
        os << what << " = " << value << " at x = " << at << " is below the margin " << margin;
        throw DomainError(ErrorKind::UnphysicalManufacture, os.str());
    }
}

/// Sum of squares in a fixed pairwise order, independent of any threading.
double pairwise_sum(const double* x, std::size_t n)
{
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            s += x[k];
        }
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

/// Order-4 derivative of one line of n >= 5 samples at index k. Written in
/// differences so constant data gives exactly zero.
template <class F>
double d4(F f, int k, int n, double h)
{
    if (k >= 2 && k <= n - 3) {
        return ((f(k - 2) - f(k + 2)) + 8.0 * (f(k + 1) - f(k - 1))) / (12.0 * h);
    }
    if (k == 0) {
        return (48.0 * (f(1) - f(0)) - 36.0 * (f(2) - f(0)) + 16.0 * (f(3) - f(0)) - 3.0 * (f(4) - f(0))) / (12.0 * h);
    }
    if (k == 1) {
        return (-3.0 * (f(0) - f(1)) + 18.0 * (f(2) - f(1)) - 6.0 * (f(3) - f(1)) + (f(4) - f(1))) / (12.0 * h);
    }
    const int m = n - 1;
    if (k == m) {
        return -(48.0 * (f(m - 1) - f(m)) - 36.0 * (f(m - 2) - f(m)) + 16.0 * (f(m - 3) - f(m)) -
                 3.0 * (f(m - 4) - f(m))) /
               (12.0 * h);
    }
    return -(-3.0 * (f(m) - f(m - 1)) + 18.0 * (f(m - 2) - f(m - 1)) - 6.0 * (f(m - 3) - f(m - 1)) +
             (f(m - 4) - f(m - 1))) /
           (12.0 * h);
}

/// d/d(first) of a plus d/d(second) of b.
Array2 divergence(const Array2& a, const Array2& b, double h0, double h1)
{
    const int n0 = a.n0();
    const int n1 = a.n1();
    Array2 out(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const double da = d4([&](int k) { return a(k, j); }, i, n0, h0);
            const double db = d4([&](int k) { return b(i, k); }, j, n1, h1);
            out(i, j) = da + db;
        }
    }
    return out;
}

EquationResidual summarize(std::string name, Array2 values, double h0, double h1)
{
    EquationResidual r;
    r.name = std::move(name);
    std::vector<double> squares;
    for (int i = 2; i <= values.n0() - 3; ++i) {
        for (int j = 2; j <= values.n1() - 3; ++j) {
            const double v = values(i, j);
            squares.push_back(v * v);
            r.max = std::max(r.max, std::abs(v));
        }
    }
    r.l2 = std::sqrt(h0 * h1 * pairwise_sum(squares.data(), squares.size()));
    r.values = std::move(values);
    return r;
}

} // namespace

FieldGrid1D manufacture_steady_1d(const ManufactureSpec& spec, const ModelConstants& constants)
{
    const double c = constants.c;
    if (!(c > 0.0)) {
        throw DomainError(ErrorKind::UnphysicalManufacture, "c must be positive");
    }
    FieldGrid1D g(spec.t, spec.x);
    for (int j = 0; j < g.x.count; ++j) {
        const double x = g.x.at(j);
        const double v = spec.velocity(x);
        const double p = spec.pressure(x);
        require_margin(v, spec.margin, "v", x);
        require_margin(c - v, spec.margin, "c - v", x);
        require_margin(p, spec.margin, "p", x);
        const double w = c * c - v * v;
        GasState1D s;
        s.v = v;
        s.p = p;
        s.rho = spec.K * std::sqrt(w) / v;
        s.e = (spec.C - p) * w / (v * v) - p;
        require_margin(s.rho, spec.margin, "rho", x);
        require_margin(s.e, spec.margin, "e", x);
        require_margin(s.e + p, spec.margin, "e + p", x);
        for (int i = 0; i < g.t.count; ++i) {
            g.set(i, j, s);
        }
    }
    validate_grid(g, constants);
    return g;
}

FieldGrid2D manufacture_aligned_2d(const ManufactureSpec& spec, const ModelConstants& constants)
{
    const double c = constants.c;
    if (!(c > 0.0)) {
        throw DomainError(ErrorKind::UnphysicalManufacture, "c must be positive");
    }
    FieldGrid2D g(spec.x, spec.y);
    for (int i = 0; i < g.x.count; ++i) {
        const double x = g.x.at(i);
        const double u = spec.velocity(x);
        require_margin(u, spec.margin, "u", x);
        require_margin(c - u, spec.margin, "c - u", x);
        const double S = spec.A / u;
        const double R = spec.K / u;
        GasState2D s;
        s.u = u;
        s.v = 0.0;
        s.p = spec.B - spec.A * u;
        s.e = S * (c * c - u * u) - s.p;
        s.rho = R * std::sqrt(c * c - u * u);
        require_margin(s.p, spec.margin, "p", x);
        require_margin(s.e, spec.margin, "e", x);
        require_margin(s.rho, spec.margin, "rho", x);
        for (int j = 0; j < g.y.count; ++j) {
            g.set(i, j, s);
        }
    }
    validate_grid(g, constants);
    return g;
}

ResidualReport residual_1d(const FieldGrid1D& g, const ModelConstants& constants)
{
    const double c = constants.c;
    const int n0 = g.t.count;
    const int n1 = g.x.count;
    Array2 massT(n0, n1), massX(n0, n1), momT(n0, n1), momX(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const double v = g.v(i, j);
            const double w = c * c - v * v;
            const double root = std::sqrt(w);
            const double ep = g.e(i, j) + g.p(i, j);
            massT(i, j) = g.rho(i, j) * c / root;
            massX(i, j) = g.rho(i, j) * c * v / root;
            momT(i, j) = ep * v / w;
            momX(i, j) = ep * v * v / w + g.p(i, j);
        }
    }
    const double ht = g.t.spacing();
    const double hx = g.x.spacing();
    ResidualReport r;
    r.spacing = {ht, hx};
    r.equations.push_back(summarize("mass", divergence(massT, massX, ht, hx), ht, hx));
    r.equations.push_back(summarize("momentum", divergence(momT, momX, ht, hx), ht, hx));
    return r;
}

ResidualReport residual_2d(const FieldGrid2D& g, const ModelConstants& constants)
{
    const double c = constants.c;
    const int n0 = g.x.count;
    const int n1 = g.y.count;
    Array2 Ru(n0, n1), Rv(n0, n1), Pxx(n0, n1), Pxy(n0, n1), Pyy(n0, n1), Su(n0, n1), Sv(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const double u = g.u(i, j);
            const double v = g.v(i, j);
            const double w = c * c - (u * u + v * v);
            const double R = g.rho(i, j) / std::sqrt(w);
            const double S = (g.e(i, j) + g.p(i, j)) / w;
            const double p = g.p(i, j);
            Ru(i, j) = R * u;
            Rv(i, j) = R * v;
            Pxx(i, j) = p + S * u * u;
            Pxy(i, j) = S * u * v;
            Pyy(i, j) = p + S * v * v;
            Su(i, j) = S * u;
            Sv(i, j) = S * v;
        }
    }
    const double hx = g.x.spacing();
    const double hy = g.y.spacing();
    ResidualReport r;
    r.spacing = {hx, hy};
    r.equations.push_back(summarize("mass", divergence(Ru, Rv, hx, hy), hx, hy));
    r.equations.push_back(summarize("momentum_x", divergence(Pxx, Pxy, hx, hy), hx, hy));
    r.equations.push_back(summarize("momentum_y", divergence(Pxy, Pyy, hx, hy), hx, hy));
    r.equations.push_back(summarize("energy", divergence(Su, Sv, hx, hy), hx, hy));
    return r;
}

} // namespace relgas
