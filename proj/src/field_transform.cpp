#include <algorithm>
#include <cmath>
#include <sstream>

#include "relgas/field_lab.hpp"
#include "relgas/monotone_cubic.hpp"
#include "relgas/reciprocal_1d.hpp"
#include "relgas/reciprocal_2d.hpp"

namespace relgas {

namespace {

/// Integral of g over [k, k+1] of an n-point uniform line, order 4: the
/// trapezoid plus a correction built from differences.
template <class G>
double interval(G g, int k, int n, double h)
{
    double corr = 0.0;
    if (k == 0) {
        corr = -3.0 * (g(0) - g(1)) - 5.0 * (g(2) - g(1)) + (g(3) - g(1));
    }
    else if (k == n - 2) {
        const int m = n - 2;
        corr = (g(m - 2) - g(m)) - 5.0 * (g(m - 1) - g(m)) - 3.0 * (g(m + 1) - g(m));
    }
    else {
        corr = (g(k) - g(k - 1)) - (g(k + 2) - g(k + 1));
    }
    return h * (0.5 * (g(k) + g(k + 1)) + corr / 24.0);
}

std::string describe(const char* what, double value, double tolerance)
{
    std::ostringstream os;
    os.precision(6);
    os << what << " " << value << " exceeds " << tolerance;
    return os.str();
}

} // namespace

PathIntegral integrate_form(const Axis& first, const Axis& second, const Array2& P, const Array2& Q, double anchor)
{
    const int n0 = first.count;
    const int n1 = second.count;
    if (n0 < 4 || n1 < 4) {
        throw DomainError(ErrorKind::InvalidGrid, "path integration needs at least four nodes per axis");
    }
    const double h0 = first.spacing();
    const double h1 = second.spacing();

    Array2 inc0(n0 - 1, n1); // along the first axis, on line j
    Array2 inc1(n0, n1 - 1); // along the second axis, on line i
    for (int j = 0; j < n1; ++j) {
        for (int i = 0; i + 1 < n0; ++i) {
            inc0(i, j) = interval([&](int k) { return P(k, j); }, i, n0, h0);
        }
    }
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j + 1 < n1; ++j) {
            inc1(i, j) = interval([&](int k) { return Q(i, k); }, j, n1, h1);
        }
    }

    PathIntegral out;
    out.values = Array2(n0, n1);
    Array2& a = out.values;
    a(0, 0) = anchor;
    for (int j = 0; j + 1 < n1; ++j) {
        a(0, j + 1) = a(0, j) + inc1(0, j);
    }
    for (int j = 0; j < n1; ++j) {
        for (int i = 0; i + 1 < n0; ++i) {
            a(i + 1, j) = a(i, j) + inc0(i, j);
        }
    }

    Array2 b(n0, n1);
    b(0, 0) = anchor;
    for (int i = 0; i + 1 < n0; ++i) {
        b(i + 1, 0) = b(i, 0) + inc0(i, 0);
    }
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j + 1 < n1; ++j) {
            b(i, j + 1) = b(i, j) + inc1(i, j);
        }
    }
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            out.pathDisagreement = std::max(out.pathDisagreement, std::abs(a(i, j) - b(i, j)));
        }
    }

    for (int i = 0; i + 1 < n0; ++i) {
        for (int j = 0; j + 1 < n1; ++j) {
            const double loop = std::abs(inc0(i, j) + inc1(i + 1, j) - inc0(i, j + 1) - inc1(i, j));
            out.maxLoopDefect = std::max(out.maxLoopDefect, loop);
        }
    }
    out.maxDefectDensity = out.maxLoopDefect / (h0 * h1);
    return out;
}

StarredCoordinates1D reciprocal_coordinates_1d(const FieldGrid1D& grid, double eps, const ModelConstants& constants,
                                               const CoordinateOptions& options)
{
    const int n0 = grid.t.count;
    const int n1 = grid.x.count;
    StarredCoordinates1D out;
    out.tStar = Array2(n0, n1);
    out.xStar = Array2(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            out.tStar(i, j) = grid.t.at(i);
            out.xStar(i, j) = grid.x.at(j);
        }
    }
    if (eps == 0.0) {
        return out;
    }

    Array2 P(n0, n1), Q(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const GasState1D s = grid.state(i, j);
            P(i, j) = transform_form_1param(s, eps, constants, {1.0, 0.0}).dt;
            Q(i, j) = transform_form_1param(s, eps, constants, {0.0, 1.0}).dt;
        }
    }
    const double anchor = P(0, 0) * grid.t.origin + Q(0, 0) * grid.x.origin;
    PathIntegral path = integrate_form(grid.t, grid.x, P, Q, anchor);
    out.tStar = std::move(path.values);
    out.maxLoopDefect = path.maxLoopDefect;
    out.maxDefectDensity = path.maxDefectDensity;
    out.pathDisagreement = path.pathDisagreement;
    if (out.maxDefectDensity > options.closureTolerance) {
        throw DomainError(ErrorKind::NonClosedForm,
                          describe("dt* loop defect density", out.maxDefectDensity, options.closureTolerance));
    }
    return out;
}

StarredCoordinates2D reciprocal_coordinates_2d(const FieldGrid2D& grid, double eps, const ModelConstants& constants,
                                               const CoordinateOptions& options)
{
    const int n0 = grid.x.count;
    const int n1 = grid.y.count;
    StarredCoordinates2D out;
    out.xStar = Array2(n0, n1);
    out.yStar = Array2(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            out.xStar(i, j) = grid.x.at(i);
            out.yStar(i, j) = grid.y.at(j);
        }
    }
    if (eps == 0.0) {
        return out;
    }

    Array2 m00(n0, n1), m01(n0, n1), m10(n0, n1), m11(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const FrameMap2D f = transform_frame_1param_2d(grid.state(i, j), eps, constants);
            m00(i, j) = f.m(0, 0);
            m01(i, j) = f.m(0, 1);
            m10(i, j) = f.m(1, 0);
            m11(i, j) = f.m(1, 1);
        }
    }
    const double x0 = grid.x.origin;
    const double y0 = grid.y.origin;
    PathIntegral px = integrate_form(grid.x, grid.y, m00, m01, m00(0, 0) * x0 + m01(0, 0) * y0);
    PathIntegral py = integrate_form(grid.x, grid.y, m10, m11, m10(0, 0) * x0 + m11(0, 0) * y0);
    out.xStar = std::move(px.values);
    out.yStar = std::move(py.values);
    out.maxLoopDefect = std::max(px.maxLoopDefect, py.maxLoopDefect);
    out.maxDefectDensity = std::max(px.maxDefectDensity, py.maxDefectDensity);
    out.pathDisagreement = std::max(px.pathDisagreement, py.pathDisagreement);
    if (out.maxDefectDensity > options.closureTolerance) {
        throw DomainError(ErrorKind::NonClosedForm,
                          describe("frame loop defect density", out.maxDefectDensity, options.closureTolerance));
    }
    return out;
}

namespace {

struct Box {
    Axis first;
    Axis second;
};

/// Inverts the starred coordinate map (X0, X1) on the source lattice and
/// samples fields at preimages of a uniform starred box.
class Resampler {
public:
    Resampler(const Axis& a0, const Axis& a1, const Array2& X0, const Array2& X1)
        : a0_(a0), a1_(a1), X0_(X0), X1_(X1), I0_(a0, a1, X0), I1_(a0, a1, X1)
    {
    }

    struct Preimage {
        double s0 = 0.0;
        double s1 = 0.0;
        bool inside = false;
    };

    Preimage solve(double T0, double T1, double g0, double g1) const
    {
        const double h0 = a0_.spacing();
        const double h1 = a1_.spacing();
        const double tol0 = 1e-14 * std::max(1.0, std::abs(T0));
        const double tol1 = 1e-14 * std::max(1.0, std::abs(T1));
        double s0 = g0;
        double s1 = g1;
        for (int it = 0; it < 100; ++it) {
            const double r0 = I0_(s0, s1) - T0;
            const double r1 = I1_(s0, s1) - T1;
            if (std::abs(r0) <= tol0 && std::abs(r1) <= tol1) {
                return {s0, s1, contains(s0, s1)};
            }
            // Secant Jacobian of the cell holding the iterate.
            const int i = std::clamp(static_cast<int>(std::floor((s0 - a0_.origin) / h0)), 0, a0_.count - 2);
            const int j = std::clamp(static_cast<int>(std::floor((s1 - a1_.origin) / h1)), 0, a1_.count - 2);
            const double j00 = (X0_(i + 1, j) - X0_(i, j)) / h0;
            const double j01 = (X0_(i, j + 1) - X0_(i, j)) / h1;
            const double j10 = (X1_(i + 1, j) - X1_(i, j)) / h0;
            const double j11 = (X1_(i, j + 1) - X1_(i, j)) / h1;
            const double det = j00 * j11 - j01 * j10;
            if (!(std::abs(det) > 0.0)) {
                break;
            }
            const double d0 = (j11 * r0 - j01 * r1) / det;
            const double d1 = (j00 * r1 - j10 * r0) / det;
            s0 = std::clamp(s0 - d0, a0_.origin - h0, a0_.end() + h0);
            s1 = std::clamp(s1 - d1, a1_.origin - h1, a1_.end() + h1);
            if (std::abs(d0) <= 1e-16 * std::max(1.0, std::abs(s0)) &&
                std::abs(d1) <= 1e-16 * std::max(1.0, std::abs(s1))) {
                return {s0, s1, contains(s0, s1)};
            }
        }
        throw DomainError(ErrorKind::InvalidGrid, "preimage search on the starred lattice did not converge");
    }

    /// Largest uniform box inside the image whose perimeter preimages lie in
    /// the source lattice.
    Box fit_box(int count0, int count1) const
    {
        const int n0 = a0_.count;
        const int n1 = a1_.count;
        double lo0 = X0_(0, 0), hi0 = X0_(n0 - 1, 0), lo1 = X1_(0, 0), hi1 = X1_(0, n1 - 1);
        for (int j = 0; j < n1; ++j) {
            lo0 = std::max(lo0, X0_(0, j));
            hi0 = std::min(hi0, X0_(n0 - 1, j));
        }
        for (int i = 0; i < n0; ++i) {
            lo1 = std::max(lo1, X1_(i, 0));
            hi1 = std::min(hi1, X1_(i, n1 - 1));
        }
        for (int attempt = 0; attempt < 100; ++attempt) {
            if (!(hi0 > lo0) || !(hi1 > lo1)) {
                break;
            }
            const Box box{{lo0, hi0 - lo0, count0}, {lo1, hi1 - lo1, count1}};
            if (perimeter_inside(box)) {
                return box;
            }
            const double w0 = 0.005 * (hi0 - lo0);
            const double w1 = 0.005 * (hi1 - lo1);
            lo0 += w0;
            hi0 -= w0;
            lo1 += w1;
            hi1 -= w1;
        }
        throw DomainError(ErrorKind::InvalidGrid, "no uniform starred lattice fits inside the image of the grid");
    }

    /// Preimages of every node of the box in raster order.
    std::vector<Preimage> preimages(const Box& box) const
    {
        std::vector<Preimage> out;
        out.reserve(static_cast<std::size_t>(box.first.count) * static_cast<std::size_t>(box.second.count));
        double rowStart0 = a0_.origin;
        double rowStart1 = a1_.origin;
        for (int k = 0; k < box.first.count; ++k) {
            double g0 = rowStart0;
            double g1 = rowStart1;
            for (int l = 0; l < box.second.count; ++l) {
                const Preimage p = solve(box.first.at(k), box.second.at(l), g0, g1);
                if (!p.inside) {
                    throw DomainError(ErrorKind::InvalidGrid, "starred lattice node has no preimage in the grid");
                }
                out.push_back(p);
                g0 = p.s0;
                g1 = p.s1;
                if (l == 0) {
                    rowStart0 = p.s0;
                    rowStart1 = p.s1;
                }
            }
        }
        return out;
    }

private:
    bool contains(double s0, double s1) const
    {
        const double m0 = 1e-9 * a0_.spacing();
        const double m1 = 1e-9 * a1_.spacing();
        return s0 >= a0_.origin - m0 && s0 <= a0_.end() + m0 && s1 >= a1_.origin - m1 && s1 <= a1_.end() + m1;
    }

    bool perimeter_inside(const Box& box) const
    {
        auto ok = [&](int k, int l) {
            const double g0 = a0_.origin + (a0_.length * k) / (box.first.count - 1);
            const double g1 = a1_.origin + (a1_.length * l) / (box.second.count - 1);
            try {
                return solve(box.first.at(k), box.second.at(l), g0, g1).inside;
            }
            catch (const DomainError&) {
                return false;
            }
        };
        const int m0 = box.first.count - 1;
        const int m1 = box.second.count - 1;
        for (int k = 0; k <= m0; ++k) {
            if (!ok(k, 0) || !ok(k, m1)) {
                return false;
            }
        }
        for (int l = 0; l <= m1; ++l) {
            if (!ok(0, l) || !ok(m0, l)) {
                return false;
            }
        }
        return true;
    }

    Axis a0_;
    Axis a1_;
    const Array2& X0_;
    const Array2& X1_;
    TensorMonotoneCubic I0_;
    TensorMonotoneCubic I1_;
};

void require_monotone_first(const Array2& a, const char* what)
{
    for (int j = 0; j < a.n1(); ++j) {
        for (int i = 0; i + 1 < a.n0(); ++i) {
            if (!(a(i + 1, j) > a(i, j))) {
                std::ostringstream os;
                os << what << " is not strictly increasing at node (" << i << ", " << j << ")";
                throw DomainError(ErrorKind::NonMonotoneCoordinates, os.str());
            }
        }
    }
}

void require_monotone_second(const Array2& a, const char* what)
{
    for (int i = 0; i < a.n0(); ++i) {
        for (int j = 0; j + 1 < a.n1(); ++j) {
            if (!(a(i, j + 1) > a(i, j))) {
                std::ostringstream os;
                os << what << " is not strictly increasing at node (" << i << ", " << j << ")";
                throw DomainError(ErrorKind::NonMonotoneCoordinates, os.str());
            }
        }
    }
}

int pick(int requested, int fallback)
{
    return requested > 0 ? requested : fallback;
}

} // namespace

TransformedField1D transform_field_1d(const FieldGrid1D& grid, double eps, const ModelConstants& constants,
                                      const TransformOptions& options)
{
    validate_grid(grid, constants);
    TransformedField1D out;
    out.coordinates = reciprocal_coordinates_1d(grid, eps, constants, options.coordinates);
    if (eps == 0.0) {
        out.grid = grid;
        out.residual = residual_1d(grid, constants);
        return out;
    }
    require_monotone_first(out.coordinates.tStar, "t*");
    require_monotone_second(out.coordinates.xStar, "x*");

    const int n0 = grid.t.count;
    const int n1 = grid.x.count;
    Array2 rho(n0, n1), v(n0, n1), p(n0, n1), e(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const GasState1D s = transform_state_1param(grid.state(i, j), eps, constants);
            rho(i, j) = s.rho;
            v(i, j) = s.v;
            p(i, j) = s.p;
            e(i, j) = s.e;
        }
    }

    const Resampler resampler(grid.t, grid.x, out.coordinates.tStar, out.coordinates.xStar);
    const Box box = resampler.fit_box(pick(options.targetCount0, n0), pick(options.targetCount1, n1));
    const std::vector<Resampler::Preimage> pre = resampler.preimages(box);

    const TensorMonotoneCubic fRho(grid.t, grid.x, std::move(rho));
    const TensorMonotoneCubic fV(grid.t, grid.x, std::move(v));
    const TensorMonotoneCubic fP(grid.t, grid.x, std::move(p));
    const TensorMonotoneCubic fE(grid.t, grid.x, std::move(e));
    out.grid = FieldGrid1D(box.first, box.second);
    std::size_t k = 0;
    for (int i = 0; i < box.first.count; ++i) {
        for (int j = 0; j < box.second.count; ++j, ++k) {
            const auto& s = pre[k];
            out.grid.set(i, j, {fRho(s.s0, s.s1), fV(s.s0, s.s1), fP(s.s0, s.s1), fE(s.s0, s.s1)});
        }
    }
    out.residual = residual_1d(out.grid, constants);
    return out;
}

TransformedField2D transform_field_2d(const FieldGrid2D& grid, double eps, const ModelConstants& constants,
                                      const TransformOptions& options)
{
    validate_grid(grid, constants);
    TransformedField2D out;
    out.coordinates = reciprocal_coordinates_2d(grid, eps, constants, options.coordinates);
    if (eps == 0.0) {
        out.grid = grid;
        out.residual = residual_2d(grid, constants);
        return out;
    }

    const int n0 = grid.x.count;
    const int n1 = grid.y.count;
    Array2 rho(n0, n1), u(n0, n1), v(n0, n1), p(n0, n1), e(n0, n1);
    for (int i = 0; i < n0; ++i) {
        for (int j = 0; j < n1; ++j) {
            const GasState2D s0 = grid.state(i, j);
            const JacobianReport jac = jacobian_condition_2d(transform_frame_1param_2d(s0, eps, constants));
            if (!jac.ok || jac.det <= 0.0) {
                std::ostringstream os;
                os << "frame determinant is not positive at node (" << i << ", " << j << ")";
                throw DomainError(ErrorKind::NonMonotoneCoordinates, os.str());
            }
            const GasState2D s = transform_state_1param_2d(s0, eps, constants);
            rho(i, j) = s.rho;
            u(i, j) = s.u;
            v(i, j) = s.v;
            p(i, j) = s.p;
            e(i, j) = s.e;
        }
    }
    require_monotone_first(out.coordinates.xStar, "x*");
    require_monotone_second(out.coordinates.yStar, "y*");

    const Resampler resampler(grid.x, grid.y, out.coordinates.xStar, out.coordinates.yStar);
    const Box box = resampler.fit_box(pick(options.targetCount0, n0), pick(options.targetCount1, n1));
    const std::vector<Resampler::Preimage> pre = resampler.preimages(box);

    const TensorMonotoneCubic fRho(grid.x, grid.y, std::move(rho));
    const TensorMonotoneCubic fU(grid.x, grid.y, std::move(u));
    const TensorMonotoneCubic fV(grid.x, grid.y, std::move(v));
    const TensorMonotoneCubic fP(grid.x, grid.y, std::move(p));
    const TensorMonotoneCubic fE(grid.x, grid.y, std::move(e));
    out.grid = FieldGrid2D(box.first, box.second);
    std::size_t k = 0;
    for (int i = 0; i < box.first.count; ++i) {
        for (int j = 0; j < box.second.count; ++j, ++k) {
            const auto& s = pre[k];
            out.grid.set(i, j,
                         {fRho(s.s0, s.s1), fU(s.s0, s.s1), fV(s.s0, s.s1), fP(s.s0, s.s1), fE(s.s0, s.s1)});
        }
    }
    out.residual = residual_2d(out.grid, constants);
    return out;
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        mx += std::log(x[k]);
        my += std::log(y[k]);
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double dx = std::log(x[k]) - mx;
        sxy += dx * (std::log(y[k]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

namespace {

template <class Grid, class Family, class Transform>
ConvergenceReport study(const Family& family, const std::vector<int>& resolutions, const ConvergenceOptions& options,
                        Transform transform)
{
    if (resolutions.size() < 2) {
        throw DomainError(ErrorKind::InsufficientResolutions, "a convergence study needs at least two resolutions");
    }
    ConvergenceReport report;
    report.roundoffFloor = options.roundoffFloor;
    for (int n : resolutions) {
        const Grid grid = family(n);
        const auto result = transform(grid);
        ConvergenceLevel level;
        level.resolution = n;
        level.h = grid.x.spacing();
        for (const auto& eq : result.residual.equations) {
            level.l2.push_back(eq.l2);
            level.max.push_back(eq.max);
        }
        level.maxLoopDefect = result.coordinates.maxLoopDefect;
        level.maxDefectDensity = result.coordinates.maxDefectDensity;
        if (report.equations.empty()) {
            for (const auto& eq : result.residual.equations) {
                report.equations.push_back(eq.name);
            }
        }
        if (!report.levels.empty()) {
            const double ratio = report.levels.back().h / level.h;
            if (ratio < 1.9 || ratio > 2.1) {
                throw DomainError(ErrorKind::InsufficientResolutions,
                                  "resolutions must be nested with refinement factor 2");
            }
        }
        report.levels.push_back(std::move(level));
    }

    std::vector<double> hs;
    for (const auto& l : report.levels) {
        hs.push_back(l.h);
    }
    for (std::size_t e = 0; e < report.equations.size(); ++e) {
        std::vector<double> norms;
        bool resolved = true;
        for (const auto& l : report.levels) {
            norms.push_back(l.l2[e]);
            resolved = resolved && l.l2[e] > options.roundoffFloor;
        }
        report.orders.push_back(resolved ? std::optional<double>(log_log_slope(hs, norms)) : std::nullopt);
    }
    std::vector<double> defects;
    bool resolved = true;
    for (const auto& l : report.levels) {
        defects.push_back(l.maxDefectDensity);
        resolved = resolved && l.maxDefectDensity > options.roundoffFloor;
    }
    if (resolved) {
        report.loopDefectOrder = log_log_slope(hs, defects);
    }
    return report;
}

} // namespace

ConvergenceReport convergence_study_1d(const GridFamily1D& family, const std::vector<int>& resolutions, double eps,
                                       const ModelConstants& constants, const ConvergenceOptions& options)
{
    return study<FieldGrid1D>(family, resolutions, options, [&](const FieldGrid1D& g) {
        return transform_field_1d(g, eps, constants, options.transform);
    });
}

ConvergenceReport convergence_study_2d(const GridFamily2D& family, const std::vector<int>& resolutions, double eps,
                                       const ModelConstants& constants, const ConvergenceOptions& options)
{
    return study<FieldGrid2D>(family, resolutions, options, [&](const FieldGrid2D& g) {
        return transform_field_2d(g, eps, constants, options.transform);
    });
}

} // namespace relgas
