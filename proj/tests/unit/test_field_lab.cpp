#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

#include "random_states.hpp"
#include "relgas/field_lab.hpp"
#include "relgas/monotone_cubic.hpp"
#include "relgas/reciprocal_1d.hpp"
#include "relgas/reciprocal_2d.hpp"

using namespace relgas;
using relgas::testing::StateSampler;

namespace {

const ModelConstants unit{1.0};
const GasState1D stateA{1.0, 0.5, 1.0, 3.0};
const GasState2D stateB{1.0, 0.3, 0.4, 1.0, 3.0};
constexpr double twoPi = 6.283185307179586;

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    }
    catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected a domain error");
    return ErrorKind::InvalidGrid;
}

FieldGrid1D constant_1d(const GasState1D& s, int n)
{
    FieldGrid1D g(Axis{0.0, 1.0, n}, Axis{0.0, 1.0, n});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.set(i, j, s);
        }
    }
    return g;
}

FieldGrid2D constant_2d(const GasState2D& s, int n)
{
    FieldGrid2D g(Axis{0.0, 1.0, n}, Axis{0.0, 1.0, n});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.set(i, j, s);
        }
    }
    return g;
}

double max_abs(const Array2& a)
{
    double m = 0.0;
    for (double v : a.data()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// Smooth physical field that is not a solution.
GasState2D wavy(double x, double y)
{
    return {1.0 + 0.1 * std::sin(twoPi * x) * std::cos(twoPi * y), 0.3 + 0.05 * std::cos(twoPi * (x + y)),
            0.1 * std::sin(twoPi * y), 1.0 + 0.2 * std::cos(twoPi * x), 3.0 + 0.3 * std::sin(twoPi * (x - y))};
}

// Exact plane solution varying along the direction at angle theta.
GasState2D oblique(double x, double y, double theta)
{
    const double K = 1.0, A = 2.0, B = 2.5;
    const double xi = x * std::cos(theta) + y * std::sin(theta);
    const double u = 0.5 + 0.05 * std::sin(twoPi * xi);
    const double p = B - A * u;
    const double gammaInv = std::sqrt(1.0 - u * u);
    return {K / u * gammaInv, u * std::cos(theta), u * std::sin(theta), p, A / u * (1.0 - u * u) - p};
}

FieldGrid2D sample_2d(int n, const std::function<GasState2D(double, double)>& f)
{
    FieldGrid2D g(Axis{0.0, 1.0, n}, Axis{0.0, 1.0, n});
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.set(i, j, f(g.x.at(i), g.y.at(j)));
        }
    }
    return g;
}

double simpson(const std::function<double(double)>& f, double a, double b, int intervals)
{
    const double h = (b - a) / intervals;
    double sum = f(a) + f(b);
    for (int k = 1; k < intervals; ++k) {
        sum += f(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * h / 3.0;
}

} // namespace

TEST_CASE("manufactured 1D solution")
{
    ManufactureSpec spec;
    spec.x.count = 16;
    spec.t.count = 12;
    const FieldGrid1D g = manufacture_steady_1d(spec, unit);
    CHECK(g.rho.n0() == 12);
    CHECK(g.rho.n1() == 16);
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 16; ++j) {
            const GasState1D s = g.state(i, j);
            const double gSq = 1.0 / (1.0 - s.v * s.v);
            CHECK(s.rho * std::sqrt(gSq) * s.v == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(s.p + (s.e + s.p) * gSq * s.v * s.v == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
            CHECK(g.state(0, j) == s);
        }
    }
    // With v = 0.5 and p = 1 the state is A.
    spec.velocity.amplitude = 0.0;
    const GasState1D a = manufacture_steady_1d(spec, unit).state(3, 4);
    CHECK(a.rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(a.e == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("manufactured 2D solution")
{
    ManufactureSpec spec;
    spec.x.count = 16;
    spec.y.count = 10;
    const FieldGrid2D g = manufacture_aligned_2d(spec, unit);
    CHECK(g.rho.n1() == 10);
    for (int i = 0; i < 16; ++i) {
        const GasState2D s = g.state(i, 0);
        CHECK(s.v == 0.0);
        const double S = (s.e + s.p) / (1.0 - s.u * s.u);
        CHECK(S * s.u == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(s.p + S * s.u * s.u == doctest::Approx(2.5).epsilon(1e-14));
        CHECK(s.rho / std::sqrt(1.0 - s.u * s.u) * s.u == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("unphysical manufacture is rejected")
{
    ManufactureSpec spec;
    spec.velocity = {0.05, 0.1, 1.0}; // drives v through zero
    CHECK(kind_of([&] { manufacture_steady_1d(spec, unit); }) == ErrorKind::UnphysicalManufacture);
    spec = ManufactureSpec{};
    spec.velocity = {0.9, 0.2, 1.0}; // exceeds c
    CHECK(kind_of([&] { manufacture_steady_1d(spec, unit); }) == ErrorKind::UnphysicalManufacture);
    spec = ManufactureSpec{};
    spec.B = 0.5; // p = B - A u < 0
    CHECK(kind_of([&] { manufacture_aligned_2d(spec, unit); }) == ErrorKind::UnphysicalManufacture);
    CHECK(kind_of([&] { manufacture_steady_1d(ManufactureSpec{}, ModelConstants{0.0}); }) ==
          ErrorKind::UnphysicalManufacture);
}

TEST_CASE("residuals vanish exactly on constant grids")
{
    const ResidualReport r1 = residual_1d(constant_1d(stateA, 16), unit);
    REQUIRE(r1.equations.size() == 2);
    CHECK(r1.equations[0].name == "mass");
    CHECK(r1.equations[1].name == "momentum");
    for (const auto& e : r1.equations) {
        CHECK(e.l2 == 0.0);
        CHECK(max_abs(e.values) == 0.0);
    }
    const ResidualReport r2 = residual_2d(constant_2d(stateB, 16), unit);
    REQUIRE(r2.equations.size() == 4);
    CHECK(r2.equations[3].name == "energy");
    for (const auto& e : r2.equations) {
        CHECK(e.l2 == 0.0);
        CHECK(max_abs(e.values) == 0.0);
    }
}

TEST_CASE("a perturbed sample only reaches its stencil footprint")
{
    FieldGrid2D g = constant_2d(stateB, 24);
    g.p(11, 9) += 1e-3;
    for (const auto& e : residual_2d(g, unit).equations) {
        for (int i = 0; i < 24; ++i) {
            for (int j = 0; j < 24; ++j) {
                const bool inside = (j == 9 && std::abs(i - 11) <= 2) || (i == 11 && std::abs(j - 9) <= 2);
                if (!inside) {
                    CHECK(e.values(i, j) == 0.0);
                }
            }
        }
        if (e.name == "momentum_x") {
            CHECK(std::abs(e.values(12, 9)) > 0.0);
            CHECK(e.values(11, 9) == 0.0); // central stencils skip the centre
        }
    }
}

TEST_CASE("residual norms are invariant under a quarter turn of the lattice")
{
    const int n = 33;
    const FieldGrid2D g = sample_2d(n, wavy);
    FieldGrid2D r(g.x, g.y);
    // (x, y) -> (1 - y, x), velocity rotated with it.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const GasState2D s = g.state(n - 1 - j, i);
            r.set(i, j, {s.rho, -s.v, s.u, s.p, s.e});
        }
    }
    const ResidualReport a = residual_2d(g, unit);
    const ResidualReport b = residual_2d(r, unit);
    CHECK(a.equations[0].l2 > 1e-3);
    CHECK(b.equations[0].l2 == doctest::Approx(a.equations[0].l2).epsilon(1e-12));
    CHECK(b.equations[3].l2 == doctest::Approx(a.equations[3].l2).epsilon(1e-12));
    const double momA = std::hypot(a.equations[1].l2, a.equations[2].l2);
    const double momB = std::hypot(b.equations[1].l2, b.equations[2].l2);
    CHECK(momB == doctest::Approx(momA).epsilon(1e-12));
}

TEST_CASE("stencils are fourth order on an oblique exact solution")
{
    const double theta = twoPi / 12.0;
    std::vector<double> h;
    std::vector<std::vector<double>> l2(4);
    for (int n : {33, 65, 129}) {
        const FieldGrid2D g = sample_2d(n, [&](double x, double y) { return oblique(x, y, theta); });
        const ResidualReport r = residual_2d(g, unit);
        h.push_back(g.x.spacing());
        for (std::size_t k = 0; k < 4; ++k) {
            l2[k].push_back(r.equations[k].l2);
        }
    }
    // Mass and energy fluxes are constant vectors on this solution, so only
    // the momentum residuals carry truncation error.
    for (std::size_t k : {0u, 3u}) {
        CHECK(l2[k].back() < 1e-12);
    }
    for (std::size_t k : {1u, 2u}) {
        CHECK(l2[k].front() > 1e-9);
        CHECK(log_log_slope(h, l2[k]) == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("integrate_form is exact for an affine potential")
{
    const Axis a{0.5, 2.0, 9};
    const Axis b{-1.0, 1.0, 7};
    const Array2 P(9, 7, 1.5);
    const Array2 Q(9, 7, -0.25);
    const PathIntegral r = integrate_form(a, b, P, Q, 1.5 * 0.5 + 0.25);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 7; ++j) {
            CHECK(r.values(i, j) == doctest::Approx(1.5 * a.at(i) - 0.25 * b.at(j)).epsilon(1e-15));
        }
    }
    CHECK(r.maxLoopDefect < 1e-15);
    CHECK(kind_of([] { integrate_form(Axis{0, 1, 3}, Axis{0, 1, 8}, Array2(3, 8), Array2(3, 8), 0.0); }) ==
          ErrorKind::InvalidGrid);
}

TEST_CASE("starred coordinates of a constant state are affine")
{
    const FieldGrid1D g = constant_1d(stateA, 12);
    const StarredCoordinates1D c = reciprocal_coordinates_1d(g, 0.1, unit);
    const Covector1D dt = transform_form_1param(stateA, 0.1, unit, {1.0, 0.0});
    const Covector1D dx = transform_form_1param(stateA, 0.1, unit, {0.0, 1.0});
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
            CHECK(c.tStar(i, j) == doctest::Approx(dt.dt * g.t.at(i) + dx.dt * g.x.at(j)).epsilon(1e-14));
            CHECK(c.xStar(i, j) == g.x.at(j));
        }
    }
    CHECK(c.maxDefectDensity < 1e-12);
}

TEST_CASE("starred time of the steady solution matches quadrature")
{
    ManufactureSpec spec;
    spec.x.count = 129;
    spec.t.count = 33;
    const double eps = 0.1;
    const FieldGrid1D g = manufacture_steady_1d(spec, unit);
    const StarredCoordinates1D c = reciprocal_coordinates_1d(g, eps, unit);
    // S v = (C - p)/v on the steady solution.
    auto sv = [&](double x) { return (spec.C - 1.0) / spec.velocity(x); };
    for (int j = 0; j < 129; j += 16) {
        const double integral = simpson(sv, 0.0, g.x.at(j), 4000);
        for (int i = 0; i < 33; i += 8) {
            const double expected = (1.0 + eps * spec.C) * g.t.at(i) - eps * integral;
            CHECK(std::abs(c.tStar(i, j) - expected) < 1e-8);
        }
    }
}

TEST_CASE("a non-solution gives a non-closed form")
{
    StateSampler rng(201);
    FieldGrid1D g(Axis{0.0, 1.0, 16}, Axis{0.0, 1.0, 16});
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            g.set(i, j, rng.state_1d());
        }
    }
    CHECK(kind_of([&] { reciprocal_coordinates_1d(g, 0.1, unit); }) == ErrorKind::NonClosedForm);
    CHECK(kind_of([&] { transform_field_1d(g, 0.1, unit); }) == ErrorKind::NonClosedForm);
}

TEST_CASE("sawtooth pressure history folds the starred time")
{
    // At rest dt* = (1 + eps p) dt; with eps = -0.99 the rate swings between
    // 0.9901 and 0.01 and the order-4 quadrature overshoots backwards.
    FieldGrid1D g(Axis{0.0, 1.0, 31}, Axis{0.0, 1.0, 10});
    for (int i = 0; i < 31; ++i) {
        for (int j = 0; j < 10; ++j) {
            g.set(i, j, {1.0, 0.0, i % 3 == 0 ? 0.01 : 1.0, 3.0});
        }
    }
    CHECK(kind_of([&] { transform_field_1d(g, -0.99, unit); }) == ErrorKind::NonMonotoneCoordinates);
}

TEST_CASE("constant fields map to the pointwise image")
{
    const TransformedField1D t = transform_field_1d(constant_1d(stateA, 16), 0.1, unit);
    const GasState1D expected = transform_state_1param(stateA, 0.1, unit);
    for (int i = 0; i < t.grid.rho.n0(); ++i) {
        for (int j = 0; j < t.grid.rho.n1(); ++j) {
            CHECK(testing::max_rel(t.grid.state(i, j), expected) < 1e-14);
        }
    }
    for (const auto& e : t.residual.equations) {
        CHECK(e.l2 < 1e-12);
    }

    const TransformedField2D u = transform_field_2d(constant_2d(stateB, 16), 0.1, unit);
    const GasState2D expected2 = transform_state_1param_2d(stateB, 0.1, unit);
    CHECK(testing::max_rel(u.grid.state(5, 7), expected2) < 1e-14);
}

TEST_CASE("eps = 0 leaves a field untouched")
{
    ManufactureSpec spec;
    spec.x.count = spec.t.count = spec.y.count = 16;
    const FieldGrid1D g1 = manufacture_steady_1d(spec, unit);
    CHECK(transform_field_1d(g1, 0.0, unit).grid == g1);
    const FieldGrid2D g2 = manufacture_aligned_2d(spec, unit);
    CHECK(transform_field_2d(g2, 0.0, unit).grid == g2);
}

TEST_CASE("plane starred coordinates of the aligned solution")
{
    ManufactureSpec spec;
    spec.x.count = 129;
    spec.y.count = 17;
    const double eps = 0.1;
    const FieldGrid2D g = manufacture_aligned_2d(spec, unit);
    const StarredCoordinates2D c = reciprocal_coordinates_2d(g, eps, unit);
    // dx* = (1 + eps p) dx with p = B - A u; dy* = (1 + eps B) dy.
    const double slope = 1.0 + eps * (spec.B - spec.A * 0.5);
    const double wave = eps * spec.A * 0.05 / twoPi;
    for (int i = 0; i < 129; i += 8) {
        const double x = g.x.at(i);
        for (int j = 0; j < 17; j += 4) {
            CHECK(c.yStar(i, j) == doctest::Approx((1.0 + eps * spec.B) * g.y.at(j)).epsilon(1e-13));
            CHECK(std::abs(c.xStar(i, j) - (slope * x + wave * (std::cos(twoPi * x) - 1.0))) < 1e-9);
        }
    }
}

TEST_CASE("convergence study argument checks")
{
    auto family = [](int n) { return constant_1d(stateA, n); };
    CHECK(kind_of([&] { convergence_study_1d(family, {32}, 0.1, unit); }) == ErrorKind::InsufficientResolutions);
    CHECK(kind_of([&] { convergence_study_1d(family, {32, 48}, 0.1, unit); }) ==
          ErrorKind::InsufficientResolutions);

    const ConvergenceReport r = convergence_study_1d(family, {16, 31}, 0.1, unit);
    REQUIRE(r.orders.size() == 2);
    CHECK_FALSE(r.orders[0].has_value());
    CHECK_FALSE(r.orders[1].has_value());
    CHECK(r.levels.size() == 2);

    CHECK(log_log_slope({1.0, 2.0, 4.0}, {1.0, 8.0, 64.0}) == doctest::Approx(3.0));
}

TEST_CASE("CSV round trip")
{
    ManufactureSpec spec;
    spec.x.count = 9;
    spec.t.count = 8;
    spec.y.count = 10;
    const FieldGrid1D g1 = manufacture_steady_1d(spec, unit);
    std::stringstream s1;
    write_csv(s1, g1);
    CHECK(read_csv_1d(s1) == g1);

    const FieldGrid2D g2 = manufacture_aligned_2d(spec, unit);
    std::stringstream s2;
    write_csv(s2, g2);
    CHECK(read_csv_2d(s2) == g2);

    CHECK(csv_dimension("t,x,rho,v,p,e") == 1);
    CHECK(csv_dimension("x,y,rho,u,v,p,e") == 2);
    CHECK(csv_dimension("a,b") == 0);
}

TEST_CASE("malformed CSV is rejected")
{
    std::istringstream wrongHeader("x,t,rho,v,p,e\n0,0,1,0.5,1,3\n");
    CHECK(kind_of([&] { read_csv_1d(wrongHeader); }) == ErrorKind::InvalidGrid);
    std::istringstream junk("t,x,rho,v,p,e\n0,0,1,abc,1,3\n");
    CHECK(kind_of([&] { read_csv_1d(junk); }) == ErrorKind::InvalidGrid);
    std::istringstream ragged("t,x,rho,v,p,e\n0,0,1,0.5\n");
    CHECK(kind_of([&] { read_csv_1d(ragged); }) == ErrorKind::InvalidGrid);
    std::istringstream holes("t,x,rho,v,p,e\n0,0,1,0.5,1,3\n0,1,1,0.5,1,3\n1,0,1,0.5,1,3\n");
    CHECK(kind_of([&] { read_csv_1d(holes); }) == ErrorKind::InvalidGrid);
}

TEST_CASE("grid validation")
{
    CHECK(kind_of([] { validate_grid(constant_1d(stateA, 7), unit); }) == ErrorKind::InvalidGrid);
    FieldGrid2D g = constant_2d(stateB, 8);
    validate_grid(g, unit);
    g.u(3, 3) = 0.99;
    CHECK(kind_of([&] { validate_grid(g, unit); }) == ErrorKind::InvalidGrid);
}

TEST_CASE("monotone cubic interpolation")
{
    const Axis a{0.0, 1.0, 9};
    const Axis b{0.0, 2.0, 6};
    Array2 linear(9, 6);
    Array2 steps(9, 6);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 6; ++j) {
            linear(i, j) = 2.0 * a.at(i) - 0.5 * b.at(j) + 1.0;
            steps(i, j) = i < 4 ? 0.0 : 1.0;
        }
    }
    const TensorMonotoneCubic fl(a, b, linear);
    const TensorMonotoneCubic fs(a, b, steps);
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 6; ++j) {
            CHECK(fl(a.at(i), b.at(j)) == doctest::Approx(linear(i, j)).epsilon(1e-15));
            CHECK(fs(a.at(i), b.at(j)) == steps(i, j));
        }
    }
    double previous = -1.0;
    for (int k = 0; k <= 400; ++k) {
        const double s = k / 400.0;
        CHECK(fl(s, 0.77) == doctest::Approx(2.0 * s - 0.385 + 1.0).epsilon(1e-14));
        const double v = fs(s, 0.77);
        CHECK(v >= previous - 1e-15);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0 + 1e-15);
        previous = v;
    }
    CHECK(monotone_interior_slope(1.0, -1.0) == 0.0);
    CHECK(monotone_interior_slope(2.0, 2.0) == doctest::Approx(2.0));
    CHECK(monotone_end_slope(1.0, 1.0) == doctest::Approx(1.0));
    CHECK(hermite(0.0, 1.0, 1.0, 1.0, 1.0, 0.25) == doctest::Approx(0.25));
}
