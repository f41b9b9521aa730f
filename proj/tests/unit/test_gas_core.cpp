#include <doctest.h>

#include <cmath>

#include "relgas/gas_core.hpp"

using namespace relgas;

namespace {

const ModelConstants unit{1.0};

bool has_field(const ValidationReport& r, const std::string& field)
{
    for (const auto& v : r.violations) {
        if (v.field == field) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("derived quantities of the 1D reference state")
{
    const Derived1D d = derived_1d({1.0, 0.5, 1.0, 3.0}, unit);
    CHECK(d.gammaSq == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(d.S == doctest::Approx(16.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("derived quantities of the 2D reference state")
{
    const Derived2D d = derived_2d({1.0, 0.3, 0.4, 1.0, 3.0}, unit);
    CHECK(d.qSq == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(d.Gamma == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-15));
    CHECK(d.R == doctest::Approx(1.0 / std::sqrt(0.75)).epsilon(1e-15));
    CHECK(d.S == doctest::Approx(4.0 / 0.75).epsilon(1e-15));
}

TEST_CASE("speed of light scales the derived quantities")
{
    const Derived1D d = derived_1d({1.0, 5.0, 1.0, 3.0}, ModelConstants{10.0});
    CHECK(d.gammaSq == doctest::Approx(1.0 / 75.0).epsilon(1e-15));
}

TEST_CASE("superluminal states are rejected")
{
    CHECK_THROWS_AS(derived_1d({1.0, 1.0, 1.0, 3.0}, unit), DomainError);
    try {
        derived_1d({1.0, -1.5, 1.0, 3.0}, unit);
        FAIL("expected a domain error");
    }
    catch (const DomainError& e) {
        CHECK(e.kind() == ErrorKind::SuperluminalState);
        CHECK(std::string(e.what()).rfind("SuperluminalState", 0) == 0);
    }
    CHECK_THROWS_AS(derived_2d({1.0, 0.8, 0.6, 1.0, 3.0}, unit), DomainError);
}

TEST_CASE("validation lists every violated constraint")
{
    CHECK(validate_state(GasState1D{1.0, 0.5, 1.0, 3.0}, unit).ok());
    CHECK(validate_state(GasState2D{1.0, 0.3, 0.4, 1.0, 3.0}, unit).ok());

    const ValidationReport r = validate_state(GasState1D{-1.0, 1.2, -0.5, 0.2}, unit);
    CHECK(has_field(r, "rho"));
    CHECK(has_field(r, "p"));
    CHECK(has_field(r, "e+p"));
    CHECK(has_field(r, "|v|"));
    CHECK_FALSE(has_field(r, "e"));

    CHECK(has_field(validate_state(GasState2D{1.0, 0.8, 0.7, 1.0, 3.0}, unit), "q"));
    CHECK(has_field(validate_state(GasState1D{1.0, 0.1, 1.0, 3.0}, ModelConstants{0.0}), "c"));
    CHECK(has_field(validate_state(GasState1D{1.0, 0.1, 1.0, std::nan("")}, unit), "e"));
}

TEST_CASE("matrix helpers")
{
    const Mat2 a{{1.0, 2.0, 3.0, 4.0}};
    const Mat2 b{{0.0, 1.0, -1.0, 2.0}};
    CHECK((a * b) == Mat2{{-2.0, 5.0, -4.0, 11.0}});
    CHECK((a + b) == Mat2{{1.0, 3.0, 2.0, 6.0}});
    CHECK((2.0 * a) == Mat2{{2.0, 4.0, 6.0, 8.0}});
    CHECK(transpose(a) == Mat2{{1.0, 3.0, 2.0, 4.0}});
    CHECK(a.det() == -2.0);
    CHECK(Mat2::identity() * a == a);

    const Mat2 r = rotation(0.7);
    const Mat2 rrT = r * transpose(r);
    CHECK(rrT(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(rrT(0, 1)) < 1e-15);
    CHECK(r.det() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("every error kind has a name")
{
    for (ErrorKind k : {ErrorKind::SuperluminalState, ErrorKind::ZeroEpsilon, ErrorKind::SingularDenominator,
                        ErrorKind::NegativeRadicand, ErrorKind::ZeroA1, ErrorKind::DegenerateJacobian,
                        ErrorKind::OrbitLeftDomain, ErrorKind::ToleranceNotMet, ErrorKind::UnphysicalManufacture,
                        ErrorKind::NonClosedForm, ErrorKind::NonMonotoneCoordinates,
                        ErrorKind::InsufficientResolutions, ErrorKind::InvalidGrid}) {
        CHECK(to_string(k) != "UnknownError");
    }
}
