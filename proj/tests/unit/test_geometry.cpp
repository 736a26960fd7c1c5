#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dtx/errors.hpp"
#include "dtx/geometry.hpp"

using doctest::Approx;
using cplx = std::complex<double>;

TEST_CASE("chord endpoints lie on the circle")
{
    dtx::FanBeamPoint p{0.8, -0.6};
    CHECK(std::abs(dtx::chord_point(p, 0.0).z) == Approx(1.0));
    CHECK(std::abs(dtx::chord_point(p, p.chord_length()).z) == Approx(1.0));
    CHECK(p.chord_length() == Approx(2.0 * std::cos(-0.6)));
    CHECK(dtx::d_along(p, 0.5 * p.chord_length()) == Approx(1.0 - std::pow(std::abs(dtx::chord_z(p, 0.5 * p.chord_length())), 2)));
    CHECK_THROWS_AS(dtx::chord_point(p, 3.0), dtx::RangeError);
}

TEST_CASE("fan-beam projection inverts the chord parametrization")
{
    for (double b : {0.0, 1.1, 4.0})
        for (double a : {-1.2, 0.0, 0.9}) {
            dtx::FanBeamPoint p{b, a};
            double t = 0.37 * p.chord_length();
            dtx::PhasePoint q = dtx::chord_point(p, t);
            dtx::FanBeamPoint back = dtx::fanbeam_project(q);
            CHECK(back.alpha == Approx(a).epsilon(1e-12));
            CHECK(std::abs(std::polar(1.0, back.beta) - std::polar(1.0, b)) < 1e-12);
            CHECK(dtx::fanbeam_parameter(q) == Approx(t).epsilon(1e-12));
        }
}

TEST_CASE("antipodal scattering is an involution reversing the chord")
{
    dtx::FanBeamPoint p{0.4, 0.7};
    dtx::FanBeamPoint s = dtx::scatter_antipodal(p);
    CHECK(s.alpha == Approx(-0.7));
    CHECK(std::abs(dtx::chord_z(s, 0.0) - dtx::chord_z(p, p.chord_length())) < 1e-12);
    dtx::FanBeamPoint ss = dtx::scatter_antipodal(s);
    CHECK(std::abs(std::polar(1.0, ss.beta) - std::polar(1.0, p.beta)) < 1e-12);
}

TEST_CASE("boundary defining function and angle wrapping")
{
    CHECK(dtx::boundary_defining(cplx(0.6, 0.0)) == Approx(0.64));
    CHECK(dtx::wrap_angle(7.0) == Approx(7.0 - 2.0 * std::numbers::pi));
    CHECK_THROWS_AS(dtx::fanbeam_project({cplx(1.5, 0.0), 0.0}), dtx::DomainError);
}
