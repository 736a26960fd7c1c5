#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dtx/errors.hpp"
#include "dtx/invert.hpp"
#include "dtx/synth.hpp"

using doctest::Approx;
using cplx = std::complex<double>;
using dtx::PolyZZbar;

TEST_CASE("manufactured potential")
{
    for (double g : {-0.6, 0.0, 0.45}) {
        // h = d^{g+1} x
        PolyZZbar w1;
        const cplx mi(0.0, -1.0);
        w1.add(0, 0, mi);
        w1.add(1, 1, -mi * (g + 2.0));
        w1.add(0, 2, -mi * (g + 1.0));
        dtx::RadialPotential h = dtx::solve_potential(w1, g);
        CHECK(h.compatibility_residual() < 1e-14);
        for (double r : {0.0, 1e-8, 0.3, 0.5, 0.77, 0.99})
            for (double w : {0.0, 1.9, 4.0}) {
                cplx z = std::polar(r, w);
                double d = 1.0 - r * r;
                CHECK(std::abs(h.h(z) - std::pow(d, g + 1.0) * z.real()) < 1e-12);
                CHECK(std::abs(h.h_over_weight(z) - d * z.real()) < 1e-11);
            }
        CHECK(dtx::potential_residual(h, w1) < 1e-6);
        CHECK(std::abs(h.h(cplx(1.0, 0.0))) == 0.0);
    }
}

TEST_CASE("potential requires orthogonality to holomorphic functions")
{
    CHECK_THROWS_AS(dtx::solve_potential(PolyZZbar::monomial(1, 0), 0.0), dtx::PreconditionError);
}

TEST_CASE("curl transform equals the weighted transform of w1 dz")
{
    dtx::Rng rng(41);
    for (double g : {-0.5, 0.3}) {
        dtx::Basis basis(g, 4);
        PolyZZbar w = dtx::random_zernike(rng, 4, 1).to_poly(basis);
        dtx::RadialPotential h = dtx::solve_potential(w, g);
        dtx::ModeField form(1);
        form.set_mode(1, w);
        for (double b : {0.1, 2.0})
            for (double a : {-1.0, 0.2, 1.3}) {
                dtx::FanBeamPoint p{b, a};
                cplx lhs = h.star_d_transform(p, dtx::jacobi_rule(48, g));
                cplx rhs = dtx::forward_chord(form, p, g, dtx::jacobi_rule(8, g));
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
    }
}

TEST_CASE("one-form decomposition leaves the transform unchanged")
{
    // w = w1 dz + wm1 dzbar = d^{-g} df + wt_{-1} dzbar + wt_1 dz with wt_{-1} antiholomorphic, f = 0 on the circle.
    dtx::Rng rng(43);
    for (double g : {-0.5, 0.0, 0.6}) {
        PolyZZbar w1 = dtx::random_poly(rng, 3), wm1 = dtx::random_poly(rng, 3);
        auto hp = dtx::holo_project(wm1, g, dtx::HoloSide::ker_d);
        CHECK(hp.projection.is_antiholomorphic(1e-14));
        // conj(f) solves d conj(f) = d^g conj(residual).
        dtx::RadialPotential fbar(hp.residual.conj(), g);
        CHECK(fbar.compatibility_residual() < 1e-12);
        dtx::QuadRule rule = dtx::jacobi_rule(48, g);
        for (double b : {0.3, 2.5})
            for (double a : {-0.9, 0.1, 1.2}) {
                dtx::FanBeamPoint p{b, a};
                cplx e = std::polar(1.0, p.theta());
                cplx full = dtx::chord_integrate(
                    p, g, [&](const dtx::PhasePoint& q) { return w1(q.z) * e + wm1(q.z) / e; }, rule);
                cplx free = dtx::chord_integrate(
                    p, g,
                    [&](const dtx::PhasePoint& q) {
                        cplx wt1 = w1(q.z) - std::conj(fbar.dbar_h_over_weight(q.z));
                        return wt1 * e + hp.projection(q.z) / e;
                    },
                    rule);
                CHECK(std::abs(full - free) < 1e-7);
            }
    }
}
