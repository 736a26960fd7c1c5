#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dtx/errors.hpp"
#include "dtx/specfun.hpp"
#include "dtx/synth.hpp"
#include "dtx/xray.hpp"

using doctest::Approx;
using cplx = std::complex<double>;
using dtx::Parity;
using dtx::PolyZZbar;

TEST_CASE("constant function: central column equals the closed-form weight")
{
    for (double g : {-0.5, 0.0, 0.5}) {
        dtx::ModeField f(0);
        f.set_mode(0, PolyZZbar::constant(1.0));
        dtx::SinoGrid s = dtx::forward_sino(f, g, dtx::default_grid_spec(0, 0));
        int mid = s.grid.n_alpha() / 2;
        REQUIRE(std::abs(s.grid.alphas[mid]) < 1e-15);
        double want = std::pow(2.0, 2.0 * g + 1.0) * std::beta(g + 1.0, g + 1.0);
        for (int i = 0; i < s.grid.n_beta(); ++i)
            CHECK(s.at(i, mid).real() == Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("empty field gives a zero sinogram without parity")
{
    dtx::SinoGrid s = dtx::forward_sino(dtx::ModeField(0), 0.0, dtx::default_grid_spec(0, 0));
    CHECK_FALSE(s.parity.has_value());
    for (cplx v : s.values)
        CHECK(v == cplx(0.0));
}

TEST_CASE("shifted indices")
{
    CHECK(dtx::shifted_index(3, 1, 0) == dtx::PsiIndex{3, 1, Parity::plus});
    CHECK(dtx::shifted_index(3, 0, 4) == dtx::PsiIndex{3, -2, Parity::plus});
    CHECK(dtx::shifted_index(3, 3, -4) == dtx::PsiIndex{3, 5, Parity::plus});
    CHECK(dtx::shifted_index(3, 0, 1) == dtx::PsiIndex{3, 0, Parity::minus});
    CHECK(dtx::shifted_index(3, 3, -1) == dtx::PsiIndex{3, 4, Parity::minus});
    CHECK(dtx::shifted_index(3, 0, 3) == dtx::PsiIndex{3, -1, Parity::minus});
}

TEST_CASE("spectral forward agrees with quadrature forward")
{
    dtx::Rng rng(21);
    dtx::Basis basis(0.35, 4);
    for (int m = 0; m <= 3; ++m) {
        dtx::ModeField f = dtx::random_field(rng, m, 4);
        dtx::SinoCoeffs a = dtx::forward_spectral_field(f, basis);
        dtx::SinoGrid s = dtx::forward_sino(f, 0.35, dtx::default_grid_spec(4, m));
        dtx::SinoCoeffs b = dtx::sino_project(s, dtx::psi_lattice(4, m / 2 + 2, m / 2 + 3, m % 2 ? Parity::minus : Parity::plus), basis);
        CHECK(std::sqrt((a - b).norm_squared()) < 1e-10 * std::sqrt(a.norm_squared()));
        dtx::SinoGrid back = dtx::synthesize(b, basis, s.grid);
        double err = 0.0;
        for (std::size_t i = 0; i < s.values.size(); ++i)
            err = std::max(err, std::abs(back.values[i] - s.values[i]));
        CHECK(err < 1e-10);
    }
}

TEST_CASE("tt fields need tt input")
{
    dtx::Basis basis(0.0, 2);
    dtx::ModeField f(2);
    f.set_mode(0, PolyZZbar::constant(1.0));
    CHECK_THROWS_AS(dtx::forward_spectral(f, basis), dtx::PreconditionError);
}

TEST_CASE("projection refuses grids that alias the index set")
{
    dtx::Basis basis(0.0, 6);
    dtx::ModeField f(0);
    f.set_mode(0, PolyZZbar::constant(1.0));
    dtx::SinoGrid s = dtx::forward_sino(f, dtx::fan_beam_grid(8, 3, 0.0), 4);
    CHECK_THROWS_AS(dtx::sino_project(s, dtx::psi_lattice(6, 0, 0, Parity::plus), basis), dtx::ResolutionError);
}

TEST_CASE("Zernike expansion reproduces the polynomial")
{
    dtx::Basis basis(-0.4, 5);
    dtx::Rng rng(5);
    PolyZZbar p = dtx::random_poly(rng, 5);
    dtx::ZernikeExpansion e = dtx::zernike_expand(p, basis);
    CHECK((e.to_poly(basis) - p).is_zero(1e-11));
    CHECK_THROWS_AS(dtx::zernike_expand(dtx::random_poly(rng, 6), basis), dtx::PreconditionError);
}

TEST_CASE("gauge potentials have zero transform")
{
    dtx::Rng rng(8);
    dtx::ModeField q = dtx::random_gauge_potential(rng, 2, 3);
    dtx::SinoGrid s = dtx::forward_gauge_sino(q, dtx::fan_beam_grid(24, 9, 0.2), 8);
    CHECK(dtx::grid_norm_squared(s) < 1e-20);
}
