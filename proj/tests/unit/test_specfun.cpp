#include <cmath>

#include "doctest.h"
#include "dtx/errors.hpp"
#include "dtx/specfun.hpp"

using doctest::Approx;

TEST_CASE("gamma and beta against reference values")
{
    CHECK(dtx::gamma_real(0.3) == Approx(2.9915689876875907).epsilon(1e-14));
    CHECK(dtx::log_gamma_abs(-1.5) == Approx(0.86004701537648101).epsilon(1e-14));
    CHECK(dtx::beta(1.5, 2.5) == Approx(0.19634954084936208).epsilon(1e-14));
    CHECK(dtx::factorial_real(-0.5) == Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(dtx::binomial(10, 3) == 120.0);
    CHECK_THROWS_AS(dtx::binomial(3, 5), dtx::DomainError);
    CHECK(std::exp(dtx::log_binomial(40, 20)) == Approx(137846528820.0).epsilon(1e-12));
}

TEST_CASE("Gegenbauer polynomials")
{
    CHECK(dtx::gegenbauer(5, 1.3, 0.37) == Approx(1.2011306386014937).epsilon(1e-13));
    CHECK(dtx::gegenbauer(12, 0.6, -0.81) == Approx(0.35038933989907188).epsilon(1e-12));
    CHECK(dtx::gegenbauer(0, 0.6, 0.2) == 1.0);
    auto all = dtx::gegenbauer_all(12, 0.6, -0.81);
    CHECK(all.size() == 13);
    CHECK(all[12] == Approx(0.35038933989907188).epsilon(1e-12));

    auto coeffs = dtx::gegenbauer_coefficients(5, 1.3);
    double x = 0.37, s = 0.0, p = 1.0;
    for (double c : coeffs) {
        s += c * p;
        p *= x;
    }
    CHECK(s == Approx(1.2011306386014937).epsilon(1e-12));
}

TEST_CASE("fan-beam radial polynomial")
{
    CHECK(dtx::lhat(3, 0.25, 0.4) == Approx(-1.5292429222003083).epsilon(1e-13));
    auto c = dtx::lhat_coefficients(3, 0.25);
    CHECK(c.back() == Approx(dtx::lhat_leading(3, 0.25)).epsilon(1e-14));
    auto all = dtx::lhat_all(3, 0.25, 0.4);
    CHECK(all[3] == Approx(-1.5292429222003083).epsilon(1e-13));
}

TEST_CASE("generating-function derivative sums the weighted series")
{
    const double lambda = 1.25, t = 0.3;
    const std::complex<double> w(0.2, -0.15);
    auto c = dtx::gegenbauer_all(150, lambda, t);
    std::complex<double> s = 0.0, wp = 1.0;
    for (int n = 0; n <= 150; ++n) {
        s += wp * c[n] * (n + lambda);
        wp *= w;
    }
    CHECK(std::abs(dtx::gegenbauer_weighted_sum(lambda, w, t) - s) < 1e-13);
}

TEST_CASE("weight parameter validation")
{
    CHECK_NOTHROW(dtx::require_gamma(0.99));
    CHECK_THROWS_AS(dtx::require_gamma(1.0), dtx::DomainError);
    CHECK_THROWS_AS(dtx::require_gamma(-1.0), dtx::DomainError);
    CHECK_NOTHROW(dtx::require_gamma(2.0, false));
    CHECK_THROWS_AS(dtx::require_gamma(std::nan(""), false), dtx::DomainError);
    auto w = dtx::WeightParam::make(0.5);
    CHECK(w.beta_gg == Approx(dtx::beta(1.5, 1.5)));
    CHECK(w.c0 == 1.0);
    CHECK(dtx::WeightParam::make(-0.5).c0 == Approx(std::sqrt(2.0)));
}
