#pragma once

#include <map>
#include <vector>

#include "dtx/geometry.hpp"
#include "dtx/poly.hpp"
#include "dtx/quadrature.hpp"

namespace dtx {

struct RadialModeFn {
    int q = 0;
    std::vector<double> r;
    std::vector<cplx> h;
};

// Solution of d h = d^gamma P on the disk with h = 0 on the unit circle, one angular mode at a time.
// The radial factors are incomplete Beta functions of r^2.
class RadialPotential {
public:
    RadialPotential() = default;
    RadialPotential(const PolyZZbar& source, double gamma);

    double gamma() const { return gamma_; }
    const PolyZZbar& source() const { return source_; }
    bool empty() const { return modes_.empty(); }
    std::vector<int> modes() const;
    // Largest |int_0^1 2 s^q (1-s^2)^gamma P_{q-1}(s) ds| over q >= 1; zero when P is orthogonal to ker dbar.
    double compatibility_residual() const { return compat_; }

    cplx mode_value(int q, double r) const;
    cplx h(cplx z) const;
    cplx h_over_weight(cplx z) const;
    cplx dbar_h_over_weight(cplx z) const;
    cplx d_h_over_weight(cplx z) const { return source_(z); }

    RadialModeFn sample_mode(int q, const std::vector<double>& r) const;

    // I_1(*dh) along one chord; the integrand is d^gamma times a smooth function.
    cplx star_d_transform(const FanBeamPoint& p, const QuadRule& jacobi) const;

private:
    struct Term {
        int e;  // power of r
        cplx c;
    };
    cplx radial(int q, double r, bool divide_weight) const;

    double gamma_ = 0.0;
    PolyZZbar source_;
    std::map<int, std::vector<Term>> modes_;  // q -> P_{q-1}(r) = sum c r^e
    double compat_ = 0.0;
};

}  // namespace dtx
