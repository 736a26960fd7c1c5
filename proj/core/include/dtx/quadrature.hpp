#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dtx/geometry.hpp"
#include "dtx/poly.hpp"

namespace dtx {

enum class RuleKind { jacobi01, gegenbauer, legendre, uniform_angle };

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    RuleKind kind = RuleKind::legendre;
    // jacobi01: gamma; gegenbauer: gamma + 1/2; legendre: 0.
    double exponent = 0.0;
    int order = 0;

    std::size_t size() const { return nodes.size(); }
    double total_mass() const;
};

// Gauss rule on [-1,1] for the weight (1-x^2)^a, a > -1.
QuadRule symmetric_jacobi_rule(int n, double a);
// Gauss rule on [0,1] for s^gamma (1-s)^gamma.
QuadRule jacobi_rule(int n, double gamma);
// Gauss rule on [-1,1] for (1-x^2)^(gamma+1/2).
QuadRule gegenbauer_rule(int n, double gamma);
QuadRule legendre_rule(int n);
// M equispaced angles 2 pi i / M with weights 2 pi / M.
QuadRule uniform_angle_rule(int m);

using PhaseIntegrand = std::function<cplx(const PhasePoint&)>;

// (2 mu)^(2 gamma + 1) sum_i w_i f(chord_point(p, 2 mu s_i)); rule must be jacobi01(gamma).
cplx chord_integrate(const FanBeamPoint& p, double gamma, const PhaseIntegrand& f, const QuadRule& rule);

enum class AlphaRule { gegenbauer, legendre };

// Product grid on fan-beam coordinates carrying the measure mu^{-2 gamma} d beta d alpha.
struct BoundaryGrid {
    double gamma = 0.0;
    AlphaRule alpha_rule = AlphaRule::gegenbauer;
    std::vector<double> betas;
    std::vector<double> alphas;
    // Quadrature weight per d beta d alpha node including mu^{-2 gamma}.
    std::vector<double> alpha_weights;
    double beta_weight = 0.0;

    int n_beta() const { return int(betas.size()); }
    int n_alpha() const { return int(alphas.size()); }
    std::size_t size() const { return betas.size() * alphas.size(); }
    std::size_t index(int i, int j) const { return std::size_t(i) * alphas.size() + j; }
    FanBeamPoint point(int i, int j) const { return {betas[i], alphas[j]}; }
    double weight(int, int j) const { return beta_weight * alpha_weights[j]; }
};

// Gauss-Gegenbauer in x = sin(alpha): exact for the fan-beam polynomial family.
BoundaryGrid fan_beam_grid(int n_beta, int n_alpha, double gamma);
// Gauss-Legendre in alpha on [-pi/2, pi/2]: for general smooth data.
BoundaryGrid legendre_alpha_grid(int n_beta, int n_alpha, double gamma);

// Sum of u conj(v) over grid nodes, both sampled in grid order.
cplx boundary_inner(const BoundaryGrid& grid, const std::vector<cplx>& u, const std::vector<cplx>& v);
cplx boundary_inner(const BoundaryGrid& grid, const std::function<cplx(const FanBeamPoint&)>& u,
                    const std::function<cplx(const FanBeamPoint&)>& v);

// Exact <P, Q> in L^2(disk, (1-|z|^2)^gamma dA).
cplx disk_inner_exact(const PolyZZbar& p, const PolyZZbar& q, double gamma);
double disk_norm_squared(const PolyZZbar& p, double gamma);

}  // namespace dtx
