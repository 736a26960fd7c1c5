#include "dtx/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "dtx/errors.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

namespace {
constexpr double pi = std::numbers::pi;
}

double QuadRule::total_mass() const
{
    double s = 0.0;
    for (double w : weights)
        s += w;
    return s;
}

QuadRule symmetric_jacobi_rule(int n, double a)
{
    if (n < 1)
        throw DomainError("quadrature: need at least one node");
    if (!(a > -1.0))
        throw DomainError("quadrature: exponent must exceed -1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int k = 1; k < n; ++k) {
        double b2 = k == 1 ? 1.0 / (2.0 * a + 3.0)
                           : k * (k + 2.0 * a) / ((2.0 * k + 2.0 * a + 1.0) * (2.0 * k + 2.0 * a - 1.0));
        sub(k - 1) = std::sqrt(b2);
    }
    double mu0 = std::exp((2.0 * a + 1.0) * std::numbers::ln2 + log_beta(a + 1.0, a + 1.0));

    QuadRule r;
    r.order = n;
    r.exponent = a;
    r.kind = a == 0.0 ? RuleKind::legendre : RuleKind::gegenbauer;
    r.nodes.resize(n);
    r.weights.resize(n);
    if (n == 1) {
        r.nodes[0] = 0.0;
        r.weights[0] = mu0;
        return r;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw NumericalError("quadrature: tridiagonal eigen-solve did not converge");
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v * v;
    }
    // Enforce the exact reflection symmetry of the weight.
    for (int i = 0; i < n / 2; ++i) {
        int j = n - 1 - i;
        double x = 0.5 * (r.nodes[j] - r.nodes[i]);
        double w = 0.5 * (r.weights[i] + r.weights[j]);
        r.nodes[i] = -x;
        r.nodes[j] = x;
        r.weights[i] = r.weights[j] = w;
    }
    if (n % 2 == 1)
        r.nodes[n / 2] = 0.0;
    return r;
}

QuadRule jacobi_rule(int n, double gamma)
{
    require_gamma(gamma, false);
    QuadRule r = symmetric_jacobi_rule(n, gamma);
    double scale = std::pow(2.0, -2.0 * gamma - 1.0);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
        r.weights[i] *= scale;
    }
    r.kind = RuleKind::jacobi01;
    r.exponent = gamma;
    return r;
}

QuadRule gegenbauer_rule(int n, double gamma)
{
    require_gamma(gamma, false);
    QuadRule r = symmetric_jacobi_rule(n, gamma + 0.5);
    r.kind = RuleKind::gegenbauer;
    return r;
}

QuadRule legendre_rule(int n)
{
    QuadRule r = symmetric_jacobi_rule(n, 0.0);
    r.kind = RuleKind::legendre;
    return r;
}

QuadRule uniform_angle_rule(int m)
{
    if (m < 1)
        throw DomainError("uniform_angle_rule: need at least one node");
    QuadRule r;
    r.kind = RuleKind::uniform_angle;
    r.order = m;
    r.nodes.resize(m);
    r.weights.assign(m, 2.0 * pi / m);
    for (int i = 0; i < m; ++i)
        r.nodes[i] = 2.0 * pi * i / m;
    return r;
}

cplx chord_integrate(const FanBeamPoint& p, double gamma, const PhaseIntegrand& f, const QuadRule& rule)
{
    if (rule.kind != RuleKind::jacobi01 || rule.exponent != gamma)
        throw PreconditionError("chord_integrate: rule must be jacobi01 with the same gamma");
    double tau = p.chord_length();
    double theta = p.theta();
    cplx s = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i)
        s += rule.weights[i] * f({chord_z(p, tau * rule.nodes[i]), theta});
    return std::pow(tau, 2.0 * gamma + 1.0) * s;
}

BoundaryGrid fan_beam_grid(int n_beta, int n_alpha, double gamma)
{
    require_gamma(gamma, false);
    BoundaryGrid g;
    g.gamma = gamma;
    g.alpha_rule = AlphaRule::gegenbauer;
    auto beta_rule = uniform_angle_rule(n_beta);
    g.betas = beta_rule.nodes;
    g.beta_weight = 2.0 * pi / n_beta;
    auto xr = gegenbauer_rule(n_alpha, gamma);
    g.alphas.resize(n_alpha);
    g.alpha_weights.resize(n_alpha);
    for (int j = 0; j < n_alpha; ++j) {
        double x = xr.nodes[j];
        g.alphas[j] = std::asin(x);
        double mu2 = 1.0 - x * x;
        g.alpha_weights[j] = xr.weights[j] * std::pow(mu2, -2.0 * gamma - 1.0);
    }
    return g;
}

BoundaryGrid legendre_alpha_grid(int n_beta, int n_alpha, double gamma)
{
    require_gamma(gamma, false);
    BoundaryGrid g;
    g.gamma = gamma;
    g.alpha_rule = AlphaRule::legendre;
    auto beta_rule = uniform_angle_rule(n_beta);
    g.betas = beta_rule.nodes;
    g.beta_weight = 2.0 * pi / n_beta;
    auto xr = legendre_rule(n_alpha);
    g.alphas.resize(n_alpha);
    g.alpha_weights.resize(n_alpha);
    for (int j = 0; j < n_alpha; ++j) {
        double a = 0.5 * pi * xr.nodes[j];
        g.alphas[j] = a;
        g.alpha_weights[j] = 0.5 * pi * xr.weights[j] * std::pow(std::cos(a), -2.0 * gamma);
    }
    return g;
}

cplx boundary_inner(const BoundaryGrid& grid, const std::vector<cplx>& u, const std::vector<cplx>& v)
{
    if (u.size() != grid.size() || v.size() != grid.size())
        throw PreconditionError("boundary_inner: sample count does not match grid");
    cplx s = 0.0;
    for (int i = 0; i < grid.n_beta(); ++i) {
        cplx row = 0.0;
        for (int j = 0; j < grid.n_alpha(); ++j) {
            std::size_t idx = grid.index(i, j);
            row += grid.alpha_weights[j] * u[idx] * std::conj(v[idx]);
        }
        s += row;
    }
    return grid.beta_weight * s;
}

cplx boundary_inner(const BoundaryGrid& grid, const std::function<cplx(const FanBeamPoint&)>& u,
                    const std::function<cplx(const FanBeamPoint&)>& v)
{
    cplx s = 0.0;
    for (int i = 0; i < grid.n_beta(); ++i)
        for (int j = 0; j < grid.n_alpha(); ++j) {
            FanBeamPoint p = grid.point(i, j);
            s += grid.alpha_weights[j] * u(p) * std::conj(v(p));
        }
    return grid.beta_weight * s;
}

cplx disk_inner_exact(const PolyZZbar& p, const PolyZZbar& q, double gamma)
{
    require_gamma(gamma, false);
    std::map<int, std::vector<std::pair<int, cplx>>> qdiag;
    for (const auto& [k, c] : q.terms())
        qdiag[k.first - k.second].emplace_back(k.first + k.second, c);
    cplx s = 0.0;
    for (const auto& [k, c] : p.terms()) {
        auto it = qdiag.find(k.first - k.second);
        if (it == qdiag.end())
            continue;
        for (const auto& [deg, cq] : it->second)
            s += c * std::conj(cq) * (pi * beta(0.5 * (k.first + k.second + deg) + 1.0, gamma + 1.0));
    }
    return s;
}

double disk_norm_squared(const PolyZZbar& p, double gamma)
{
    return disk_inner_exact(p, p, gamma).real();
}

}  // namespace dtx
