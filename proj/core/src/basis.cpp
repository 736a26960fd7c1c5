#include "dtx/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dtx/errors.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

namespace {
constexpr double pi = std::numbers::pi;
constexpr int audit_degree_cap = 8;
}  // namespace

std::string to_string(Parity p)
{
    return p == Parity::plus ? "+" : "-";
}

Parity parity_from_string(const std::string& s)
{
    if (s == "+")
        return Parity::plus;
    if (s == "-" || s == "−")
        return Parity::minus;
    throw PreconditionError("unknown parity tag '" + s + "'");
}

double log_sigma(int n, int k, double gamma)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("sigma: need 0 <= k <= n");
    require_gamma(gamma, false);
    double l2 = (2.0 * gamma + 2.0) * std::numbers::ln2 + std::log(pi) + log_binomial(n, k) +
                log_factorial(n - k + gamma) + log_factorial(k + gamma) - log_factorial(n + 2.0 * gamma + 1.0);
    return 0.5 * l2;
}

double sigma(int n, int k, double gamma)
{
    return std::exp(log_sigma(n, k, gamma));
}

cplx psi_raw(const PsiIndex& idx, const FanBeamPoint& p, double gamma)
{
    double mu = p.mu();
    double th = p.theta();
    int freq = idx.n - 2 * idx.k + (idx.parity == Parity::minus ? 1 : 0);
    double amp = std::pow(mu, 2.0 * gamma + 1.0) * lhat(idx.n, gamma, std::sin(p.alpha)) / (2.0 * pi);
    return amp * std::polar(1.0, freq * th);
}

PolyZZbar zernike_raw(int n, int k, double gamma)
{
    if (n < 0 || k < 0 || k > n)
        throw DomainError("zernike: need 0 <= k <= n");
    auto a = lhat_coefficients(n, gamma);
    PolyZZbar z;
    const cplx two_i(0.0, 2.0);
    for (int m = n; m >= 0; m -= 2) {
        if (a[m] == 0.0)
            continue;
        int j = k - (n - m) / 2;
        if (j < 0 || j > m)
            continue;
        cplx c = a[m] * binomial(m, j) * (j % 2 ? -1.0 : 1.0) / std::pow(two_i, m);
        z.add(m - j, j, c);
    }
    return z;
}

NormalizationAudit normalization_audit(double gamma, int n_max)
{
    require_gamma(gamma, false);
    if (n_max < 2)
        throw PreconditionError("normalization_audit: n_max must be at least 2");
    int na = std::min(n_max, audit_degree_cap);
    BoundaryGrid grid = fan_beam_grid(4 * na + 8, na + 2, gamma);
    double lo = INFINITY, hi = -INFINITY, sum = 0.0;
    int count = 0;
    for (int n = 0; n <= na; ++n)
        for (int k = -2; k <= n + 2; ++k) {
            PsiIndex idx{n, k, Parity::plus};
            auto f = [&](const FanBeamPoint& p) { return psi_raw(idx, p, gamma); };
            double v = boundary_inner(grid, f, f).real();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
            ++count;
        }
    NormalizationAudit a;
    a.samples = count;
    a.scale = sum / count;
    a.spread = (hi - lo) / a.scale;
    if (!(a.scale > 0.0) || !(a.spread < 1e-10))
        throw NumericalError("normalization_audit: fan-beam norms are not uniform across (n, k)");
    return a;
}

ZernikePoly zernike_build(int n, int k, double gamma)
{
    ZernikePoly z;
    z.n = n;
    z.k = k;
    z.coeffs = zernike_raw(n, k, gamma);
    z.norm = std::sqrt(disk_norm_squared(z.coeffs, gamma));
    return z;
}

Basis::Basis(double gamma, int n_max) : gamma_(gamma), n_max_(n_max)
{
    require_gamma(gamma, true);
    if (n_max < 0)
        throw DomainError("Basis: n_max must be non-negative");
    audit_ = normalization_audit(gamma, std::max(n_max, 2));
    double root_c = std::sqrt(audit_.scale);
    zernike_.resize(n_max + 1);
    zernike_hat_.resize(n_max + 1);
    sigma_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            double s = dtx::sigma(n, k, gamma);
            sigma_[n].push_back(s);
            zernike_[n].push_back(zernike_build(n, k, gamma));
            zernike_hat_[n].push_back(zernike_[n].back().coeffs * cplx(1.0 / (root_c * s)));
        }
}

double Basis::sigma(int n, int k) const
{
    if (n >= 0 && n <= n_max_ && k >= 0 && k <= n)
        return sigma_[n][k];
    return dtx::sigma(n, k, gamma_);
}

const ZernikePoly& Basis::zernike(int n, int k) const
{
    if (n < 0 || n > n_max_ || k < 0 || k > n)
        throw PreconditionError("Basis: Zernike index outside the cached range");
    return zernike_[n][k];
}

const PolyZZbar& Basis::zernike_hat(int n, int k) const
{
    if (n < 0 || n > n_max_ || k < 0 || k > n)
        throw PreconditionError("Basis: Zernike index outside the cached range");
    return zernike_hat_[n][k];
}

cplx Basis::psi(const PsiIndex& idx, const FanBeamPoint& p) const
{
    return psi_raw(idx, p, gamma_) / std::sqrt(audit_.scale);
}

std::vector<cplx> Basis::psi_samples(const PsiIndex& idx, const BoundaryGrid& grid) const
{
    if (grid.gamma != gamma_)
        throw PreconditionError("psi_samples: grid gamma differs from basis gamma");
    double a = lhat_scale(idx.n, gamma_) / (2.0 * pi * std::sqrt(audit_.scale));
    std::vector<double> amp(grid.n_alpha());
    for (int j = 0; j < grid.n_alpha(); ++j) {
        double al = grid.alphas[j];
        amp[j] = a * std::pow(std::cos(al), 2.0 * gamma_ + 1.0) * gegenbauer(idx.n, gamma_ + 1.0, std::sin(al));
    }
    int freq = idx.n - 2 * idx.k + (idx.parity == Parity::minus ? 1 : 0);
    std::vector<cplx> out(grid.size());
    for (int i = 0; i < grid.n_beta(); ++i)
        for (int j = 0; j < grid.n_alpha(); ++j) {
            double th = grid.betas[i] + grid.alphas[j] + pi;
            out[grid.index(i, j)] = amp[j] * std::polar(1.0, freq * th);
        }
    return out;
}

std::vector<PsiIndex> psi_lattice(int n_max, int below, int above, Parity parity)
{
    std::vector<PsiIndex> out;
    for (int n = 0; n <= n_max; ++n)
        for (int k = -below; k <= n + above; ++k)
            out.push_back({n, k, parity});
    return out;
}

}  // namespace dtx
