#include "dtx/invert.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dtx/errors.hpp"
#include "dtx/parallel.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

namespace {
constexpr double pi = std::numbers::pi;

std::string index_list(const std::vector<PsiIndex>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < 12; ++i)
        os << (i ? ", " : "") << "(" << v[i].n << "," << v[i].k << "," << to_string(v[i].parity) << ")";
    if (v.size() > 12)
        os << ", ...";
    return os.str();
}

bool sigma_ok(const Basis& basis, int n, int k, double& s)
{
    s = basis.sigma(n, k);
    return s >= sigma_floor_rel * basis.sigma(0, 0);
}

ZernikeExpansion divide_block(const SinoCoeffs& u, const Block& block, const Basis& basis, InvertDiagnostics* diag)
{
    std::vector<PsiIndex> outside;
    for (const auto& [idx, c] : u.values)
        if (!block.contains(idx) && c != cplx(0.0))
            outside.push_back(idx);
    if (!outside.empty())
        throw PreconditionError("support outside " + block.name() + ": " + index_list(outside));
    ZernikeExpansion e;
    for (const auto& [idx, c] : u.values) {
        if (!block.contains(idx))
            continue;
        double s;
        if (!sigma_ok(basis, idx.n, idx.k, s)) {
            if (diag)
                diag->refused.push_back(idx);
            continue;
        }
        e.values[{idx.n, idx.k}] = c / s;
    }
    return e;
}
}  // namespace

ZernikeExpansion invert_pi0(const SinoCoeffs& u0, const Basis& basis, InvertDiagnostics* diag)
{
    return divide_block(u0, Block::pi0(), basis, diag);
}

ZernikeExpansion recover_w1(const SinoCoeffs& u_perp, const Basis& basis, InvertDiagnostics* diag)
{
    return divide_block(u_perp, Block::piperp(), basis, diag);
}

std::vector<TtPart> recon_tt_svd(const SinoCoeffs& u, int m, const Basis& basis, InvertDiagnostics* diag)
{
    if (m < 0)
        throw DomainError("recon_tt_svd: negative order");
    Parity want = m % 2 == 0 ? Parity::plus : Parity::minus;
    int p = m / 2;
    std::vector<PsiIndex> bad;
    for (const auto& [idx, c] : u.values) {
        if (c == cplx(0.0))
            continue;
        if (idx.parity != want) {
            bad.push_back(idx);
            continue;
        }
        Block b = block_of(idx);
        bool core = b.kind == BlockKind::pi0 || b.kind == BlockKind::piperp;
        if (!core && b.j > p)
            bad.push_back(idx);
    }
    if (!bad.empty())
        throw PreconditionError("recon_tt_svd: data outside the range of order " + std::to_string(m) + ": " +
                                index_list(bad));
    std::vector<TtPart> parts;
    int j0 = want == Parity::plus ? 1 : 0;
    for (int j = j0; j <= p; ++j) {
        Block b = want == Parity::plus ? Block::pi2j(j) : Block::pi2j1(j);
        TtPart t;
        t.order = b.tt_order();
        auto d = block_diagonals(b, u);
        double s;
        for (const auto& [n, c] : d.low) {
            if (sigma_ok(basis, n, 0, s))
                t.dz[n] = c / s;
            else if (diag)
                diag->refused.push_back({n, -j, want});
        }
        for (const auto& [n, c] : d.high) {
            if (sigma_ok(basis, n, n, s))
                t.dzbar[n] = c / s;
            else if (diag)
                diag->refused.push_back({n, want == Parity::plus ? n + j : n + j + 1, want});
        }
        parts.push_back(std::move(t));
    }
    return parts;
}

cplx kernel_G(int j, double gamma, const FanBeamPoint& p, cplx z, double eps)
{
    if (j < 0)
        throw DomainError("kernel_G: j must be non-negative");
    require_gamma(gamma, true);
    if (std::abs(z) > 1.0 - eps)
        throw DomainError("kernel_G: |z| exceeds 1 - eps");
    double b = p.beta, a = p.alpha;
    double mu = std::cos(a);
    cplx f1 = std::polar(1.0, b) * z + 1.0;
    cplx f2 = std::polar(1.0, b + 2.0 * a + pi) * z + 1.0;
    if (std::abs(f1) < 1e-8 || std::abs(f2) < 1e-8)
        throw NumericalError("kernel_G: singular denominator");
    cplx num = (gamma + 1.0) * (1.0 + std::polar(1.0, 2.0 * b + 2.0 * a) * z * z);
    cplx den = std::exp((gamma + 2.0) * (std::log(f1) + std::log(f2)));
    double g = factorial_real(gamma);
    double pre = std::pow(mu, 2.0 * gamma + 1.0) / (std::pow(2.0, 4.0 * gamma + 2.0) * g * g);
    return pre * std::polar(1.0, 2.0 * j * (b + a + pi)) * num / den;
}

double kernel_pairing_scale(const Basis& basis)
{
    return 1.0 / (2.0 * pi * basis.audit_scale());
}

double measured_kernel_ratio(const Basis& basis, int j, const BoundaryGrid& grid)
{
    auto d = basis.psi_samples({0, -j, Parity::plus}, grid);
    double s00 = basis.sigma(0, 0);
    cplx pairing = 0.0;
    for (int i = 0; i < grid.n_beta(); ++i)
        for (int q = 0; q < grid.n_alpha(); ++q) {
            std::size_t idx = grid.index(i, q);
            cplx k = kernel_G(j, basis.gamma(), grid.point(i, q), 0.0);
            pairing += grid.weight(i, q) * s00 * d[idx] * std::conj(k);
        }
    return (pairing / basis.zernike_hat(0, 0).coeff(0, 0)).real();
}

std::vector<cplx> default_z_grid(double r_max, int n_r, int n_omega)
{
    QuadRule gl = legendre_rule(n_r);
    std::vector<cplx> out;
    for (int i = 0; i < n_r; ++i) {
        double r = 0.5 * r_max * (1.0 + gl.nodes[i]);
        for (int l = 0; l < n_omega; ++l)
            out.push_back(std::polar(r, 2.0 * pi * l / n_omega));
    }
    return out;
}

BoundaryGrid kernel_grid(double r_max, int n_max, int m, double gamma)
{
    if (!(r_max >= 0.0 && r_max <= 1.0 - 1e-3))
        throw DomainError("kernel_grid: radius must lie in [0, 1 - 1e-3]");
    int reach = r_max > 0.0 ? int(std::ceil(std::log(1e-8) / std::log(r_max))) + 1 : 1;
    int n_beta = reach + n_max + 2 * m + 2;
    n_beta += n_beta % 2;
    int n_alpha = (reach + n_max + 2) / 2;
    return fan_beam_grid(std::max(n_beta, 16), std::max(n_alpha, 8), gamma);
}

std::vector<KernelModes> recon_tt_kernel(const SinoGrid& data, int m, const std::vector<cplx>& z_points,
                                         const Basis& basis)
{
    if (m < 0)
        throw DomainError("recon_tt_kernel: negative order");
    const BoundaryGrid& g = data.grid;
    if (g.gamma != basis.gamma())
        throw PreconditionError("recon_tt_kernel: grid gamma differs from basis gamma");
    bool odd = m % 2 == 1;
    int p = m / 2;
    double r_max = 0.0;
    for (cplx z : z_points)
        r_max = std::max(r_max, std::abs(z));
    if (r_max > 1.0 - 1e-3)
        throw DomainError("recon_tt_kernel: evaluation points must satisfy |z| <= 1 - 1e-3");
    int n_content = basis.n_max();
    int reach = std::min(g.n_beta() - n_content - 2 * m - 2, 2 * g.n_alpha() - n_content - 1);
    if (r_max > 0.0 && (reach <= 0 || reach * std::log(r_max) > std::log(1e-8)))
        throw ResolutionError("recon_tt_kernel: grid too coarse for the requested evaluation radius");

    double scale = kernel_pairing_scale(basis);
    std::vector<KernelModes> out;
    for (int j = odd ? 0 : 1; j <= p; ++j) {
        KernelModes km;
        km.order = odd ? 2 * j + 1 : 2 * j;
        km.dz.assign(z_points.size(), 0.0);
        km.dzbar.assign(z_points.size(), 0.0);
        parallel_for(z_points.size(), [&](std::size_t q) {
            cplx w = -std::conj(z_points[q]);
            cplx plus = 0.0, minus = 0.0;
            for (int i = 0; i < g.n_beta(); ++i)
                for (int a = 0; a < g.n_alpha(); ++a) {
                    FanBeamPoint pt = g.point(i, a);
                    cplx k = kernel_G(j, basis.gamma(), pt, w);
                    if (odd)
                        k *= std::polar(1.0, pt.theta());
                    cplx dv = g.alpha_weights[a] * data.values[g.index(i, a)];
                    plus += dv * std::conj(k);
                    minus += dv * k;
                }
            km.dz[q] = plus * g.beta_weight * scale;
            km.dzbar[q] = minus * g.beta_weight * scale;
        });
        out.push_back(std::move(km));
    }
    return out;
}

std::vector<KernelModes> evaluate_tt(const std::vector<TtPart>& parts, const std::vector<cplx>& z_points,
                                     const Basis& basis)
{
    std::vector<KernelModes> out;
    for (const auto& t : parts) {
        KernelModes km;
        km.order = t.order;
        PolyZZbar hol, anti;
        for (const auto& [n, c] : t.dz)
            hol += basis.zernike_hat(n, 0) * c;
        for (const auto& [n, c] : t.dzbar)
            anti += basis.zernike_hat(n, n) * c;
        for (cplx z : z_points) {
            km.dz.push_back(hol(z));
            km.dzbar.push_back(anti(z));
        }
        out.push_back(std::move(km));
    }
    return out;
}

double potential_residual(const RadialPotential& h, const PolyZZbar& w1)
{
    const double radii[] = {0.15, 0.35, 0.55, 0.75, 0.9};
    const double step = 1e-3;
    const cplx i(0.0, 1.0);
    double worst = 0.0, scale = 1.0;
    std::vector<std::pair<cplx, cplx>> samples;
    for (double r : radii)
        for (int l = 0; l < 5; ++l) {
            cplx z = std::polar(r, 0.3 + 2.0 * pi * l / 5.0);
            auto diff = [&](cplx dir) {
                return (-h.h(z + 2.0 * step * dir) + 8.0 * h.h(z + step * dir) - 8.0 * h.h(z - step * dir) +
                        h.h(z - 2.0 * step * dir)) /
                       (12.0 * step);
            };
            cplx dh = 0.5 * (diff(1.0) - i * diff(i));
            cplx got = -2.0 * i * dh / std::pow(boundary_defining(z), h.gamma());
            cplx want = w1(z);
            scale = std::max(scale, std::abs(want));
            samples.emplace_back(got, want);
        }
    for (const auto& [got, want] : samples)
        worst = std::max(worst, std::abs(got - want));
    return worst / scale;
}

RadialPotential solve_potential(const PolyZZbar& w1, double gamma)
{
    require_gamma(gamma, true);
    RadialPotential h(w1 * cplx(0.0, 0.5), gamma);
    if (w1.empty())
        return h;
    double scale = std::max(1.0, w1.max_abs_coeff());
    if (h.compatibility_residual() > 1e-8 * scale)
        throw PreconditionError("solve_potential: w1 is not orthogonal to ker dbar");
    double res = potential_residual(h, w1);
    if (!(res < 1e-6))
        throw NumericalError("solve_potential: residual " + std::to_string(res) + " exceeds tolerance");
    return h;
}

bool IttForm::empty() const
{
    for (const auto& t : tt)
        if (!t.empty())
            return false;
    return scalar.empty() && w1.empty() && potential.empty();
}

std::vector<PsiIndex> itt_projection_lattice(int n_max, int m)
{
    int p = m / 2;
    return psi_lattice(n_max, p + 2, p + 3, m % 2 == 0 ? Parity::plus : Parity::minus);
}

IttForm to_itt(const SinoCoeffs& data, int m, const Basis& basis, const RangeTolerances& tol)
{
    RangeReport rep = range_check(data, m, tol);
    if (!rep.a.pass)
        throw PreconditionError("to_itt: data fails range condition (a) for order " + std::to_string(m) + ": " +
                                index_list(rep.a.offending));
    for (const auto& [idx, c] : data.values)
        if (idx.n > basis.n_max() && c != cplx(0.0))
            throw PreconditionError("to_itt: data degree exceeds the basis n_max");
    IttForm f;
    f.m = m;
    f.gamma = basis.gamma();
    // Condition (a) passed, so anything left beyond order m is below tolerance and dropped.
    SinoCoeffs clean;
    clean.gamma = data.gamma;
    for (const auto& [idx, c] : data.values) {
        Block b = block_of(idx);
        bool core = b.kind == BlockKind::pi0 || b.kind == BlockKind::piperp;
        if (core || b.j <= m / 2)
            clean.values.emplace(idx, c);
    }
    if (m % 2 == 0) {
        f.scalar = invert_pi0(project(Block::pi0(), clean), basis);
    } else {
        f.w1 = recover_w1(project(Block::piperp(), clean), basis);
        if (!f.w1.empty())
            f.potential = solve_potential(f.w1.to_poly(basis), basis.gamma());
    }
    f.tt = recon_tt_svd(clean, m, basis);
    return f;
}

IttForm to_itt(const SinoGrid& data, int m, const Basis& basis, const RangeTolerances& tol)
{
    return to_itt(sino_project(data, itt_projection_lattice(basis.n_max(), m), basis), m, basis, tol);
}

ModeField itt_weighted_field(const IttForm& f, const Basis& basis)
{
    ModeField out(f.m);
    if (f.m % 2 == 0)
        out.add_mode(0, f.scalar.to_poly(basis));
    else
        out.add_mode(1, f.w1.to_poly(basis));
    for (const auto& t : f.tt) {
        ModeField part = t.to_field(basis);
        for (const auto& [k, p] : part.modes())
            out.add_mode(k, p);
    }
    return out;
}

SinoCoeffs forward_itt(const IttForm& f, const Basis& basis)
{
    SinoCoeffs out;
    out.gamma = basis.gamma();
    if (f.m % 2 == 0)
        out = out + forward_spectral_mode(f.scalar, 0, basis);
    else
        out = out + forward_spectral_mode(f.w1, 1, basis);
    for (const auto& t : f.tt)
        out = out + forward_spectral(t, basis);
    return out;
}

SinoGrid forward_itt_sino(const IttForm& f, const Basis& basis, const BoundaryGrid& grid, int chord_nodes)
{
    ModeField tt_field(f.m);
    if (f.m % 2 == 0)
        tt_field.add_mode(0, f.scalar.to_poly(basis));
    for (const auto& t : f.tt) {
        ModeField part = t.to_field(basis);
        for (const auto& [k, p] : part.modes())
            tt_field.add_mode(k, p);
    }
    SinoGrid out = forward_sino(tt_field, grid, chord_nodes);
    out.parity = f.m % 2 == 0 ? Parity::plus : Parity::minus;
    if (f.m % 2 == 1 && !f.potential.empty()) {
        QuadRule rule = jacobi_rule(std::max(chord_nodes, 48), grid.gamma);
        parallel_for(grid.n_beta(), [&](std::size_t i) {
            for (int j = 0; j < grid.n_alpha(); ++j)
                out.values[grid.index(int(i), j)] += f.potential.star_d_transform(grid.point(int(i), j), rule);
        });
    }
    return out;
}

}  // namespace dtx
