#include "dtx/xray.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "dtx/errors.hpp"
#include "dtx/parallel.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

namespace {
constexpr double pi = std::numbers::pi;

int floor_div2(int m)
{
    return m >= 0 ? m / 2 : -((-m + 1) / 2);
}

int beta_frequency(const PsiIndex& idx)
{
    return idx.n - 2 * idx.k + (idx.parity == Parity::minus ? 1 : 0);
}
}  // namespace

GridSpec default_grid_spec(int n_max, int m)
{
    GridSpec s;
    n_max = std::max(n_max, 0);
    s.n_beta = std::max(4 * n_max + 8, 2 * (n_max + m) + 16);
    s.n_alpha = n_max + 4;
    if (s.n_alpha % 2 == 0)
        ++s.n_alpha;
    s.chord_nodes = n_max + 4;
    return s;
}

BoundaryGrid make_grid(const GridSpec& spec, double gamma)
{
    return spec.alpha_rule == AlphaRule::gegenbauer ? fan_beam_grid(spec.n_beta, spec.n_alpha, gamma)
                                                    : legendre_alpha_grid(spec.n_beta, spec.n_alpha, gamma);
}

cplx forward_chord(const ModeField& f, const FanBeamPoint& p, double gamma, const QuadRule& rule)
{
    cplx s = 0.0;
    double th = p.theta();
    for (const auto& [k, poly] : f.modes()) {
        cplx base = chord_integrate(p, gamma, [&poly](const PhasePoint& q) { return poly(q.z); }, rule);
        s += std::polar(1.0, k * th) * base;
    }
    return s;
}

SinoGrid forward_sino(const ModeField& f, const BoundaryGrid& grid, int chord_nodes)
{
    QuadRule rule = jacobi_rule(chord_nodes, grid.gamma);
    SinoGrid out;
    out.grid = grid;
    out.values.assign(grid.size(), 0.0);
    if (!f.empty())
        out.parity = f.order() % 2 == 0 ? Parity::plus : Parity::minus;
    parallel_for(grid.n_beta(), [&](std::size_t i) {
        for (int j = 0; j < grid.n_alpha(); ++j)
            out.values[grid.index(int(i), j)] = forward_chord(f, grid.point(int(i), j), grid.gamma, rule);
    });
    return out;
}

SinoGrid forward_sino(const ModeField& f, double gamma, const GridSpec& spec)
{
    return forward_sino(f, make_grid(spec, gamma), spec.chord_nodes);
}

cplx forward_chord_unweighted(const ModeField& f, const FanBeamPoint& p, const QuadRule& legendre)
{
    double tau = p.chord_length();
    double th = p.theta();
    cplx s = 0.0;
    for (std::size_t i = 0; i < legendre.size(); ++i) {
        double t = 0.5 * tau * (1.0 + legendre.nodes[i]);
        s += legendre.weights[i] * f(chord_z(p, t), th);
    }
    return 0.5 * tau * s;
}

SinoGrid forward_gauge_sino(const ModeField& q, const BoundaryGrid& grid, int chord_nodes)
{
    ModeField xq = apply_X(q);
    QuadRule rule = legendre_rule(chord_nodes);
    SinoGrid out;
    out.grid = grid;
    out.values.assign(grid.size(), 0.0);
    out.parity = xq.order() % 2 == 0 ? Parity::plus : Parity::minus;
    parallel_for(grid.n_beta(), [&](std::size_t i) {
        for (int j = 0; j < grid.n_alpha(); ++j)
            out.values[grid.index(int(i), j)] = forward_chord_unweighted(xq, grid.point(int(i), j), rule);
    });
    return out;
}

ZernikeExpansion zernike_expand(const PolyZZbar& p, const Basis& basis, double tol)
{
    ZernikeExpansion e;
    if (p.empty())
        return e;
    if (p.degree() > basis.n_max())
        throw PreconditionError("zernike_expand: polynomial degree exceeds the basis n_max");
    std::set<int> diagonals;
    for (const auto& [k, c] : p.terms())
        diagonals.insert(k.first - k.second);
    PolyZZbar rest = p;
    for (int n = 0; n <= basis.n_max(); ++n)
        for (int k = 0; k <= n; ++k) {
            if (!diagonals.count(n - 2 * k))
                continue;
            const PolyZZbar& zh = basis.zernike_hat(n, k);
            cplx c = disk_inner_exact(p, zh, basis.gamma());
            if (c == cplx(0.0))
                continue;
            e.values[{n, k}] = c;
            rest -= zh * c;
        }
    double scale = std::max(1.0, std::sqrt(disk_norm_squared(p, basis.gamma())));
    if (std::sqrt(std::max(0.0, disk_norm_squared(rest, basis.gamma()))) > tol * scale)
        throw NumericalError("zernike_expand: residual outside the Zernike span");
    return e;
}

PsiIndex shifted_index(int n, int k, int mode)
{
    int q = floor_div2(mode);
    return {n, k - q, mode % 2 == 0 ? Parity::plus : Parity::minus};
}

SinoCoeffs forward_spectral_mode(const ZernikeExpansion& e, int mode, const Basis& basis)
{
    SinoCoeffs out;
    out.gamma = basis.gamma();
    for (const auto& [nk, c] : e.values)
        out.add(shifted_index(nk.first, nk.second, mode), basis.sigma(nk.first, nk.second) * c);
    return out;
}

SinoCoeffs forward_spectral(const TtPart& t, const Basis& basis)
{
    if (t.order < 1)
        throw PreconditionError("forward_spectral: tt order must be at least 1");
    SinoCoeffs out;
    out.gamma = basis.gamma();
    for (const auto& [n, c] : t.dz)
        out.add(shifted_index(n, 0, t.order), basis.sigma(n, 0) * c);
    for (const auto& [n, c] : t.dzbar)
        out.add(shifted_index(n, n, -t.order), basis.sigma(n, n) * c);
    return out;
}

SinoCoeffs forward_spectral_field(const ModeField& f, const Basis& basis)
{
    SinoCoeffs out;
    out.gamma = basis.gamma();
    for (const auto& [k, p] : f.modes())
        out = out + forward_spectral_mode(zernike_expand(p, basis), k, basis);
    return out;
}

SinoCoeffs forward_spectral(const ModeField& t, const Basis& basis)
{
    if (t.order() < 1 || !t.is_tt(1e-12))
        throw PreconditionError("forward_spectral: input is not a tt field");
    return forward_spectral_field(t, basis);
}

SinoCoeffs sino_project(const SinoGrid& s, const std::vector<PsiIndex>& indices, const Basis& basis)
{
    const BoundaryGrid& g = s.grid;
    if (g.gamma != basis.gamma())
        throw PreconditionError("sino_project: grid gamma differs from basis gamma");
    int n_top = 0, f_top = 0;
    for (const auto& idx : indices) {
        n_top = std::max(n_top, idx.n);
        f_top = std::max(f_top, std::abs(beta_frequency(idx)));
    }
    if (g.n_beta() < 4 * n_top + 8 || g.n_beta() <= 2 * f_top || g.n_alpha() < n_top + 1)
        throw ResolutionError("sino_project: grid too coarse for the requested index set");
    SinoCoeffs out;
    out.gamma = basis.gamma();
    std::vector<cplx> coeffs(indices.size());
    parallel_for(indices.size(), [&](std::size_t q) {
        coeffs[q] = boundary_inner(g, s.values, basis.psi_samples(indices[q], g));
    });
    for (std::size_t q = 0; q < indices.size(); ++q)
        out.values[indices[q]] = coeffs[q];
    return out;
}

SinoGrid synthesize(const SinoCoeffs& c, const Basis& basis, const BoundaryGrid& grid)
{
    SinoGrid out;
    out.grid = grid;
    out.values.assign(grid.size(), 0.0);
    out.parity = c.parity();
    for (const auto& [idx, v] : c.values) {
        auto samples = basis.psi_samples(idx, grid);
        for (std::size_t q = 0; q < samples.size(); ++q)
            out.values[q] += v * samples[q];
    }
    return out;
}

double grid_norm_squared(const SinoGrid& s)
{
    return boundary_inner(s.grid, s.values, s.values).real();
}

}  // namespace dtx
