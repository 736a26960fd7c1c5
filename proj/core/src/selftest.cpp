#include "dtx/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dtx/basis.hpp"
#include "dtx/dataspace.hpp"
#include "dtx/invert.hpp"
#include "dtx/specfun.hpp"
#include "dtx/synth.hpp"
#include "dtx/xray.hpp"

namespace dtx {

namespace {

constexpr double pi = std::numbers::pi;

SuiteResult verdict(const std::string& name, double gamma, double err, double tol, std::string note = "")
{
    SuiteResult r;
    r.name = name;
    r.gamma = gamma;
    r.margin = err / tol;
    r.passed = std::isfinite(err) && err < tol;
    r.note = std::move(note);
    return r;
}

FanBeamPoint random_chord(Rng& rng)
{
    std::uniform_real_distribution<double> ub(0.0, 2.0 * pi), ua(-1.5, 1.5);
    double b = ub(rng);
    double a = ua(rng);
    return {b, a};
}

SuiteResult chord_weight(double gamma, Rng& rng)
{
    QuadRule rule = jacobi_rule(6, gamma);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        FanBeamPoint p = random_chord(rng);
        cplx v = chord_integrate(p, gamma, [](const PhasePoint&) { return cplx(1.0); }, rule);
        double want = std::pow(2.0 * p.mu(), 2.0 * gamma + 1.0) * beta(gamma + 1.0, gamma + 1.0);
        worst = std::max(worst, std::abs(v - want) / want);
    }
    return verdict("chord-weight", gamma, worst, 1e-12);
}

SuiteResult orthonormality(const Basis& basis)
{
    int n_top = std::min(basis.n_max(), 6);
    BoundaryGrid grid = fan_beam_grid(4 * n_top + 16, n_top + 2, basis.gamma());
    auto idx = psi_lattice(n_top, 3, 3, Parity::plus);
    std::vector<std::vector<cplx>> s;
    for (const auto& i : idx)
        s.push_back(basis.psi_samples(i, grid));
    double worst = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a; b < idx.size(); ++b) {
            cplx g = boundary_inner(grid, s[a], s[b]);
            worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
    std::ostringstream note;
    note << "audit scale " << basis.audit_scale() << ", spread " << basis.audit().spread;
    return verdict("orthonormality", basis.gamma(), worst, 1e-9, note.str());
}

SuiteResult svd_reproduction(const Basis& basis)
{
    int n_max = basis.n_max();
    GridSpec spec = default_grid_spec(n_max, 2);
    auto lattice = psi_lattice(n_max, 2, 2, Parity::plus);
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            ModeField f(0);
            f.set_mode(0, basis.zernike_hat(n, k));
            SinoCoeffs c = sino_project(forward_sino(f, basis.gamma(), spec), lattice, basis);
            double s = basis.sigma(n, k);
            for (const auto& [idx, v] : c.values) {
                bool on = idx.n == n && idx.k == k;
                double err = on ? std::abs(v - s) / s : std::abs(v);
                worst = std::max(worst, err);
            }
        }
    return verdict("svd-reproduction", basis.gamma(), worst, 1e-9);
}

SuiteResult gauge_annihilation(const Basis& basis, Rng& rng)
{
    BoundaryGrid grid = fan_beam_grid(24, 9, basis.gamma());
    double worst = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        int order = trial % 3;
        ModeField q = random_gauge_potential(rng, order, 3);
        SinoGrid s = forward_gauge_sino(q, grid, 8);
        for (cplx v : s.values)
            worst = std::max(worst, std::abs(v));
    }
    return verdict("gauge-annihilation", basis.gamma(), worst, 1e-9);
}

SuiteResult range_geometry(const Basis& basis, Rng& rng)
{
    int n_max = basis.n_max();
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
        TtPart t = random_tt(rng, m, n_max);
        GridSpec spec = default_grid_spec(n_max, m + 4);
        SinoGrid s = forward_sino(t.to_field(basis), basis.gamma(), spec);
        int p = m / 2;
        Parity par = m % 2 == 0 ? Parity::plus : Parity::minus;
        SinoCoeffs c = sino_project(s, psi_lattice(n_max, p + 2, p + 3, par), basis);
        Block want = m % 2 == 0 ? Block::pi2j(p) : Block::pi2j1(p);
        double off = 0.0, total = 0.0;
        for (const auto& [idx, v] : c.values) {
            total += std::norm(v);
            if (!want.contains(idx))
                off += std::norm(v);
        }
        worst = std::max(worst, off / std::max(total, 1e-300));
    }
    return verdict("range-geometry", basis.gamma(), worst, 1e-9);
}

double max_coeff_error(const std::map<int, cplx>& a, const std::map<int, cplx>& b)
{
    double e = 0.0;
    for (const auto& [n, c] : a) {
        auto it = b.find(n);
        e = std::max(e, std::abs(c - (it == b.end() ? cplx(0.0) : it->second)) / std::max(1.0, std::abs(c)));
    }
    return e;
}

double max_coeff_error(const ZernikeExpansion& a, const ZernikeExpansion& b)
{
    double e = 0.0;
    for (const auto& [nk, c] : a.values) {
        auto it = b.values.find(nk);
        e = std::max(e, std::abs(c - (it == b.values.end() ? cplx(0.0) : it->second)) / std::max(1.0, std::abs(c)));
    }
    return e;
}

SuiteResult round_trip(const Basis& basis, Rng& rng)
{
    int n_max = basis.n_max();
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m) {
        IttForm f = random_itt(rng, m, n_max, basis, false);
        GridSpec spec = default_grid_spec(n_max, m + 4);
        SinoGrid s = forward_sino(itt_weighted_field(f, basis), basis.gamma(), spec);
        IttForm g = to_itt(s, m, basis);
        worst = std::max(worst, max_coeff_error(f.scalar, g.scalar));
        worst = std::max(worst, max_coeff_error(f.w1, g.w1));
        for (std::size_t j = 0; j < f.tt.size() && j < g.tt.size(); ++j) {
            worst = std::max(worst, max_coeff_error(f.tt[j].dz, g.tt[j].dz));
            worst = std::max(worst, max_coeff_error(f.tt[j].dzbar, g.tt[j].dzbar));
        }
        if (f.tt.size() != g.tt.size())
            worst = INFINITY;
    }
    return verdict("round-trip", basis.gamma(), worst, 1e-7);
}

SuiteResult kernel_cross(const Basis& basis, Rng& rng)
{
    double gamma = basis.gamma();
    double lambda = gamma + 1.0;
    double worst_series = 0.0;
    std::uniform_real_distribution<double> ur(0.0, 0.5), uw(0.0, 2.0 * pi);
    for (int i = 0; i < 10; ++i) {
        FanBeamPoint p = random_chord(rng);
        cplx z = std::polar(ur(rng), uw(rng));
        double th = p.theta();
        cplx w = z * std::polar(1.0, th) / cplx(0.0, 1.0);
        double t = std::sin(p.alpha);
        auto c = gegenbauer_all(200, lambda, t);
        cplx sum = 0.0, wp = 1.0;
        for (int n = 0; n <= 200; ++n) {
            sum += wp * c[n] * (n + lambda);
            wp *= w;
        }
        double g = factorial_real(gamma);
        cplx series = std::pow(p.mu(), 2.0 * gamma + 1.0) / (std::pow(2.0, 4.0 * gamma + 2.0) * g * g) *
                      std::polar(1.0, 2.0 * th) * sum;
        cplx closed = kernel_G(1, gamma, p, z);
        worst_series = std::max(worst_series, std::abs(closed - series) / std::abs(series));
    }

    int n_max = basis.n_max();
    TtPart t = random_tt(rng, 2, n_max);
    SinoGrid data = forward_sino(t.to_field(basis), fan_beam_grid(128, 64, gamma), n_max + 4);
    std::vector<cplx> zs;
    for (int l = 0; l < 8; ++l)
        zs.push_back(std::polar(0.1 * (l + 1), 0.7 * l));
    auto kr = recon_tt_kernel(data, 2, zs, basis);
    auto sv = evaluate_tt({t}, zs, basis);
    double worst_route = 0.0;
    for (std::size_t q = 0; q < zs.size(); ++q) {
        worst_route = std::max(worst_route, std::abs(kr[0].dz[q] - sv[0].dz[q]));
        worst_route = std::max(worst_route, std::abs(kr[0].dzbar[q] - sv[0].dzbar[q]));
    }
    return verdict("kernel-routes", gamma, std::max(worst_series / 1e-8, worst_route / 1e-5), 1.0);
}

SuiteResult potential_suite(const Basis& basis)
{
    double gamma = basis.gamma();
    // h = d^{gamma+1} (z + zbar) / 2 gives w1 = -i (1 - z zbar - (gamma+1)(z zbar + zbar^2)).
    PolyZZbar w1;
    const cplx mi(0.0, -1.0);
    w1.add(0, 0, mi);
    w1.add(1, 1, -mi * (gamma + 2.0));
    w1.add(0, 2, -mi * (gamma + 1.0));
    RadialPotential h = solve_potential(w1, gamma);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i)
        for (int l = 0; l < 7; ++l) {
            cplx z = std::polar(0.99 * i / 20.0, 0.4 + 2.0 * pi * l / 7.0);
            cplx want = std::pow(boundary_defining(z), gamma + 1.0) * z.real();
            worst = std::max(worst, std::abs(h.h(z) - want));
        }
    return verdict("potential", gamma, worst, 1e-6);
}

SuiteResult poincare_suite(double gamma, Rng& rng)
{
    double bound = poincare_bound(gamma);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        PolyZZbar u = random_poly(rng, 4) * PolyZZbar::d();
        worst = std::max(worst, poincare_ratio(u, gamma) / bound);
    }
    return verdict("poincare", gamma, worst, 1.0);
}

SuiteResult sigma_asymptotics(double gamma)
{
    double lo = INFINITY, hi = 0.0;
    for (int n = 50; n <= 200; ++n) {
        double v = std::exp(2.0 * log_sigma(n, 0, gamma)) * std::pow(n + 1.0, gamma + 1.0);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return verdict("sigma-asymptotics", gamma, (hi - lo) / lo, 0.2);
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& config)
{
    std::vector<SuiteResult> out;
    Rng rng(config.seed);
    const char* decomposition[] = {"orthonormality", "svd-reproduction", "gauge-annihilation", "range-geometry",
                                   "round-trip",     "kernel-routes",    "potential",          "poincare",
                                   "sigma-asymptotics"};
    for (double gamma : config.gammas) {
        auto guarded = [&](const std::string& name, auto&& fn) {
            try {
                out.push_back(fn());
            } catch (const std::exception& e) {
                SuiteResult r;
                r.name = name;
                r.gamma = gamma;
                r.margin = INFINITY;
                r.note = e.what();
                out.push_back(r);
            }
        };
        if (!(gamma > -1.0)) {
            SuiteResult r;
            r.name = "gamma-domain";
            r.gamma = gamma;
            r.note = "gamma must exceed -1";
            out.push_back(r);
            continue;
        }
        guarded("chord-weight", [&] { return chord_weight(gamma, rng); });
        if (std::abs(gamma) > config.safety) {
            for (const char* name : decomposition) {
                SuiteResult r;
                r.name = name;
                r.gamma = gamma;
                r.skipped = true;
                r.passed = true;
                r.note = "skipped: gamma outside the (-1,1) safety margin";
                out.push_back(r);
            }
            continue;
        }
        Basis basis(gamma, std::max(config.n_max, 0));
        guarded("orthonormality", [&] { return orthonormality(basis); });
        guarded("svd-reproduction", [&] { return svd_reproduction(basis); });
        guarded("gauge-annihilation", [&] { return gauge_annihilation(basis, rng); });
        guarded("range-geometry", [&] { return range_geometry(basis, rng); });
        guarded("round-trip", [&] { return round_trip(basis, rng); });
        guarded("kernel-routes", [&] { return kernel_cross(basis, rng); });
        guarded("potential", [&] { return potential_suite(basis); });
        guarded("poincare", [&] { return poincare_suite(gamma, rng); });
        guarded("sigma-asymptotics", [&] { return sigma_asymptotics(gamma); });
    }
    return out;
}

}  // namespace dtx
