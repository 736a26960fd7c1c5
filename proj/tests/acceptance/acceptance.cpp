// One pass/fail line per acceptance criterion; exit status is nonzero if any line fails.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dtx/basis.hpp"
#include "dtx/dataspace.hpp"
#include "dtx/invert.hpp"
#include "dtx/modefield.hpp"
#include "dtx/quadrature.hpp"
#include "dtx/specfun.hpp"
#include "dtx/synth.hpp"
#include "dtx/xray.hpp"

using dtx::cplx;
using dtx::Parity;
using dtx::PsiIndex;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* f, double a)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

dtx::FanBeamPoint random_chord(dtx::Rng& rng)
{
    std::uniform_real_distribution<double> ub(0.0, 2.0 * pi), ua(-pi / 2 + 1e-3, pi / 2 - 1e-3);
    double b = ub(rng);
    return {b, ua(rng)};
}

// Test-local three-term recurrence, independent of the library's Gegenbauer code.
std::vector<double> gegenbauer_ref(int n, double lambda, double t)
{
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    if (n >= 1)
        c[1] = 2.0 * lambda * t;
    for (int k = 2; k <= n; ++k)
        c[k] = (2.0 * t * (k + lambda - 1.0) * c[k - 1] - (k + 2.0 * lambda - 2.0) * c[k - 2]) / k;
    return c;
}

Outcome criterion1()
{
    Outcome o;
    dtx::Rng rng(101);
    double worst = 0.0;
    for (double g : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
        dtx::QuadRule rule = dtx::jacobi_rule(4, g);
        for (int i = 0; i < 40; ++i) {
            dtx::FanBeamPoint p = random_chord(rng);
            cplx v = dtx::chord_integrate(p, g, [](const dtx::PhasePoint&) { return cplx(1.0); }, rule);
            double want = std::pow(2.0 * p.mu(), 2.0 * g + 1.0) * std::beta(g + 1.0, g + 1.0);
            worst = std::max(worst, std::abs(v - want) / want);
        }
    }
    o.check(worst < 1e-12, "rel err too large");
    o.detail = fmt("max rel err %.3g (tol 1e-12)", worst) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome criterion2()
{
    Outcome o;
    std::string info;
    for (double g : {-0.5, 0.0, 0.5}) {
        const int n_top = 6;
        dtx::BoundaryGrid grid = dtx::fan_beam_grid(4 * n_top + 16, n_top + 3, g);
        auto idx = dtx::psi_lattice(n_top, 3, 3, Parity::plus);
        double lo = INFINITY, hi = 0.0;
        for (const auto& i : idx) {
            auto f = [&](const dtx::FanBeamPoint& p) { return dtx::psi_raw(i, p, g); };
            double v = dtx::boundary_inner(grid, f, f).real();
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double spread = (hi - lo) / lo;
        o.check(spread < 1e-10, fmt("gamma %g: pre-audit spread %.3g", g, spread));

        dtx::Basis basis(g, n_top);
        std::vector<std::vector<cplx>> s;
        for (const auto& i : idx)
            s.push_back(basis.psi_samples(i, grid));
        double worst = 0.0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b)
                worst = std::max(worst, std::abs(dtx::boundary_inner(grid, s[a], s[b]) - (a == b ? 1.0 : 0.0)));
        o.check(worst < 1e-9, fmt("gamma %g: Gram deviation %.3g", g, worst));
        info += fmt(" gamma=%g audit=%.15g", g, basis.audit_scale()) + fmt(" gram=%.2g spread=%.2g", worst, spread);
    }
    o.detail = (o.detail.empty() ? "" : o.detail + ";") + info;
    return o;
}

Outcome criterion3()
{
    Outcome o;
    double worst_rel = 0.0, worst_off = 0.0, worst_ratio = 0.0;
    for (double g : {-0.5, 0.0, 0.7}) {
        const int n_max = 8;
        dtx::Basis basis(g, n_max);
        dtx::GridSpec spec = dtx::default_grid_spec(n_max, 0);
        auto lattice = dtx::psi_lattice(n_max, 4, 4, Parity::plus);
        double rlo = INFINITY, rhi = 0.0;
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= n; ++k) {
                dtx::ModeField f(0);
                f.set_mode(0, basis.zernike_hat(n, k));
                dtx::SinoCoeffs c = dtx::sino_project(dtx::forward_sino(f, g, spec), lattice, basis);
                double s = basis.sigma(n, k);
                double off = 0.0;
                for (const auto& [idx, v] : c.values) {
                    if (idx.n == n && idx.k == k)
                        worst_rel = std::max(worst_rel, std::abs(v - s) / s);
                    else
                        off += std::norm(v);
                }
                worst_off = std::max(worst_off, off);
                double ratio = std::sqrt(dtx::disk_norm_squared(dtx::zernike_raw(n, k, g), g)) / s;
                rlo = std::min(rlo, ratio);
                rhi = std::max(rhi, ratio);
            }
        worst_ratio = std::max(worst_ratio, (rhi - rlo) / rlo);
    }
    o.check(worst_rel < 1e-6, "singular value mismatch");
    o.check(worst_off < 1e-9, "off-support mass");
    o.check(worst_ratio < 1e-8, "||Z||/sigma not constant");
    o.detail = fmt("sigma rel err %.3g, off mass %.3g", worst_rel, worst_off) +
               fmt(", ||Z||/sigma spread %.3g", worst_ratio) + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion4()
{
    Outcome o;
    dtx::Rng rng(404);
    double worst = 0.0;
    for (double g : {-0.5, 0.0, 0.5}) {
        for (int t = 0; t < 20; ++t) {
            int order = t % 3;
            int deg = 1 + t % 4;
            dtx::ModeField q = dtx::random_gauge_potential(rng, order, deg);
            dtx::BoundaryGrid grid = dtx::fan_beam_grid(4 * (deg + 2) + 8, deg + 6, g);
            dtx::SinoGrid s = dtx::forward_gauge_sino(q, grid, deg + 4);
            for (cplx v : s.values)
                worst = std::max(worst, std::abs(v));
        }
    }
    o.check(worst < 1e-9, "nonzero transform of a potential field");
    o.detail = fmt("max |I(d^s(d p))| %.3g (tol 1e-9)", worst) + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion5()
{
    Outcome o;
    dtx::Rng rng(505);
    double worst_off = 0.0, worst_diag = 0.0;
    for (double g : {-0.5, 0.0, 0.5}) {
        const int n_max = 6;
        dtx::Basis basis(g, n_max);
        for (int m = 1; m <= 4; ++m) {
            dtx::TtPart t = dtx::random_tt(rng, m, n_max);
            dtx::SinoGrid s = dtx::forward_sino(t.to_field(basis), g, dtx::default_grid_spec(n_max, m + 8));
            int p = m / 2;
            Parity par = m % 2 == 0 ? Parity::plus : Parity::minus;
            dtx::SinoCoeffs c = dtx::sino_project(s, dtx::psi_lattice(n_max, p + 3, p + 4, par), basis);
            dtx::Block want = m % 2 == 0 ? dtx::Block::pi2j(p) : dtx::Block::pi2j1(p);
            double off = 0.0, total = 0.0;
            for (const auto& [idx, v] : c.values) {
                total += std::norm(v);
                if (!want.contains(idx))
                    off += std::norm(v);
            }
            worst_off = std::max(worst_off, off / total);
            // Each diagonal entry is occupied by sigma times the tt coefficient.
            for (int n = 0; n <= n_max; ++n) {
                PsiIndex lo = dtx::shifted_index(n, 0, m);
                PsiIndex hi = dtx::shifted_index(n, n, -m);
                o.check(want.contains(lo) && want.contains(hi), "shifted index outside the expected block");
                cplx a = basis.sigma(n, 0) * t.dz.at(n), b = basis.sigma(n, n) * t.dzbar.at(n);
                worst_diag = std::max(worst_diag, std::abs(c.get(lo) - a) / std::abs(a));
                worst_diag = std::max(worst_diag, std::abs(c.get(hi) - b) / std::abs(b));
            }
        }
    }
    // Blocks partition the lattice of each parity.
    bool partition = true;
    for (Parity par : {Parity::plus, Parity::minus})
        for (int n = 0; n <= 12; ++n)
            for (int k = -18; k <= 18; ++k) {
                PsiIndex idx{n, k, par};
                int hits = 0;
                if (par == Parity::plus) {
                    hits += dtx::Block::pi0().contains(idx);
                    for (int j = 1; j <= 40; ++j)
                        hits += dtx::Block::pi2j(j).contains(idx);
                } else {
                    hits += dtx::Block::piperp().contains(idx);
                    for (int j = 0; j <= 40; ++j)
                        hits += dtx::Block::pi2j1(j).contains(idx);
                }
                partition = partition && hits == 1;
            }
    o.check(worst_off < 1e-9, "complementary-block energy");
    o.check(worst_diag < 1e-6, "diagonal coefficient mismatch");
    o.check(partition, "blocks do not partition the lattice");
    o.detail = fmt("complementary energy %.3g, diagonal rel err %.3g", worst_off, worst_diag) +
               (partition ? ", partition ok" : "") + (o.pass ? "" : "; " + o.detail);
    return o;
}

double coeff_err(const std::map<int, cplx>& a, const std::map<int, cplx>& b)
{
    double e = 0.0;
    std::set<int> keys;
    for (const auto& [k, v] : a)
        keys.insert(k);
    for (const auto& [k, v] : b)
        keys.insert(k);
    for (int k : keys) {
        cplx x = a.count(k) ? a.at(k) : cplx(0.0), y = b.count(k) ? b.at(k) : cplx(0.0);
        e = std::max(e, std::abs(x - y) / std::max(std::abs(x), 1e-300));
    }
    return e;
}

double coeff_err(const dtx::ZernikeExpansion& a, const dtx::ZernikeExpansion& b)
{
    double e = 0.0;
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : a.values)
        keys.insert(k);
    for (const auto& [k, v] : b.values)
        keys.insert(k);
    for (auto k : keys) {
        cplx x = a.values.count(k) ? a.values.at(k) : cplx(0.0);
        cplx y = b.values.count(k) ? b.values.at(k) : cplx(0.0);
        e = std::max(e, std::abs(x - y) / std::max(std::abs(x), 1e-300));
    }
    return e;
}

double itt_err(const dtx::IttForm& f, const dtx::IttForm& g)
{
    if (f.tt.size() != g.tt.size())
        return INFINITY;
    double e = std::max(coeff_err(f.scalar, g.scalar), coeff_err(f.w1, g.w1));
    for (std::size_t j = 0; j < f.tt.size(); ++j)
        e = std::max({e, coeff_err(f.tt[j].dz, g.tt[j].dz), coeff_err(f.tt[j].dzbar, g.tt[j].dzbar)});
    return e;
}

Outcome criterion6()
{
    Outcome o;
    dtx::Rng rng(606);
    double worst = 0.0, worst_gauge = 0.0;
    for (double g : {-0.5, 0.0, 0.5}) {
        const int n_max = 6;
        dtx::Basis basis(g, n_max);
        for (int m = 1; m <= 4; ++m) {
            dtx::IttForm f = dtx::random_itt(rng, m, n_max, basis, true);
            dtx::GridSpec spec = dtx::default_grid_spec(n_max, m + 4);
            dtx::BoundaryGrid grid = dtx::make_grid(spec, g);
            // Odd orders carry the genuine curl term I(*dh) through the potential.
            dtx::SinoGrid s = dtx::forward_itt_sino(f, basis, grid, spec.chord_nodes);
            worst = std::max(worst, itt_err(f, dtx::to_itt(s, m, basis)));

            dtx::ModeField q = dtx::random_gauge_potential(rng, m - 1, 3);
            dtx::SinoGrid extra = dtx::forward_gauge_sino(q, grid, spec.chord_nodes + 4);
            for (std::size_t i = 0; i < s.values.size(); ++i)
                s.values[i] += extra.values[i];
            worst_gauge = std::max(worst_gauge, itt_err(f, dtx::to_itt(s, m, basis)));
        }
    }
    o.check(worst < 1e-7, "round trip");
    o.check(worst_gauge < 1e-7, "gauge invariance");
    o.detail = fmt("round-trip rel err %.3g, with gauge term %.3g (tol 1e-7)", worst, worst_gauge) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion7()
{
    Outcome o;
    dtx::Rng rng(707);
    double worst_series = 0.0;
    for (int i = 0; i < 50; ++i) {
        double g = std::vector<double>{-0.5, 0.0, 0.5}[i % 3];
        int j = i % 3;
        dtx::FanBeamPoint p = random_chord(rng);
        std::uniform_real_distribution<double> ur(0.0, 0.5), uw(0.0, 2.0 * pi);
        cplx z = std::polar(ur(rng), uw(rng));
        double th = p.theta();
        double lambda = g + 1.0;
        cplx w = z * std::polar(1.0, th) / cplx(0.0, 1.0);
        auto c = gegenbauer_ref(200, lambda, std::sin(p.alpha));
        cplx sum = 0.0, wp = 1.0;
        for (int n = 0; n <= 200; ++n) {
            sum += wp * c[n] * (n + lambda);
            wp *= w;
        }
        double fact = std::tgamma(g + 1.0);
        cplx series = std::pow(p.mu(), 2.0 * g + 1.0) / (std::pow(2.0, 4.0 * g + 2.0) * fact * fact) *
                      std::polar(1.0, 2.0 * j * th) * sum;
        cplx closed = dtx::kernel_G(j, g, p, z);
        worst_series = std::max(worst_series, std::abs(closed - series) / std::abs(series));
    }

    double worst_route = 0.0, worst_scale = 0.0;
    for (double g : {-0.5, 0.0, 0.5}) {
        const int n_max = 6;
        dtx::Basis basis(g, n_max);
        dtx::BoundaryGrid grid = dtx::fan_beam_grid(128, 64, g);
        std::vector<cplx> zs = dtx::default_z_grid(0.8, 4, 16);
        for (int m = 1; m <= 3; ++m) {
            dtx::IttForm f = dtx::random_itt(rng, m, n_max, basis, false);
            dtx::SinoGrid s = dtx::forward_sino(dtx::itt_weighted_field(f, basis), grid, n_max + 4);
            dtx::IttForm rec = dtx::to_itt(s, m, basis);
            auto kr = dtx::recon_tt_kernel(s, m, zs, basis);
            auto sv = dtx::evaluate_tt(rec.tt, zs, basis);
            if (kr.size() != sv.size()) {
                worst_route = INFINITY;
                continue;
            }
            for (std::size_t jj = 0; jj < kr.size(); ++jj)
                for (std::size_t q = 0; q < zs.size(); ++q)
                    worst_route = std::max({worst_route, std::abs(kr[jj].dz[q] - sv[jj].dz[q]),
                                            std::abs(kr[jj].dzbar[q] - sv[jj].dzbar[q])});
        }
        double measured = dtx::measured_kernel_ratio(basis, 1, grid);
        worst_scale = std::max(worst_scale, std::abs(measured * dtx::kernel_pairing_scale(basis) - 1.0));
    }
    o.check(worst_series < 1e-8, "closed form vs series");
    o.check(worst_route < 1e-5, "kernel vs svd route");
    o.detail = fmt("series rel err %.3g, route diff %.3g", worst_series, worst_route) +
               fmt(", measured/applied kernel scale deviation %.3g", worst_scale) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion8()
{
    Outcome o;
    double worst_h = 0.0, worst_t = 0.0;
    dtx::Rng rng(808);
    for (double g : {-0.5, 0.0, 0.5}) {
        // h = d^{g+1} Re z, so w1 = -2i d^{-g} dh = -i (1 - z zbar - (g+1)(z zbar + zbar^2)).
        dtx::PolyZZbar w1;
        const cplx mi(0.0, -1.0);
        w1.add(0, 0, mi);
        w1.add(1, 1, -mi * (g + 2.0));
        w1.add(0, 2, -mi * (g + 1.0));
        dtx::RadialPotential h = dtx::solve_potential(w1, g);
        for (int i = 0; i <= 99; ++i)
            for (int l = 0; l < 9; ++l) {
                cplx z = std::polar(0.01 * i, 0.3 + 2.0 * pi * l / 9.0);
                double want = std::pow(1.0 - std::norm(z), g + 1.0) * z.real();
                worst_h = std::max(worst_h, std::abs(h.h(z) - want));
            }
        // Transform consistency on random chords, random w1 orthogonal to ker dbar.
        dtx::Basis basis(g, 5);
        dtx::ZernikeExpansion e = dtx::random_zernike(rng, 5, 1);
        dtx::PolyZZbar w = e.to_poly(basis);
        dtx::RadialPotential hr = dtx::solve_potential(w, g);
        dtx::QuadRule fine = dtx::jacobi_rule(64, g), exact = dtx::jacobi_rule(8, g);
        dtx::ModeField form(1);
        form.set_mode(1, w);
        for (int c = 0; c < 30; ++c) {
            dtx::FanBeamPoint p = random_chord(rng);
            cplx a = hr.star_d_transform(p, fine);
            cplx b = dtx::forward_chord(form, p, g, exact);
            worst_t = std::max(worst_t, std::abs(a - b));
        }
    }
    o.check(worst_h < 1e-6, "manufactured potential");
    o.check(worst_t < 1e-6, "I(*dh) vs I(d^gamma w1 dz)");
    o.detail = fmt("max |h - h_exact| %.3g, transform diff %.3g (tol 1e-6)", worst_h, worst_t) +
               (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion9()
{
    Outcome o;
    dtx::Rng rng(909);
    double worst_ratio = 0.0;
    for (double g : {-0.5, 0.0, 0.5, 0.9}) {
        double bound = std::max(std::pow(2.0, -g), 1.0) / (1.0 - g);
        for (int i = 0; i < 50; ++i) {
            dtx::PolyZZbar u = dtx::random_poly(rng, 1 + i % 5) * dtx::PolyZZbar::d();
            worst_ratio = std::max(worst_ratio, dtx::poincare_ratio(u, g) / bound);
        }
    }
    double worst_orth = 0.0;
    for (double g : {-0.5, 0.0, 0.5})
        for (auto side : {dtx::HoloSide::ker_dbar, dtx::HoloSide::ker_d})
            for (int i = 0; i < 10; ++i) {
                dtx::PolyZZbar p = dtx::random_poly(rng, 5);
                auto hp = dtx::holo_project(p, g, side);
                double scale = dtx::disk_norm_squared(p, g);
                worst_orth = std::max(worst_orth, std::abs(dtx::disk_inner_exact(hp.projection, hp.residual, g)) / scale);
                bool shape = side == dtx::HoloSide::ker_dbar ? hp.projection.is_holomorphic()
                                                             : hp.projection.is_antiholomorphic();
                o.check(shape, "projection leaves its kernel");
            }
    double worst_cont = 0.0;
    for (double g : {-0.5, 0.0, 0.5}) {
        double c2 = std::pow(2.0, 2.0 * g + 1.0) * std::beta(g + 1.0, g + 1.0);
        for (int i = 0; i < 30; ++i) {
            int order = i % 3, deg = i % 5;
            dtx::ModeField f = dtx::random_field(rng, order, deg);
            dtx::GridSpec spec = dtx::default_grid_spec(2 * deg + 4, order + 2);
            dtx::SinoGrid s = dtx::forward_sino(f, g, spec);
            double lhs = dtx::grid_norm_squared(s);
            double rhs = c2 * dtx::bundle_norm_squared(f, g);
            worst_cont = std::max(worst_cont, lhs / rhs);
        }
    }
    o.check(worst_ratio <= 1.0, "Poincare bound violated");
    o.check(worst_orth < 1e-12, "projection not orthogonal");
    // Rounding slack only: the constant mode attains the bound.
    o.check(worst_cont <= 1.0 + 1e-10, "continuity bound violated");
    o.detail = fmt("poincare ratio/bound %.4g, orthogonality %.3g", worst_ratio, worst_orth) +
               fmt(", continuity ratio %.12g", worst_cont) + (o.pass ? "" : "; " + o.detail);
    return o;
}

Outcome criterion10()
{
    Outcome o;
    std::string info;
    for (double g : {-0.5, 0.0, 0.5}) {
        double lo = INFINITY, hi = 0.0;
        for (int n = 50; n <= 200; ++n) {
            double s = dtx::sigma(n, 0, g);
            double v = s * s * std::pow(n + 1.0, g + 1.0);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double var = (hi - lo) / lo;
        o.check(var < 0.2, fmt("gamma %g: variation %.3g", g, var));
        info += fmt(" gamma=%g: %.3g", g, var);
    }
    o.detail = "variation" + info + " (tol 0.2)" + (o.pass ? "" : "; " + o.detail);
    return o;
}

}  // namespace

int main()
{
    std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
        {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}};
    int failures = 0;
    for (auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %2d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
