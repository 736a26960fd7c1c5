#include "dtx/modefield.hpp"

#include <cmath>
#include <numbers>

#include "dtx/errors.hpp"
#include "dtx/quadrature.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

ModeField::ModeField(int order) : order_(order)
{
    if (order < 0)
        throw DomainError("ModeField: negative order");
}

ModeField::ModeField(int order, std::map<int, PolyZZbar> modes) : ModeField(order)
{
    for (auto& [k, p] : modes)
        set_mode(k, std::move(p));
}

void ModeField::check_key(int k) const
{
    if (std::abs(k) > order_ || (k - order_) % 2 != 0)
        throw PreconditionError("ModeField: mode index incompatible with order");
}

const PolyZZbar& ModeField::mode(int k) const
{
    static const PolyZZbar zero;
    auto it = modes_.find(k);
    return it == modes_.end() ? zero : it->second;
}

void ModeField::set_mode(int k, PolyZZbar p)
{
    check_key(k);
    if (p.empty())
        modes_.erase(k);
    else
        modes_[k] = std::move(p);
}

void ModeField::add_mode(int k, const PolyZZbar& p)
{
    check_key(k);
    PolyZZbar sum = mode(k) + p;
    set_mode(k, std::move(sum));
}

int ModeField::max_degree() const
{
    int d = -1;
    for (const auto& [k, p] : modes_)
        d = std::max(d, p.degree());
    return d;
}

bool ModeField::is_tt(double tol) const
{
    for (const auto& [k, p] : modes_) {
        if (p.is_zero(tol))
            continue;
        if (std::abs(k) != order_)
            return false;
        if (order_ == 0)
            return false;
        if (k == order_ && !p.is_holomorphic(tol))
            return false;
        if (k == -order_ && !p.is_antiholomorphic(tol))
            return false;
    }
    return true;
}

cplx ModeField::operator()(cplx z, double theta) const
{
    cplx s = 0.0;
    for (const auto& [k, p] : modes_)
        s += p(z) * std::polar(1.0, k * theta);
    return s;
}

ModeField& ModeField::operator+=(const ModeField& o)
{
    if (o.order_ != order_)
        throw PreconditionError("ModeField: adding fields of different order");
    for (const auto& [k, p] : o.modes_)
        add_mode(k, p);
    return *this;
}

ModeField& ModeField::operator*=(cplx s)
{
    for (auto& [k, p] : modes_)
        p *= s;
    std::erase_if(modes_, [](const auto& kv) { return kv.second.empty(); });
    return *this;
}

ModeField lift_ell_m(int m, const std::vector<SymmetricTerm>& terms)
{
    ModeField f(m);
    for (const auto& t : terms) {
        if (t.a < 0 || t.b < 0 || t.a + t.b != m)
            throw PreconditionError("lift_ell_m: term degrees must sum to the order");
        f.add_mode(t.a - t.b, t.coeff);
    }
    return f;
}

ModeField apply_X(const ModeField& f)
{
    ModeField out(f.order() + 1);
    for (const auto& [k, p] : f.modes()) {
        out.add_mode(k + 1, p.wirtinger(Wirtinger::d));
        out.add_mode(k - 1, p.wirtinger(Wirtinger::dbar));
    }
    return out;
}

ModeField apply_Xperp(const PolyZZbar& u)
{
    // X_perp = -i e^{i theta} d + i e^{-i theta} dbar
    ModeField out(1);
    out.add_mode(1, u.wirtinger(Wirtinger::d) * cplx(0.0, -1.0));
    out.add_mode(-1, u.wirtinger(Wirtinger::dbar) * cplx(0.0, 1.0));
    return out;
}

ModeField star_d(const PolyZZbar& u)
{
    return apply_Xperp(u);
}

ModeField L_embed(const ModeField& f)
{
    return ModeField(f.order() + 2, f.modes());
}

ModeField multiply(const ModeField& f, const PolyZZbar& p)
{
    ModeField out(f.order());
    for (const auto& [k, q] : f.modes())
        out.set_mode(k, q * p);
    return out;
}

HoloProjection holo_project(const PolyZZbar& p, double gamma, HoloSide side)
{
    require_gamma(gamma, false);
    // Monomials z^n are mutually orthogonal, so the projection is a diagonal solve.
    HoloProjection r;
    std::map<int, cplx> proj;
    for (const auto& [k, c] : p.terms()) {
        auto [a, b] = k;
        int n = side == HoloSide::ker_dbar ? a - b : b - a;
        if (n < 0)
            continue;
        int s = a + b;
        proj[n] += c * (beta(0.5 * (s + n) + 1.0, gamma + 1.0) / beta(n + 1.0, gamma + 1.0));
    }
    for (const auto& [n, c] : proj) {
        if (side == HoloSide::ker_dbar)
            r.projection.add(n, 0, c);
        else
            r.projection.add(0, n, c);
    }
    r.residual = p - r.projection;
    return r;
}

double gradient_norm_squared(const PolyZZbar& u, double gamma)
{
    PolyZZbar du = u.wirtinger(Wirtinger::d);
    PolyZZbar dbu = u.wirtinger(Wirtinger::dbar);
    PolyZZbar ux = du + dbu;
    PolyZZbar uy = (du - dbu) * cplx(0.0, 1.0);
    return disk_norm_squared(ux, gamma) + disk_norm_squared(uy, gamma);
}

double poincare_ratio(const PolyZZbar& u, double gamma)
{
    require_gamma(gamma, true);
    if (!divide_by_d(u, 1e-10))
        throw PreconditionError("poincare_ratio: u does not vanish on the unit circle");
    double g = gradient_norm_squared(u, gamma);
    if (!(g > 0.0))
        throw PreconditionError("poincare_ratio: u is zero");
    return disk_norm_squared(u, gamma) / g;
}

double poincare_bound(double gamma)
{
    require_gamma(gamma, true);
    return std::max(std::pow(2.0, -gamma), 1.0) / (1.0 - gamma);
}

double bundle_norm_squared(const ModeField& f, double gamma)
{
    double s = 0.0;
    for (const auto& [k, p] : f.modes())
        s += disk_norm_squared(p, gamma);
    return 2.0 * std::numbers::pi * s;
}

}  // namespace dtx
