#include "dtx/poly.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace dtx {

PolyZZbar::PolyZZbar(Terms terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == cplx(0.0); });
}

PolyZZbar PolyZZbar::constant(cplx c)
{
    return monomial(0, 0, c);
}

PolyZZbar PolyZZbar::monomial(int a, int b, cplx c)
{
    PolyZZbar p;
    p.add(a, b, c);
    return p;
}

PolyZZbar PolyZZbar::d()
{
    PolyZZbar p;
    p.add(0, 0, 1.0);
    p.add(1, 1, -1.0);
    return p;
}

cplx PolyZZbar::coeff(int a, int b) const
{
    auto it = terms_.find({a, b});
    return it == terms_.end() ? cplx(0.0) : it->second;
}

void PolyZZbar::add(int a, int b, cplx c)
{
    if (c == cplx(0.0))
        return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx(0.0))
            terms_.erase(it);
    }
}

void PolyZZbar::set(int a, int b, cplx c)
{
    if (c == cplx(0.0))
        terms_.erase({a, b});
    else
        terms_[{a, b}] = c;
}

int PolyZZbar::degree() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first + k.second);
    return d;
}

int PolyZZbar::max_z_power() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first);
    return d;
}

int PolyZZbar::max_zbar_power() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

bool PolyZZbar::is_zero(double tol) const
{
    return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

bool PolyZZbar::is_holomorphic(double tol) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto& kv) { return kv.first.second == 0 || std::abs(kv.second) <= tol; });
}

bool PolyZZbar::is_antiholomorphic(double tol) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto& kv) { return kv.first.first == 0 || std::abs(kv.second) <= tol; });
}

double PolyZZbar::max_abs_coeff() const
{
    double m = 0.0;
    for (const auto& [k, c] : terms_)
        m = std::max(m, std::abs(c));
    return m;
}

PolyZZbar PolyZZbar::conj() const
{
    PolyZZbar r;
    for (const auto& [k, c] : terms_)
        r.terms_[{k.second, k.first}] = std::conj(c);
    return r;
}

PolyZZbar PolyZZbar::wirtinger(Wirtinger which) const
{
    PolyZZbar r;
    for (const auto& [k, c] : terms_) {
        auto [a, b] = k;
        if (which == Wirtinger::d && a > 0)
            r.add(a - 1, b, c * double(a));
        else if (which == Wirtinger::dbar && b > 0)
            r.add(a, b - 1, c * double(b));
    }
    return r;
}

PolyZZbar PolyZZbar::angular_mode(int q) const
{
    PolyZZbar r;
    for (const auto& [k, c] : terms_)
        if (k.first - k.second == q)
            r.terms_.emplace(k, c);
    return r;
}

PolyZZbar PolyZZbar::pruned(double tol) const
{
    PolyZZbar r;
    for (const auto& [k, c] : terms_)
        if (std::abs(c) > tol)
            r.terms_.emplace(k, c);
    return r;
}

cplx PolyZZbar::operator()(cplx z) const
{
    if (terms_.empty())
        return 0.0;
    int na = max_z_power(), nb = max_zbar_power();
    std::vector<cplx> zp(na + 1), wp(nb + 1);
    zp[0] = wp[0] = 1.0;
    cplx zb = std::conj(z);
    for (int i = 1; i <= na; ++i)
        zp[i] = zp[i - 1] * z;
    for (int i = 1; i <= nb; ++i)
        wp[i] = wp[i - 1] * zb;
    cplx s = 0.0;
    for (const auto& [k, c] : terms_)
        s += c * zp[k.first] * wp[k.second];
    return s;
}

PolyZZbar& PolyZZbar::operator+=(const PolyZZbar& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

PolyZZbar& PolyZZbar::operator-=(const PolyZZbar& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, -c);
    return *this;
}

PolyZZbar& PolyZZbar::operator*=(cplx s)
{
    if (s == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_)
        c *= s;
    return *this;
}

PolyZZbar operator*(const PolyZZbar& a, const PolyZZbar& b)
{
    PolyZZbar r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

PolyZZbar wirtinger(const PolyZZbar& p, Wirtinger which)
{
    return p.wirtinger(which);
}

std::optional<PolyZZbar> divide_by_d(const PolyZZbar& p, double tol)
{
    // Along each diagonal a - b = const, p = (1 - z zbar) q is a cumulative-sum relation.
    std::map<int, std::map<int, cplx>> diag;
    for (const auto& [k, c] : p.terms())
        diag[k.first - k.second][std::min(k.first, k.second)] = c;
    double scale = std::max(1.0, p.max_abs_coeff());
    PolyZZbar q;
    for (const auto& [shift, entries] : diag) {
        int a0 = std::max(shift, 0), b0 = std::max(-shift, 0);
        int top = entries.rbegin()->first;
        cplx run = 0.0;
        for (int i = 0; i <= top; ++i) {
            auto it = entries.find(i);
            run += it == entries.end() ? cplx(0.0) : it->second;
            if (i < top)
                q.add(a0 + i, b0 + i, run);
        }
        if (std::abs(run) > tol * scale)
            return std::nullopt;
    }
    return q;
}

}  // namespace dtx
