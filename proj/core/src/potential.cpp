#include "dtx/potential.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "dtx/errors.hpp"
#include "dtx/specfun.hpp"

namespace dtx {

namespace {
constexpr double r_floor = 1e-150;
constexpr double series_radius = 1e-6;
constexpr double complement_switch = 0.5;
}  // namespace

RadialPotential::RadialPotential(const PolyZZbar& source, double gamma) : gamma_(gamma), source_(source)
{
    require_gamma(gamma, true);
    for (const auto& [k, c] : source.terms())
        modes_[k.first - k.second + 1].push_back({k.first + k.second, c});
    for (const auto& [q, terms] : modes_) {
        if (q < 1)
            continue;
        cplx total = 0.0;
        for (const auto& t : terms)
            total += t.c * boost::math::beta(0.5 * (q + t.e + 1), gamma_ + 1.0);
        compat_ = std::max(compat_, std::abs(total));
    }
}

std::vector<int> RadialPotential::modes() const
{
    std::vector<int> out;
    for (const auto& [q, t] : modes_)
        out.push_back(q);
    return out;
}

cplx RadialPotential::radial(int q, double r, bool divide_weight) const
{
    auto it = modes_.find(q);
    if (it == modes_.end() || r >= 1.0)
        return 0.0;
    double x = r * r;
    double b = gamma_ + 1.0;
    cplx s = 0.0;
    if (q >= 1 && r < series_radius) {
        // r^{-q} B_x(a, b) = r^{e+1} (1 + a (1 - b) x / (a + 1) + O(x^2)) / a
        for (const auto& t : it->second) {
            double a = 0.5 * (q + t.e + 1);
            s += t.c * std::pow(r, t.e + 1.0) * (1.0 + a * (1.0 - b) * x / (a + 1.0)) / a;
        }
    } else {
        bool from_zero = q >= 1 && r < complement_switch;
        for (const auto& t : it->second) {
            double a = 0.5 * (q + t.e + 1);
            double v = from_zero ? boost::math::beta(a, b, x) : -boost::math::betac(a, b, x);
            s += t.c * v;
        }
        s *= std::pow(r, -double(q));
    }
    if (divide_weight)
        s /= std::pow(1.0 - x, gamma_);
    return s;
}

cplx RadialPotential::mode_value(int q, double r) const
{
    return radial(q, r, false);
}

cplx RadialPotential::h(cplx z) const
{
    double r = std::abs(z), w = std::arg(z);
    cplx s = 0.0;
    for (const auto& [q, t] : modes_)
        s += radial(q, r, false) * std::polar(1.0, q * w);
    return s;
}

cplx RadialPotential::h_over_weight(cplx z) const
{
    double r = std::abs(z), w = std::arg(z);
    cplx s = 0.0;
    for (const auto& [q, t] : modes_)
        s += radial(q, r, true) * std::polar(1.0, q * w);
    return s;
}

cplx RadialPotential::dbar_h_over_weight(cplx z) const
{
    // Mode q+1 of dbar h / d^gamma is P_{q-1}(r) - (q / r) h_q / d^gamma.
    double r = std::max(std::abs(z), r_floor), w = std::arg(z);
    if (r >= 1.0)
        return 0.0;
    cplx s = 0.0;
    for (const auto& [q, terms] : modes_) {
        cplx pm = 0.0;
        for (const auto& t : terms)
            pm += t.c * std::pow(r, double(t.e));
        cplx v = pm;
        if (q != 0)
            v -= (double(q) / r) * radial(q, r, true);
        s += v * std::polar(1.0, (q + 1) * w);
    }
    return s;
}

RadialModeFn RadialPotential::sample_mode(int q, const std::vector<double>& r) const
{
    RadialModeFn f;
    f.q = q;
    f.r = r;
    f.h.reserve(r.size());
    for (double x : r)
        f.h.push_back(radial(q, x, false));
    return f;
}

cplx RadialPotential::star_d_transform(const FanBeamPoint& p, const QuadRule& jacobi) const
{
    if (modes_.empty())
        return 0.0;
    double th = p.theta();
    cplx ep = std::polar(1.0, th), em = std::conj(ep);
    const cplx i(0.0, 1.0);
    return chord_integrate(
        p, gamma_,
        [&](const PhasePoint& q) { return -i * ep * source_(q.z) + i * em * dbar_h_over_weight(q.z); }, jacobi);
}

}  // namespace dtx
