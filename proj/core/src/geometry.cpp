#include "dtx/geometry.hpp"

#include <cmath>
#include <numbers>

#include "dtx/errors.hpp"

namespace dtx {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double edge_tol = 1e-12;
}  // namespace

double FanBeamPoint::mu() const
{
    return std::cos(alpha);
}

double FanBeamPoint::chord_length() const
{
    return 2.0 * std::cos(alpha);
}

double FanBeamPoint::theta() const
{
    return beta + pi + alpha;
}

double wrap_angle(double a)
{
    double r = std::fmod(a, 2.0 * pi);
    if (r < 0.0)
        r += 2.0 * pi;
    if (r >= 2.0 * pi)
        r = 0.0;
    return r;
}

double boundary_defining(std::complex<double> z)
{
    return 1.0 - std::norm(z);
}

std::complex<double> chord_z(const FanBeamPoint& p, double t)
{
    return std::polar(1.0, p.beta) + t * std::polar(1.0, p.theta());
}

PhasePoint chord_point(const FanBeamPoint& p, double t)
{
    double tau = p.chord_length();
    if (!(t >= -edge_tol) || !(t <= tau + edge_tol))
        throw RangeError("chord_point: t outside [0, 2 cos alpha]");
    return {chord_z(p, t), p.theta()};
}

double d_along(const FanBeamPoint& p, double t)
{
    return 2.0 * p.mu() * t - t * t;
}

FanBeamPoint fanbeam_project(const PhasePoint& q)
{
    if (std::abs(q.z) > 1.0 + edge_tol)
        throw DomainError("fanbeam_project: |z| > 1");
    double s = (q.z * std::polar(1.0, -q.theta)).imag();
    if (std::abs(s) > 1.0 + edge_tol)
        throw DomainError("fanbeam_project: |sin alpha| > 1");
    s = std::clamp(s, -1.0, 1.0);
    double alpha = std::asin(s);
    return {wrap_angle(q.theta - pi - alpha), alpha};
}

double fanbeam_parameter(const PhasePoint& q)
{
    FanBeamPoint p = fanbeam_project(q);
    return (q.z * std::polar(1.0, -q.theta)).real() + p.mu();
}

FanBeamPoint scatter_antipodal(const FanBeamPoint& p)
{
    return {wrap_angle(p.beta + pi + 2.0 * p.alpha), -p.alpha};
}

}  // namespace dtx
