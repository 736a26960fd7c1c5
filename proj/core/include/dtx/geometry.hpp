#pragma once

#include <complex>

namespace dtx {

struct FanBeamPoint {
    double beta = 0.0;
    double alpha = 0.0;

    double mu() const;
    double chord_length() const;
    // Direction angle beta + pi + alpha of the chord.
    double theta() const;
};

struct PhasePoint {
    std::complex<double> z;
    double theta = 0.0;
};

double wrap_angle(double a);
double boundary_defining(std::complex<double> z);

PhasePoint chord_point(const FanBeamPoint& p, double t);
// Same as chord_point without the range check; used inside quadrature loops.
std::complex<double> chord_z(const FanBeamPoint& p, double t);
double d_along(const FanBeamPoint& p, double t);
FanBeamPoint fanbeam_project(const PhasePoint& q);
// Parameter t* with chord_point(fanbeam_project(q), t*).z == q.z.
double fanbeam_parameter(const PhasePoint& q);
FanBeamPoint scatter_antipodal(const FanBeamPoint& p);

}  // namespace dtx
