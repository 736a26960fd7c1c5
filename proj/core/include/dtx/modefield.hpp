#pragma once

#include <map>
#include <vector>

#include "dtx/poly.hpp"

namespace dtx {

// Symmetric m-tensor stored through its fiberwise Fourier modes k -> f_k, f = sum_k f_k e^{ik theta}.
class ModeField {
public:
    ModeField() = default;
    explicit ModeField(int order);
    ModeField(int order, std::map<int, PolyZZbar> modes);

    int order() const { return order_; }
    const std::map<int, PolyZZbar>& modes() const { return modes_; }
    const PolyZZbar& mode(int k) const;
    void set_mode(int k, PolyZZbar p);
    void add_mode(int k, const PolyZZbar& p);

    bool empty() const { return modes_.empty(); }
    int max_degree() const;
    // Only keys +-m, mode m holomorphic, mode -m antiholomorphic.
    bool is_tt(double tol = 0.0) const;

    cplx operator()(cplx z, double theta) const;

    ModeField& operator+=(const ModeField& o);
    friend ModeField operator+(ModeField a, const ModeField& b) { return a += b; }
    ModeField& operator*=(cplx s);

private:
    void check_key(int k) const;
    int order_ = 0;
    std::map<int, PolyZZbar> modes_;
};

// c dz^a dzbar^b, symmetrized.
struct SymmetricTerm {
    int a = 0;
    int b = 0;
    PolyZZbar coeff;
};

ModeField lift_ell_m(int m, const std::vector<SymmetricTerm>& terms);
// Symmetrized derivative d^s in mode form.
ModeField apply_X(const ModeField& f);
// sin(theta) d_x u - cos(theta) d_y u.
ModeField apply_Xperp(const PolyZZbar& u);
// Lift of the one-form *du.
ModeField star_d(const PolyZZbar& u);
// Symmetrized product with the metric.
ModeField L_embed(const ModeField& f);
ModeField multiply(const ModeField& f, const PolyZZbar& p);

enum class HoloSide { ker_dbar, ker_d };

struct HoloProjection {
    PolyZZbar projection;
    PolyZZbar residual;
};

HoloProjection holo_project(const PolyZZbar& p, double gamma, HoloSide side);

// ||u||^2 / ||grad u||^2 in L^2_gamma(disk), u must be divisible by 1 - |z|^2.
double poincare_ratio(const PolyZZbar& u, double gamma);
double gradient_norm_squared(const PolyZZbar& u, double gamma);
double poincare_bound(double gamma);

// ||f||^2 in L^2_gamma of the unit circle bundle: 2 pi sum_k ||f_k||^2.
double bundle_norm_squared(const ModeField& f, double gamma);

}  // namespace dtx
