#pragma once

#include <vector>

#include "dtx/basis.hpp"
#include "dtx/dataspace.hpp"
#include "dtx/expansion.hpp"
#include "dtx/potential.hpp"
#include "dtx/xray.hpp"

namespace dtx {

struct InvertDiagnostics {
    // Indices whose singular value fell below the conditioning floor.
    std::vector<PsiIndex> refused;
};

// Singular values below this fraction of sigma_{0,0} are refused.
inline constexpr double sigma_floor_rel = 1e-10;

ZernikeExpansion invert_pi0(const SinoCoeffs& u0, const Basis& basis, InvertDiagnostics* diag = nullptr);
ZernikeExpansion recover_w1(const SinoCoeffs& u_perp, const Basis& basis, InvertDiagnostics* diag = nullptr);
// tt parts for j = 1..p (even m = 2p) or j = 0..p (odd m = 2p+1).
std::vector<TtPart> recon_tt_svd(const SinoCoeffs& u, int m, const Basis& basis,
                                 InvertDiagnostics* diag = nullptr);

cplx kernel_G(int j, double gamma, const FanBeamPoint& p, cplx z, double eps = 1e-3);
// Factor applied to data/kernel pairings so they return unit-normalized tt modes.
double kernel_pairing_scale(const Basis& basis);
// Raw pairing of sigma_{0,0} psi-hat_{0,-j} with G_{2j}(.;0) divided by Zhat_{0,0}; equals 1/kernel_pairing_scale.
double measured_kernel_ratio(const Basis& basis, int j, const BoundaryGrid& grid);

struct KernelModes {
    int order = 0;
    std::vector<cplx> dz;     // holomorphic coefficient of dz^order at each z
    std::vector<cplx> dzbar;  // antiholomorphic coefficient of dzbar^order
};

std::vector<cplx> default_z_grid(double r_max = 0.9, int n_r = 8, int n_omega = 64);
// Smallest fan-beam grid on which the kernel route resolves |z| <= r_max for data of degree n_max.
BoundaryGrid kernel_grid(double r_max, int n_max, int m, double gamma);
std::vector<KernelModes> recon_tt_kernel(const SinoGrid& data, int m, const std::vector<cplx>& z_points,
                                         const Basis& basis);
// Same modes evaluated from coefficient-route tt parts.
std::vector<KernelModes> evaluate_tt(const std::vector<TtPart>& parts, const std::vector<cplx>& z_points,
                                     const Basis& basis);

// h with w1 = -2i d^{-gamma} d h and h = 0 on the circle; verifies the relation at interior points.
RadialPotential solve_potential(const PolyZZbar& w1, double gamma);
// Largest |-2i d^{-gamma} dh - w1| / max(1, max|w1|) over interior sample points, by finite differences.
double potential_residual(const RadialPotential& h, const PolyZZbar& w1);

struct IttForm {
    int m = 0;
    double gamma = 0.0;
    ZernikeExpansion scalar;    // even order: f0
    ZernikeExpansion w1;        // odd order: data-level one-form coefficient
    RadialPotential potential;  // odd order: curl potential h
    std::vector<TtPart> tt;

    bool empty() const;
};

IttForm to_itt(const SinoCoeffs& data, int m, const Basis& basis, const RangeTolerances& tol = {});
IttForm to_itt(const SinoGrid& data, int m, const Basis& basis, const RangeTolerances& tol = {});
// Index set used when projecting grid data for order m.
std::vector<PsiIndex> itt_projection_lattice(int n_max, int m);

// Order-m field with the same weighted transform as the itt form (w1 dz stands in for d^{-gamma} *dh).
ModeField itt_weighted_field(const IttForm& f, const Basis& basis);
SinoCoeffs forward_itt(const IttForm& f, const Basis& basis);
// Grid forward; odd orders integrate *dh through the potential.
SinoGrid forward_itt_sino(const IttForm& f, const Basis& basis, const BoundaryGrid& grid, int chord_nodes);

}  // namespace dtx
