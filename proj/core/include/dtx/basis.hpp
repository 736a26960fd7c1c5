#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dtx/geometry.hpp"
#include "dtx/poly.hpp"
#include "dtx/quadrature.hpp"

namespace dtx {

enum class Parity { plus, minus };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

struct PsiIndex {
    int n = 0;
    int k = 0;
    Parity parity = Parity::plus;

    auto operator<=>(const PsiIndex&) const = default;
};

double sigma(int n, int k, double gamma);
double log_sigma(int n, int k, double gamma);

// Fan-beam polynomial with the printed normalization (no audit scale).
cplx psi_raw(const PsiIndex& idx, const FanBeamPoint& p, double gamma);

// Raw generalized Zernike polynomial as an exact polynomial in z, zbar.
PolyZZbar zernike_raw(int n, int k, double gamma);

struct NormalizationAudit {
    double scale = 0.0;   // mean of ||psi_{n,k}||^2 over the sample
    double spread = 0.0;  // (max - min) / mean
    int samples = 0;
};

// Measures raw fan-beam norms by quadrature; throws NumericalError if not uniform.
NormalizationAudit normalization_audit(double gamma, int n_max);

struct ZernikePoly {
    int n = 0;
    int k = 0;
    PolyZZbar coeffs;
    double norm = 0.0;
};

ZernikePoly zernike_build(int n, int k, double gamma);

// Audited orthonormal families psi-hat and Z-hat up to degree n_max.
class Basis {
public:
    Basis(double gamma, int n_max);

    double gamma() const { return gamma_; }
    int n_max() const { return n_max_; }
    const NormalizationAudit& audit() const { return audit_; }
    double audit_scale() const { return audit_.scale; }

    double sigma(int n, int k) const;
    const ZernikePoly& zernike(int n, int k) const;
    // Z / (sqrt(c) sigma), unit norm in L^2_gamma(disk).
    const PolyZZbar& zernike_hat(int n, int k) const;

    cplx psi(const PsiIndex& idx, const FanBeamPoint& p) const;
    std::vector<cplx> psi_samples(const PsiIndex& idx, const BoundaryGrid& grid) const;

private:
    double gamma_;
    int n_max_;
    NormalizationAudit audit_;
    std::vector<std::vector<ZernikePoly>> zernike_;
    std::vector<std::vector<PolyZZbar>> zernike_hat_;
    std::vector<std::vector<double>> sigma_;
};

// Indices (n, k) with 0 <= n <= n_max, k_lo(n) <= k <= k_hi(n) given as offsets from {0, n}.
std::vector<PsiIndex> psi_lattice(int n_max, int below, int above, Parity parity);

}  // namespace dtx
