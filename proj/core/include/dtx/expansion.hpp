#pragma once

#include <map>
#include <optional>
#include <utility>

#include "dtx/basis.hpp"
#include "dtx/modefield.hpp"

namespace dtx {

// Sinogram coefficients over the orthonormal fan-beam family.
struct SinoCoeffs {
    double gamma = 0.0;
    std::map<PsiIndex, cplx> values;

    cplx get(const PsiIndex& idx) const;
    void add(const PsiIndex& idx, cplx c);
    bool empty() const { return values.empty(); }
    double norm_squared() const;
    // Parity shared by all entries; nullopt when empty; throws when mixed.
    std::optional<Parity> parity() const;
    SinoCoeffs pruned(double tol) const;
};

SinoCoeffs operator+(const SinoCoeffs& a, const SinoCoeffs& b);
SinoCoeffs operator-(const SinoCoeffs& a, const SinoCoeffs& b);

// Coefficients on the unit-norm Zernike family Z-hat_{n,k}.
struct ZernikeExpansion {
    std::map<std::pair<int, int>, cplx> values;

    bool empty() const { return values.empty(); }
    int max_degree() const;
    PolyZZbar to_poly(const Basis& basis) const;
};

// tt tensor of the given order: sum_n a_n Zhat_{n,0} dz^m + b_n Zhat_{n,n} dzbar^m.
struct TtPart {
    int order = 0;
    std::map<int, cplx> dz;
    std::map<int, cplx> dzbar;

    bool empty() const { return dz.empty() && dzbar.empty(); }
    int max_degree() const;
    ModeField to_field(const Basis& basis) const;
};

}  // namespace dtx
