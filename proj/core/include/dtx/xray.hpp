#pragma once

#include <optional>
#include <vector>

#include "dtx/basis.hpp"
#include "dtx/expansion.hpp"
#include "dtx/modefield.hpp"
#include "dtx/quadrature.hpp"

namespace dtx {

struct GridSpec {
    int n_beta = 32;
    int n_alpha = 11;
    int chord_nodes = 10;
    AlphaRule alpha_rule = AlphaRule::gegenbauer;
};

// Sizes that make forward and projection onto itt_projection_lattice(n_max, m) exact
// for fields of degree <= n_max and order <= m.
GridSpec default_grid_spec(int n_max, int m);
BoundaryGrid make_grid(const GridSpec& spec, double gamma);

struct SinoGrid {
    BoundaryGrid grid;
    std::vector<cplx> values;
    std::optional<Parity> parity;

    cplx at(int i, int j) const { return values[grid.index(i, j)]; }
};

cplx forward_chord(const ModeField& f, const FanBeamPoint& p, double gamma, const QuadRule& rule);
SinoGrid forward_sino(const ModeField& f, const BoundaryGrid& grid, int chord_nodes);
SinoGrid forward_sino(const ModeField& f, double gamma, const GridSpec& spec);

// Unweighted line integral of the lift of f, Gauss-Legendre in t.
cplx forward_chord_unweighted(const ModeField& f, const FanBeamPoint& p, const QuadRule& legendre);
// Transform of d^{-gamma} d^s q: the weight cancels, leaving the unweighted integral of X q.
SinoGrid forward_gauge_sino(const ModeField& q, const BoundaryGrid& grid, int chord_nodes);

// Orthogonal expansion of a polynomial of degree <= n_max in Z-hat; throws if it is not in the span.
ZernikeExpansion zernike_expand(const PolyZZbar& p, const Basis& basis, double tol = 1e-10);

// Image of sum c_{n,k} Zhat_{n,k} e^{i mode theta}: sigma_{n,k} c_{n,k} times the shifted fan-beam function.
SinoCoeffs forward_spectral_mode(const ZernikeExpansion& e, int mode, const Basis& basis);
SinoCoeffs forward_spectral(const TtPart& t, const Basis& basis);
// tt field given through its modes; throws PreconditionError for non-tt input.
SinoCoeffs forward_spectral(const ModeField& t, const Basis& basis);
// Any polynomial field of degree <= n_max.
SinoCoeffs forward_spectral_field(const ModeField& f, const Basis& basis);

// Fan-beam index reached by Zhat_{n,k} e^{i mode theta}.
PsiIndex shifted_index(int n, int k, int mode);

SinoCoeffs sino_project(const SinoGrid& s, const std::vector<PsiIndex>& indices, const Basis& basis);
SinoGrid synthesize(const SinoCoeffs& c, const Basis& basis, const BoundaryGrid& grid);
double grid_norm_squared(const SinoGrid& s);

}  // namespace dtx
