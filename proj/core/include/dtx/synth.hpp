#pragma once

#include <cstdint>
#include <random>

#include "dtx/expansion.hpp"
#include "dtx/invert.hpp"
#include "dtx/modefield.hpp"

namespace dtx {

using Rng = std::mt19937_64;

cplx random_complex(Rng& rng);
PolyZZbar random_poly(Rng& rng, int max_degree);
// Field of the given order with random polynomials in every admissible mode.
ModeField random_field(Rng& rng, int order, int max_degree);
// (1 - |z|^2) times a random field: gauge potentials vanishing on the circle.
ModeField random_gauge_potential(Rng& rng, int order, int max_degree);
TtPart random_tt(Rng& rng, int order, int n_max);
ZernikeExpansion random_zernike(Rng& rng, int n_max, int k_min);
// Random itt form: scalar (even) or w1 with its potential (odd) plus tt parts for every admissible j.
IttForm random_itt(Rng& rng, int m, int n_max, const Basis& basis, bool solve = true);

}  // namespace dtx
