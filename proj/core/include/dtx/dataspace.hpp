#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtx/expansion.hpp"

namespace dtx {

enum class BlockKind { pi0, pi2j, piperp, pi2j1 };

struct Block {
    BlockKind kind = BlockKind::pi0;
    int j = 0;

    static Block pi0() { return {BlockKind::pi0, 0}; }
    static Block pi2j(int j);
    static Block piperp() { return {BlockKind::piperp, 0}; }
    static Block pi2j1(int j);

    Parity parity() const;
    bool contains(const PsiIndex& idx) const;
    // Tensor order whose tt part feeds this block (0 for pi0, 1 for piperp).
    int tt_order() const;
    std::string name() const;

    auto operator<=>(const Block&) const = default;
};

// The unique block of its parity family holding idx.
Block block_of(const PsiIndex& idx);

SinoCoeffs project(const Block& block, const SinoCoeffs& u);

// sqrt(sum (n+1)^{2 alpha} |a_n|^2) over one diagonal.
double scale_norm(const std::map<int, cplx>& diagonal, double alpha);
double scale_norm(const std::vector<cplx>& diagonal, double alpha);

// Coefficients along the two diagonals of a tt block, keyed by n.
struct BlockDiagonals {
    std::map<int, cplx> low;   // k = -j
    std::map<int, cplx> high;  // k = n + j (or n + j + 1)
};
BlockDiagonals block_diagonals(const Block& block, const SinoCoeffs& u);

struct RangeTolerances {
    double a_rel = 1e-8;    // energy above order m relative to ||u||
    double b_max = 1e12;    // finite h^{(1+gamma)/2} norms
    double c_max = 1e12;    // finite weighted sum over pi0 / piperp
};

struct RangeReport {
    int m = 0;
    double gamma = 0.0;
    struct {
        bool pass = true;
        double residual = 0.0;
        double threshold = 0.0;
        std::vector<PsiIndex> offending;
    } a;
    struct BEntry {
        int j = 0;
        double norm = 0.0;
        bool pass = true;
    };
    std::vector<BEntry> b;
    struct {
        double sum = 0.0;
        bool pass = true;
    } c;
    bool parity_ok = true;
    bool in_range = true;
};

RangeReport range_check(const SinoCoeffs& u, int m, const RangeTolerances& tol = {});

}  // namespace dtx
