#include "dtx/dataspace.hpp"

#include <cmath>

#include "dtx/errors.hpp"

namespace dtx {

Block Block::pi2j(int j)
{
    if (j < 1)
        throw DomainError("Pi_2j needs j >= 1");
    return {BlockKind::pi2j, j};
}

Block Block::pi2j1(int j)
{
    if (j < 0)
        throw DomainError("Pi_2j+1 needs j >= 0");
    return {BlockKind::pi2j1, j};
}

Parity Block::parity() const
{
    return kind == BlockKind::pi0 || kind == BlockKind::pi2j ? Parity::plus : Parity::minus;
}

bool Block::contains(const PsiIndex& idx) const
{
    if (idx.parity != parity() || idx.n < 0)
        return false;
    int n = idx.n, k = idx.k;
    switch (kind) {
    case BlockKind::pi0:
        return k >= 0 && k <= n;
    case BlockKind::pi2j:
        return k == -j || k == n + j;
    case BlockKind::piperp:
        return n >= 1 && k >= 1 && k <= n;
    case BlockKind::pi2j1:
        return k == -j || k == n + j + 1;
    }
    return false;
}

int Block::tt_order() const
{
    switch (kind) {
    case BlockKind::pi0:
        return 0;
    case BlockKind::pi2j:
        return 2 * j;
    case BlockKind::piperp:
        return 1;
    case BlockKind::pi2j1:
        return 2 * j + 1;
    }
    return 0;
}

std::string Block::name() const
{
    switch (kind) {
    case BlockKind::pi0:
        return "Pi0";
    case BlockKind::pi2j:
        return "Pi2j(" + std::to_string(j) + ")";
    case BlockKind::piperp:
        return "PiPerp";
    case BlockKind::pi2j1:
        return "Pi2j1(" + std::to_string(j) + ")";
    }
    return "";
}

Block block_of(const PsiIndex& idx)
{
    if (idx.n < 0)
        throw DomainError("block_of: negative degree");
    int n = idx.n, k = idx.k;
    if (idx.parity == Parity::plus) {
        if (k >= 0 && k <= n)
            return Block::pi0();
        return Block::pi2j(k < 0 ? -k : k - n);
    }
    if (n >= 1 && k >= 1 && k <= n)
        return Block::piperp();
    return Block::pi2j1(k <= 0 ? -k : k - n - 1);
}

SinoCoeffs project(const Block& block, const SinoCoeffs& u)
{
    SinoCoeffs r;
    r.gamma = u.gamma;
    for (const auto& [idx, c] : u.values) {
        if (idx.parity != block.parity())
            throw PreconditionError("project: data parity does not match the block family " + block.name());
        if (block.contains(idx))
            r.values.emplace(idx, c);
    }
    return r;
}

double scale_norm(const std::map<int, cplx>& diagonal, double alpha)
{
    double s = 0.0;
    for (const auto& [n, a] : diagonal) {
        if (n < 0)
            throw DomainError("scale_norm: negative index");
        s += std::pow(n + 1.0, 2.0 * alpha) * std::norm(a);
    }
    return std::sqrt(s);
}

double scale_norm(const std::vector<cplx>& diagonal, double alpha)
{
    double s = 0.0;
    for (std::size_t n = 0; n < diagonal.size(); ++n)
        s += std::pow(n + 1.0, 2.0 * alpha) * std::norm(diagonal[n]);
    return std::sqrt(s);
}

BlockDiagonals block_diagonals(const Block& block, const SinoCoeffs& u)
{
    if (block.kind == BlockKind::pi0 || block.kind == BlockKind::piperp)
        throw PreconditionError("block_diagonals: only tt blocks have diagonals");
    BlockDiagonals d;
    for (const auto& [idx, c] : project(block, u).values) {
        if (idx.k == -block.j)
            d.low[idx.n] = c;
        else
            d.high[idx.n] = c;
    }
    return d;
}

RangeReport range_check(const SinoCoeffs& u, int m, const RangeTolerances& tol)
{
    if (m < 0)
        throw DomainError("range_check: negative order");
    RangeReport r;
    r.m = m;
    r.gamma = u.gamma;
    Parity want = m % 2 == 0 ? Parity::plus : Parity::minus;
    int p = m / 2;
    double total = std::sqrt(u.norm_squared());
    r.a.threshold = tol.a_rel * total;

    double bad = 0.0;
    SinoCoeffs good;
    good.gamma = u.gamma;
    for (const auto& [idx, c] : u.values) {
        bool ok = idx.parity == want;
        if (!ok)
            r.parity_ok = false;
        else {
            Block b = block_of(idx);
            ok = want == Parity::plus ? (b.kind == BlockKind::pi0 || b.j <= p)
                                      : (b.kind == BlockKind::piperp || b.j <= p);
        }
        if (ok)
            good.values.emplace(idx, c);
        else {
            bad += std::norm(c);
            if (c != cplx(0.0))
                r.a.offending.push_back(idx);
        }
    }
    r.a.residual = std::sqrt(bad);
    r.a.pass = r.a.residual <= r.a.threshold && r.parity_ok;

    double alpha = 0.5 * (1.0 + u.gamma);
    int j0 = want == Parity::plus ? 1 : 0;
    for (int j = j0; j <= p; ++j) {
        Block b = want == Parity::plus ? Block::pi2j(j) : Block::pi2j1(j);
        auto d = block_diagonals(b, good);
        double nl = scale_norm(d.low, alpha), nh = scale_norm(d.high, alpha);
        RangeReport::BEntry e;
        e.j = j;
        e.norm = std::sqrt(nl * nl + nh * nh);
        e.pass = std::isfinite(e.norm) && e.norm <= tol.b_max;
        r.b.push_back(e);
    }

    Block core = want == Parity::plus ? Block::pi0() : Block::piperp();
    double csum = 0.0;
    for (const auto& [idx, c] : project(core, good).values)
        csum += std::norm(c) / std::exp(2.0 * log_sigma(idx.n, idx.k, u.gamma));
    r.c.sum = csum;
    r.c.pass = std::isfinite(csum) && csum <= tol.c_max;

    r.in_range = r.a.pass && r.c.pass;
    for (const auto& e : r.b)
        r.in_range = r.in_range && e.pass;
    return r;
}

}  // namespace dtx
