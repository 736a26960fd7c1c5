#include "dtx/expansion.hpp"

#include "dtx/errors.hpp"

namespace dtx {

cplx SinoCoeffs::get(const PsiIndex& idx) const
{
    auto it = values.find(idx);
    return it == values.end() ? cplx(0.0) : it->second;
}

void SinoCoeffs::add(const PsiIndex& idx, cplx c)
{
    values[idx] += c;
}

double SinoCoeffs::norm_squared() const
{
    double s = 0.0;
    for (const auto& [k, c] : values)
        s += std::norm(c);
    return s;
}

std::optional<Parity> SinoCoeffs::parity() const
{
    std::optional<Parity> p;
    for (const auto& [k, c] : values) {
        if (p && *p != k.parity)
            throw PreconditionError("SinoCoeffs: mixed parity data");
        p = k.parity;
    }
    return p;
}

SinoCoeffs SinoCoeffs::pruned(double tol) const
{
    SinoCoeffs r;
    r.gamma = gamma;
    for (const auto& [k, c] : values)
        if (std::abs(c) > tol)
            r.values.emplace(k, c);
    return r;
}

SinoCoeffs operator+(const SinoCoeffs& a, const SinoCoeffs& b)
{
    SinoCoeffs r = a;
    for (const auto& [k, c] : b.values)
        r.add(k, c);
    return r;
}

SinoCoeffs operator-(const SinoCoeffs& a, const SinoCoeffs& b)
{
    SinoCoeffs r = a;
    for (const auto& [k, c] : b.values)
        r.add(k, -c);
    return r;
}

int ZernikeExpansion::max_degree() const
{
    int d = -1;
    for (const auto& [nk, c] : values)
        d = std::max(d, nk.first);
    return d;
}

PolyZZbar ZernikeExpansion::to_poly(const Basis& basis) const
{
    PolyZZbar p;
    for (const auto& [nk, c] : values)
        p += basis.zernike_hat(nk.first, nk.second) * c;
    return p;
}

int TtPart::max_degree() const
{
    int d = -1;
    for (const auto& [n, c] : dz)
        d = std::max(d, n);
    for (const auto& [n, c] : dzbar)
        d = std::max(d, n);
    return d;
}

ModeField TtPart::to_field(const Basis& basis) const
{
    if (order < 1)
        throw PreconditionError("TtPart: order must be at least 1");
    ModeField f(order);
    for (const auto& [n, c] : dz)
        f.add_mode(order, basis.zernike_hat(n, 0) * c);
    for (const auto& [n, c] : dzbar)
        f.add_mode(-order, basis.zernike_hat(n, n) * c);
    return f;
}

}  // namespace dtx
