#include "dtx/synth.hpp"

namespace dtx {

cplx random_complex(Rng& rng)
{
    std::normal_distribution<double> nd(0.0, 1.0);
    double re = nd(rng);
    double im = nd(rng);
    return {re, im};
}

PolyZZbar random_poly(Rng& rng, int max_degree)
{
    PolyZZbar p;
    for (int a = 0; a <= max_degree; ++a)
        for (int b = 0; a + b <= max_degree; ++b)
            p.add(a, b, random_complex(rng));
    return p;
}

ModeField random_field(Rng& rng, int order, int max_degree)
{
    ModeField f(order);
    for (int k = -order; k <= order; k += 2)
        f.set_mode(k, random_poly(rng, max_degree));
    return f;
}

ModeField random_gauge_potential(Rng& rng, int order, int max_degree)
{
    return multiply(random_field(rng, order, max_degree), PolyZZbar::d());
}

TtPart random_tt(Rng& rng, int order, int n_max)
{
    TtPart t;
    t.order = order;
    for (int n = 0; n <= n_max; ++n) {
        t.dz[n] = random_complex(rng);
        t.dzbar[n] = random_complex(rng);
    }
    return t;
}

ZernikeExpansion random_zernike(Rng& rng, int n_max, int k_min)
{
    ZernikeExpansion e;
    for (int n = 0; n <= n_max; ++n)
        for (int k = k_min; k <= n; ++k)
            e.values[{n, k}] = random_complex(rng);
    return e;
}

IttForm random_itt(Rng& rng, int m, int n_max, const Basis& basis, bool solve)
{
    IttForm f;
    f.m = m;
    f.gamma = basis.gamma();
    if (m % 2 == 0) {
        f.scalar = random_zernike(rng, n_max, 0);
    } else {
        f.w1 = random_zernike(rng, n_max, 1);
        if (solve && !f.w1.empty())
            f.potential = solve_potential(f.w1.to_poly(basis), basis.gamma());
    }
    int j0 = m % 2 == 0 ? 1 : 0;
    for (int j = j0; j <= m / 2; ++j)
        f.tt.push_back(random_tt(rng, m % 2 == 0 ? 2 * j : 2 * j + 1, n_max));
    return f;
}

}  // namespace dtx
