#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>

namespace dtx {

using cplx = std::complex<double>;

enum class Wirtinger { d, dbar };

// Finite complex polynomial sum c_{a,b} z^a zbar^b.
class PolyZZbar {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, cplx>;

    PolyZZbar() = default;
    explicit PolyZZbar(Terms terms);

    static PolyZZbar constant(cplx c);
    static PolyZZbar monomial(int a, int b, cplx c = 1.0);
    // 1 - z zbar
    static PolyZZbar d();

    const Terms& terms() const { return terms_; }
    cplx coeff(int a, int b) const;
    void add(int a, int b, cplx c);
    void set(int a, int b, cplx c);

    bool empty() const { return terms_.empty(); }
    int degree() const;
    int max_z_power() const;
    int max_zbar_power() const;
    bool is_zero(double tol = 0.0) const;
    bool is_holomorphic(double tol = 0.0) const;
    bool is_antiholomorphic(double tol = 0.0) const;
    double max_abs_coeff() const;

    PolyZZbar conj() const;
    PolyZZbar wirtinger(Wirtinger which) const;
    // Terms with a - b == q.
    PolyZZbar angular_mode(int q) const;
    PolyZZbar pruned(double tol) const;

    cplx operator()(cplx z) const;

    PolyZZbar& operator+=(const PolyZZbar& o);
    PolyZZbar& operator-=(const PolyZZbar& o);
    PolyZZbar& operator*=(cplx s);

    friend PolyZZbar operator+(PolyZZbar a, const PolyZZbar& b) { return a += b; }
    friend PolyZZbar operator-(PolyZZbar a, const PolyZZbar& b) { return a -= b; }
    friend PolyZZbar operator*(PolyZZbar a, cplx s) { return a *= s; }
    friend PolyZZbar operator*(cplx s, PolyZZbar a) { return a *= s; }
    friend PolyZZbar operator*(const PolyZZbar& a, const PolyZZbar& b);
    friend PolyZZbar operator-(PolyZZbar a) { return a *= -1.0; }

private:
    Terms terms_;
};

PolyZZbar wirtinger(const PolyZZbar& p, Wirtinger which);

// Exact quotient p / (1 - z zbar) if it exists up to tol.
std::optional<PolyZZbar> divide_by_d(const PolyZZbar& p, double tol = 1e-12);

}  // namespace dtx
