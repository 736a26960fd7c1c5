#include "dtx/specfun.hpp"

#include <cmath>
#include <numbers>

#include "dtx/errors.hpp"

namespace dtx {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && std::nearbyint(x) == x;
}

}  // namespace

void require_gamma(double gamma, bool decomposition)
{
    if (!std::isfinite(gamma) || gamma <= -1.0)
        throw DomainError("gamma must satisfy gamma > -1");
    if (decomposition && gamma >= 1.0)
        throw DomainError("gamma must lie in (-1, 1) for decomposition features");
}

WeightParam WeightParam::make(double gamma, bool decomposition)
{
    require_gamma(gamma, decomposition);
    WeightParam w;
    w.gamma = gamma;
    w.beta_gg = beta(gamma + 1.0, gamma + 1.0);
    w.c0 = std::max(std::pow(2.0, -gamma), 1.0);
    return w;
}

double gamma_real(double x)
{
    if (!std::isfinite(x) || is_nonpositive_integer(x))
        throw DomainError("gamma_real: pole at non-positive integer");
    return std::tgamma(x);
}

double log_gamma_abs(double x)
{
    if (!std::isfinite(x) || is_nonpositive_integer(x))
        throw DomainError("log_gamma_abs: pole at non-positive integer");
    return std::lgamma(x);
}

double factorial_real(double x)
{
    return gamma_real(x + 1.0);
}

double log_factorial(double x)
{
    return log_gamma_abs(x + 1.0);
}

double beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("beta: arguments must be positive");
    return std::exp(log_beta(x, y));
}

double log_beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("log_beta: arguments must be positive");
    return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double log_binomial(int n, int k)
{
    if (k < 0 || k > n)
        throw DomainError("binomial: k outside [0, n]");
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        throw DomainError("binomial: k outside [0, n]");
    if (n <= 60) {
        double r = 1.0;
        k = std::min(k, n - k);
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return std::nearbyint(r);
    }
    return std::exp(log_binomial(n, k));
}

std::vector<double> gegenbauer_all(int n, double lambda, double t)
{
    if (n < 0)
        throw DomainError("gegenbauer: negative degree");
    if (!(lambda > 0.0))
        throw DomainError("gegenbauer: lambda must be positive");
    std::vector<double> c(n + 1);
    c[0] = 1.0;
    if (n >= 1)
        c[1] = 2.0 * lambda * t;
    for (int k = 1; k < n; ++k)
        c[k + 1] = (2.0 * t * (k + lambda) * c[k] - (k + 2.0 * lambda - 1.0) * c[k - 1]) / (k + 1.0);
    return c;
}

double gegenbauer(int n, double lambda, double t)
{
    return gegenbauer_all(n, lambda, t).back();
}

std::vector<double> gegenbauer_coefficients(int n, double lambda)
{
    if (n < 0)
        throw DomainError("gegenbauer: negative degree");
    if (!(lambda > 0.0))
        throw DomainError("gegenbauer: lambda must be positive");
    std::vector<double> c(n + 1, 0.0);
    for (int l = 0; 2 * l <= n; ++l) {
        double lg = std::lgamma(n - l + lambda) - std::lgamma(lambda) - std::lgamma(l + 1.0) -
                    std::lgamma(n - 2.0 * l + 1.0) + (n - 2.0 * l) * std::numbers::ln2;
        c[n - 2 * l] = (l % 2 ? -1.0 : 1.0) * std::exp(lg);
    }
    return c;
}

namespace {

double log_norm_constant(int n, double gamma)
{
    return (2.0 * gamma + 1.0) * std::numbers::ln2 + log_factorial(n) + 2.0 * log_factorial(2.0 * gamma + 1.0) -
           std::log(n + gamma + 1.0) - log_factorial(n + 2.0 * gamma + 1.0);
}

}  // namespace

double lhat_scale(int n, double gamma)
{
    if (n < 0)
        throw DomainError("lhat: negative degree");
    require_gamma(gamma, false);
    double lg = log_factorial(n) + log_factorial(2.0 * gamma + 1.0) - log_factorial(n + 2.0 * gamma + 1.0) -
                0.5 * log_norm_constant(n, gamma) + 0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(lg);
}

double lhat(int n, double gamma, double x)
{
    return lhat_scale(n, gamma) * gegenbauer(n, gamma + 1.0, x);
}

std::vector<double> lhat_all(int n, double gamma, double x)
{
    auto c = gegenbauer_all(n, gamma + 1.0, x);
    for (int k = 0; k <= n; ++k)
        c[k] *= lhat_scale(k, gamma);
    return c;
}

double lhat_leading(int n, double gamma)
{
    if (n < 0)
        throw DomainError("lhat_leading: negative degree");
    require_gamma(gamma, false);
    double lg = n * std::numbers::ln2 + log_factorial(2.0 * gamma + 1.0) + log_factorial(n + gamma) -
                log_factorial(n + 2.0 * gamma + 1.0) - log_factorial(gamma) - 0.5 * log_norm_constant(n, gamma) +
                0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(lg);
}

std::vector<double> lhat_coefficients(int n, double gamma)
{
    auto c = gegenbauer_coefficients(n, gamma + 1.0);
    double a = lhat_scale(n, gamma);
    for (double& v : c)
        v *= a;
    return c;
}

std::complex<double> gegenbauer_weighted_sum(double lambda, std::complex<double> w, double t)
{
    if (!(std::abs(w) < 1.0))
        throw DomainError("gegenbauer_weighted_sum: |w| must be < 1");
    if (!(lambda > 0.0))
        throw DomainError("gegenbauer_weighted_sum: lambda must be positive");
    const std::complex<double> one(1.0, 0.0);
    std::complex<double> logbase;
    if (std::abs(t) <= 1.0) {
        // 1 - 2wt + w^2 = (1 - w e^{i phi})(1 - w e^{-i phi}); each factor has positive real part.
        double phi = std::acos(t);
        logbase = std::log(one - w * std::polar(1.0, phi)) + std::log(one - w * std::polar(1.0, -phi));
    } else {
        std::complex<double> base = one - 2.0 * w * t + w * w;
        if (base.real() <= 0.0 && std::abs(base.imag()) <= 1e-14 * std::abs(base))
            throw DomainError("gegenbauer_weighted_sum: base on the negative real axis");
        logbase = std::log(base);
    }
    return lambda * (one - w * w) * std::exp(-(lambda + 1.0) * logbase);
}

}  // namespace dtx
