#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace dtx {

// Gamma exponent of the weight d^gamma with cached constants.
struct WeightParam {
    double gamma = 0.0;
    double beta_gg = 1.0;  // B(gamma+1, gamma+1)
    double c0 = 1.0;       // max(2^-gamma, 1)
    std::optional<double> norm_audit_scale;

    // decomposition = true demands -1 < gamma < 1, otherwise only gamma > -1.
    static WeightParam make(double gamma, bool decomposition = true);
};

void require_gamma(double gamma, bool decomposition = true);

double gamma_real(double x);
double log_gamma_abs(double x);
// x! := Gamma(x+1)
double factorial_real(double x);
double log_factorial(double x);
double beta(double x, double y);
double log_beta(double x, double y);
double binomial(int n, int k);
double log_binomial(int n, int k);

double gegenbauer(int n, double lambda, double t);
// All C_0..C_n at t.
std::vector<double> gegenbauer_all(int n, double lambda, double t);
// Monomial coefficients c[0..n] of C_n^lambda.
std::vector<double> gegenbauer_coefficients(int n, double lambda);

// Constant A_n with lhat(n, gamma, x) = A_n * C_n^{gamma+1}(x).
double lhat_scale(int n, double gamma);
double lhat(int n, double gamma, double x);
std::vector<double> lhat_all(int n, double gamma, double x);
double lhat_leading(int n, double gamma);
std::vector<double> lhat_coefficients(int n, double gamma);

// lambda (1 - w^2) / (1 - 2 w t + w^2)^(lambda+1), principal branch.
std::complex<double> gegenbauer_weighted_sum(double lambda, std::complex<double> w, double t);

}  // namespace dtx
