#pragma once

#include <functional>
#include <vector>

namespace sjack {

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss–Jacobi on [0,1] for the weight x^p (1−x)^q; weights sum to B(p+1, q+1).
QuadRule gauss_jacobi01(int order, double p, double q);
// Gauss–Legendre on [lo, hi].
QuadRule gauss_legendre(int order, double lo = -1.0, double hi = 1.0);
// Generalized Gauss–Laguerre for u^c e^{−u} on (0,∞), weights normalized to sum to 1.
QuadRule gauss_laguerre_normalized(int order, double c);

using SymmetricFn = std::function<double(const std::vector<double>&)>;

// ∫_{[0,1]^N} f(x) ∏ x_i^{l1}(1−x_i)^{l2} ∏_{j<k}|x_j−x_k|^{2·lam} dx for symmetric f, N ≤ 3.
// N = 1 uses Gauss–Jacobi; N ≥ 2 integrates the ordered simplex by nested tanh-sinh.
double selberg_type_integral(int N, double l1, double l2, double lam, const SymmetricFn& f, double tol = 1e-11);
// ∫_{[0,∞)^N} f(x) ∏ x_i^{a} e^{−w x_i} ∏_{j<k}|x_j−x_k|^{b} dx for symmetric f, N ≤ 2.
double laguerre_type_integral(int N, double a, double w, double b, const SymmetricFn& f, double tol = 1e-11);

double log_beta(double a, double b);
// log Γ with a sign check; throws on poles.
double lgamma_checked(double x);
// Γ(x+k)/Γ(x) for integer k ≥ 0 (rising factorial), finite for any real x.
double rising_double(double x, int k);

}  // namespace sjack
