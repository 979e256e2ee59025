#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "sjack/jack.hpp"
#include "sjack/series.hpp"

namespace sjack {

enum class SystemFamily { Jacobi2SF1, General, Gaussian };

// Coefficients of the deformed system. Jacobi2SF1 is the General instance
// (α₁, α₂, β₀, β₁, γ₀) = (1, −1, c, −(a+b+1), −ab); Gaussian uses a and b only.
struct DeformedSystemSpec {
  SystemFamily family = SystemFamily::Jacobi2SF1;
  Scalar alpha{1};
  Scalar a{0}, b{0}, c{0};
  int n = 0, m = 0;
  Scalar alpha1{1}, alpha2{-1}, beta0{0}, beta1{0}, gamma0{0};

  static DeformedSystemSpec jacobi(Scalar a, Scalar b, Scalar c, Scalar alpha, int n, int m);
  static DeformedSystemSpec general(Scalar alpha1, Scalar alpha2, Scalar beta0, Scalar beta1, Scalar gamma0,
                                    Scalar alpha, int n, int m);
  static DeformedSystemSpec gaussian(Scalar a, Scalar b, Scalar alpha, int n, int m);

  Scalar p0() const { return Scalar(n) - alpha * Scalar(m); }
  // General-family coefficients (filled in for Jacobi2SF1 as well).
  std::vector<Scalar> general_coefficients() const;
  // Checks β₀ − ((i−1)/α − κ_i)α₁ ≠ 0 on H_{n,m} up to the given weight; throws std::domain_error.
  void validate(int max_weight = 12) const;
};

// F = Σ coeffs[κ] · SP_κ; every κ lies in H_{n,m}.
struct BasisExpansion {
  std::map<Partition, Scalar> coeffs;
  int n = 0, m = 0;
  Scalar alpha{1};

  Scalar coeff(const Partition& k) const;
  void add(const Partition& k, const Scalar& c);
  int degree() const;  // largest |κ| present, −1 if empty
  double evaluate(const SuperPoint& pt) const;
};

// Truncated 2SF1 as an expansion: coefficient A_κ/h_κ for |κ| ≤ degree.
BasisExpansion truncated_2SF1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, int n, int m,
                              int degree);

BasisExpansion op_E(int l, const BasisExpansion& f);
BasisExpansion op_D(int k, const BasisExpansion& f);

// The same operators applied to SP_κ at a point by analytic differentiation.
double op_E_pointwise(int l, const Partition& k, const Scalar& alpha, const SuperPoint& pt);
double op_D_pointwise(int kind, const Partition& k, const Scalar& alpha, const SuperPoint& pt);

// ℒ = D¹ − D² + (c − (p₀−1)/α)E⁰ − (a+b+1 − (p₀−1)/α)E¹ − p₀ab.
BasisExpansion apply_summed_operator(const DeformedSystemSpec& sys, const BasisExpansion& f);

struct SummedResidual {
  Scalar below_top{0};  // max |coefficient| of ℒF at weights < degree
  Scalar top{0};        // same on the truncation shell
  int degree = 0;
};
SummedResidual summed_operator_residual(const DeformedSystemSpec& sys, const BasisExpansion& f, int degree);

using Evaluable = std::function<double(const std::vector<double>& t, const std::vector<double>& s)>;

// n + m residuals of the system at (t; s) by central differences with one Richardson step.
std::vector<double> pointwise_system_residual(const DeformedSystemSpec& sys, const Evaluable& F,
                                              const std::vector<double>& t, const std::vector<double>& s,
                                              double h = 1e-3);
// (∂/∂t_i + (1/α)∂/∂s_j)F at the given point (callers put t_i = s_j).
double cancellation_residual(const Evaluable& F, const Scalar& alpha, const std::vector<double>& t,
                             const std::vector<double>& s, int i, int j, double h = 1e-3);

// (a, b, c) → (a, a − c + 1 + (p₀−1)/α, a − b + 1 + (p₀−1)/α) and G ↦ ∏ w_i^{−a/ρ_i} G(1/w).
std::pair<DeformedSystemSpec, Evaluable> inversion_transform(const DeformedSystemSpec& sys, const Evaluable& G);

struct KanekoReport {
  bool ok = true;
  std::vector<std::pair<int, int>> failed;  // (p, q) restrictions that failed
};
// ℒ_{p,0} for p ≤ n and ℒ_{n,q} for q ≤ m on the restricted coefficient families.
KanekoReport kaneko_criterion_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, int n,
                                    int m, int max_weight);
KanekoReport kaneko_criterion_check_with(const CoefficientFn& A, const Scalar& a, const Scalar& b, const Scalar& c,
                                         const Scalar& alpha, int n, int m, int max_weight);

struct SuperJacobi {
  BasisExpansion poly;
  Partition kappa_max;
  Scalar gamma, eta;
  Scalar eps_top;     // ε^J at κ^max
  Scalar ab_p0;       // a·b·p₀
  bool eigen_ok = false;  // operator image equals ab·p₀ times the polynomial, exactly
  bool top_ok = false;    // κ^max carries a nonzero coefficient and dominates the support
};

// Terminating 2SF1 with a = −N, b = M/α, normalized to 1 at the origin.
SuperJacobi super_jacobi(int N, int M, const Scalar& alpha, const Scalar& c, int n, int m);
// ε^J_κ = −Σ κ_i(κ_i − 1 + (2/α)(p₀ − i)) − (γ + η + 2)|κ|
Scalar super_jacobi_eigenvalue(const Partition& k, const Scalar& alpha, const Scalar& p0, const Scalar& gamma,
                               const Scalar& eta);

}  // namespace sjack
