#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sjack/jack.hpp"

namespace sjack {

enum class SeriesVariant { Standard, Mixed, Hat, GammaDeformed };

struct SeriesSpec {
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;
  Scalar alpha{1};
  SeriesVariant variant = SeriesVariant::Standard;
  Scalar gamma{0};         // GammaDeformed only
  std::vector<Scalar> z;   // Mixed only: Jack-side arguments z_1..z_ℓ

  int p() const { return static_cast<int>(upper.size()); }
  int q() const { return static_cast<int>(lower.size()); }
  bool exact() const;
  std::string name() const;  // "2SF1", "2SF^1", ...

  static SeriesSpec standard(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha);
  static SeriesSpec hat(Scalar a, Scalar b, Scalar c, Scalar alpha);
  static SeriesSpec mixed(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha, std::vector<Scalar> z);
  static SeriesSpec gamma_deformed(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar alpha, Scalar gamma);

  // Throws std::invalid_argument / std::domain_error when the spec is malformed.
  void validate() const;
};

struct TruncationReport {
  int max_degree = 0;
  double last_shell_norm = 0;      // Σ |term| over the top shell
  std::optional<double> tail_bound;
  bool terminated = false;         // every κ beyond max_degree provably contributes 0
  int terms = 0;                   // nonzero terms summed
  std::vector<double> shell_norms; // Σ |term| per weight 0..max_degree
};

struct SeriesValue {
  Scalar value;
  TruncationReport report;
};

struct SeriesOptions {
  bool allow_outside_radius = false;
  bool compute_tail = true;
};

// Partition-support bounds implied by vanishing Pochhammer symbols and the fat hook.
struct SupportBounds {
  int max_part = -1;  // −1: unbounded
  int max_len = -1;
  std::optional<int> max_weight() const;
};
SupportBounds series_support(const SeriesSpec& spec, int n, int m);

// Coefficient multiplying SP_κ (before the Mixed P_κ(z)/P_κ(1^ℓ) factor).
Scalar series_coefficient(const SeriesSpec& spec, const Partition& k);

SeriesValue eval_series(const SeriesSpec& spec, const SuperPoint& pt, int max_degree = 16,
                        const SeriesOptions& opts = {});

// Sufficient radius 1/(r₁²(n + r₁m)) with r₁ = max(α, 1/α).
double convergence_radius(const Scalar& alpha, int n, int m);
// C_{n,m} with C² = sup_{k≥1} (n+m) k^{n+m−1} (n + m r₁)^{−k}.
double upbound_constant(const Scalar& alpha, int n, int m);
// C_{n,m} sqrt(h_κ/h′_κ) (r₁(n + r₁m)‖pt‖)^{|κ|}; 1 for the empty partition.
double upbound(const Partition& k, const Scalar& alpha, int n, int m, double norm);

Scalar closed_form_1SF0(const Scalar& a, const Scalar& alpha, const SuperPoint& pt);
Scalar closed_form_0SF0(const Scalar& alpha, const SuperPoint& pt);

// α → 1/α duality of Standard and Hat series.
std::pair<SeriesSpec, SuperPoint> dual_spec(const SeriesSpec& spec, const SuperPoint& pt);

// (LHS, RHS) of the three Pfaff–Euler forms for a 2SF1 spec.
std::pair<double, double> pfaff_euler(const SeriesSpec& spec, int which, const SuperPoint& pt, int max_degree = 30);
// (1SF1(a;c;t,s), ∏e^{t}∏e^{−αs}·1SF1(c−a;c;−t,−s))
std::pair<double, double> kummer(const SeriesSpec& spec, const SuperPoint& pt, int max_degree = 30);

Scalar eval_hat_2SF1(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, const SuperPoint& pt,
                     int max_degree = 16);

// (1/Γ(c₀)) ∫₀^∞ u^{c₀−1} e^{−u} 2SF^1(a, b; c₀; u·pt) du by generalized Gauss–Laguerre. When the hat
// series does not terminate it is continued along the positive axis through u = 4Rw/(1−w)².
double regularized_2SF0(const Scalar& a, const Scalar& b, const Scalar& alpha, const Scalar& c0, const SuperPoint& pt,
                        int quad_order = 64);

// e_κ(α) = Σ κ_i(κ_i − 1 + (2/α)(p₀ − i)), i 1-based.
Scalar jack_eigen_e(const Partition& k, const Scalar& alpha, const Scalar& p0);

using CoefficientFn = std::function<Scalar(const Partition&)>;

struct RecurrenceReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
  bool literal_form_ok = true;  // form without the j_κ/(α j_{κ^(i)}) normalization
  Scalar max_abs_residual{0};
};

// Exact check of the two-term recurrence relating A_κ and A_{κ^(i)} on H_{n,m}, |κ| ≤ max_weight.
RecurrenceReport coefficient_recurrence_check(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha,
                                              int n, int m, int max_weight);
RecurrenceReport recurrence_check_with(const CoefficientFn& A, const Scalar& a, const Scalar& b, const Scalar& c,
                                       const Scalar& alpha, int n, int m, int max_weight);
// A_κ = [a]_κ[b]_κ/[c]_κ
Scalar twoF1_coefficient(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& alpha, const Partition& k);

struct KadellRecord {
  double integrated = 0;  // (1/S) ∫ mixed series · D
  double lifted = 0;      // lifted p+1 SF q+1 series
  double discrepancy = 0;
  int degree = 0;
};

// Integrates the Mixed series over [0,1]^ℓ against D_{λ₁,λ₂,1/α} and compares with the lifted series.
KadellRecord kadell_superseries_lift(const SeriesSpec& mixed_spec, const Scalar& lambda1, const Scalar& lambda2, int ell,
                                     const SuperPoint& pt, int max_degree = 8);

// (1/S_ℓ) ∫ P_κ D_{λ₁,λ₂,1/α} by quadrature, and the closed form P_κ(1^ℓ)[λ₁+1+(ℓ−1)/α]_κ/[λ₁+λ₂+2+2(ℓ−1)/α]_κ.
std::pair<double, double> kadell_jack_integral(const Partition& k, const Scalar& alpha, const Scalar& lambda1,
                                               const Scalar& lambda2, int ell);

}  // namespace sjack
