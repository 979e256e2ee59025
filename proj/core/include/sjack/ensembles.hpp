#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sjack/scalar.hpp"

namespace sjack {

enum class Family { Jacobi, Laguerre, Hermite, Circular, CircularJacobi };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct EnsembleSpec {
  Family family = Family::Jacobi;
  int N = 1;
  double beta = 2;
  double lambda1 = 0;  // Jacobi, Laguerre
  double lambda2 = 0;  // Jacobi
  double b_cj = 0;     // CircularJacobi weight |1 + e^{iθ}|^{2b}

  void validate() const;
};

enum class RatioForm { OneMinusTX, XMinusT };

// ∏_k ∏_i (1 − t_i x_k) ∏_j (1 − s_j x_k)^{−β/2}, or the (x_k − t_i) form.
// Circular families use ∏ (1 + t e^{iθ}) ∏ (1 + s e^{iθ})^{−β/2} and report the real part.
struct RatioQuery {
  std::vector<double> t;
  std::vector<double> s;
  RatioForm form = RatioForm::OneMinusTX;
  bool empty() const { return t.empty() && s.empty(); }
};

struct MCEstimate {
  double mean = 1;
  double std_error = 0;
  long n_samples = 0;
  double ess = 0;
  std::uint64_t seed = 0;
};

// Selberg S_N(λ₁, λ₂, λ) = ∏_j Γ(1+λ₁+jλ)Γ(1+λ₂+jλ)Γ(1+(j+1)λ) / (Γ(2+λ₁+λ₂+(N+j−1)λ)Γ(1+λ)).
double log_selberg_constant(int N, double l1, double l2, double lam);
double selberg_constant(int N, double l1, double l2, double lam);
double morris_constant(int N, double a, double b, double lam);
// Both sides of S_N(λ₁,λ₂,λ) = (−1)^{N+N(N−1)λ/2}(2 sin πb)^{−N} M_N(a,b,λ) with λ₁ = −b−(N−1)λ−1, λ₂ = a+b.
// Returns (S_N, bridged Morris value); only meaningful where the sign factor is real.
std::pair<double, double> morris_selberg_bridge(int N, double a, double b, double lam);

// Laguerre and Gaussian normalizations.
double log_laguerre_W(double l1, double beta, int N);
double laguerre_W(double l1, double beta, int N);
double gaussian_G(double beta, int N);

// Normalized Jacobi-ensemble expectation of the ratio by quadrature (N ≤ 3).
double selberg_quadrature(const EnsembleSpec& spec, const RatioQuery& query);

// One draw of eigenvalues (angles in (−π, π] for the circular families).
std::vector<double> sample_ensemble(const EnsembleSpec& spec, std::mt19937_64& rng);
std::vector<double> sample_ensemble(const EnsembleSpec& spec, std::uint64_t seed);

// Value of the ratio observable on one draw.
double ratio_observable(const EnsembleSpec& spec, const RatioQuery& query, const std::vector<double>& x);

// Samples are drawn in fixed-size chunks with seeds derived from (seed, chunk); the result does not
// depend on the thread count.
MCEstimate mc_ratio_expectation(const EnsembleSpec& spec, const RatioQuery& query, long n_samples,
                                std::uint64_t seed, int threads = 1);

// Series value predicted for the ratio expectation: Jacobi (1 − tx form), Laguerre (regularized 2SF0)
// and CircularJacobi. Other families throw.
double ratio_series_prediction(const EnsembleSpec& spec, const RatioQuery& query, int max_degree = 24);

struct GaussianComparison {
  MCEstimate mc;
  std::vector<double> L_grid;
  std::vector<double> series_at_L;
  double extrapolated = 0;
  double pde_residual_mean = 0;  // Gaussian system residual on the MC estimate
  double pde_residual_se = 0;
};

// Gaussian ensemble ratio in (x − t) form (m = 0) against the large-L Jacobi series.
GaussianComparison gaussian_ratio_vs_limit(const EnsembleSpec& spec, const RatioQuery& query,
                                           const std::vector<int>& L_grid, long n_samples, std::uint64_t seed,
                                           int threads = 1);

struct HardEdge {
  double E = 0;  // probability of no eigenvalue in (0, s)
  double p = 0;  // density of the smallest eigenvalue at s
};

// Laguerre weight x^a e^{−βx/2} with a = n − (β/2)m.
HardEdge laguerre_hardedge_quantities(int N, const Scalar& beta, int n, int m, const Scalar& s);
// Direct quadrature of the same two quantities (N ≤ 2).
HardEdge laguerre_hardedge_quadrature(int N, double beta, double a, double s);

struct GammaSelbergRecord {
  double quadrature = 0;
  double series = 0;
  double discrepancy = 0;
};

// (1/S_N) ∫ ∏(1 − x_i t_j)/∏(1 − x_i s_k)^γ D_{λ₁,λ₂,1/α} against the γ-deformed 2SF1 with Jack parameter 1/α.
GammaSelbergRecord gamma_selberg_check(const Scalar& alpha, const Scalar& gamma, const Scalar& lambda1,
                                       const Scalar& lambda2, int N, const std::vector<Scalar>& t,
                                       const std::vector<Scalar>& s, int max_degree = 30);

}  // namespace sjack
