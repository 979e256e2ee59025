#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sjack/ensembles.hpp"
#include "sjack/special.hpp"

using namespace sjack;

namespace {

Scalar Q(long p, long q = 1) { return Scalar(p, q); }

EnsembleSpec make(Family f, int N, double beta, double l1 = 0, double l2 = 0, double b = 0) {
  EnsembleSpec s;
  s.family = f;
  s.N = N;
  s.beta = beta;
  s.lambda1 = l1;
  s.lambda2 = l2;
  s.b_cj = b;
  return s;
}

struct Moments {
  double mean = 0, var = 0;
  long n = 0;
};

Moments moments(const EnsembleSpec& spec, long draws, std::uint64_t seed, int power = 1) {
  std::mt19937_64 rng(seed);
  Moments m;
  double s1 = 0, s2 = 0;
  for (long i = 0; i < draws; ++i) {
    double v = 0;
    for (double x : sample_ensemble(spec, rng)) v += std::pow(x, power);
    s1 += v;
    s2 += v * v;
  }
  m.n = draws;
  m.mean = s1 / draws;
  m.var = s2 / draws - m.mean * m.mean;
  return m;
}

double se(const Moments& m) { return std::sqrt(m.var / m.n); }

}  // namespace

TEST(Constants, SelbergClosedForms) {
  EXPECT_NEAR(selberg_constant(1, 0, 0, 1), 1.0, 1e-14);
  EXPECT_NEAR(selberg_constant(1, 0.5, 2, 0.7), std::exp(log_beta(1.5, 3)), 1e-14);
  // ∫∫ (x − y)² = 1/6.
  EXPECT_NEAR(selberg_constant(2, 0, 0, 1), 1.0 / 6, 1e-14);
  EXPECT_NEAR(selberg_constant(3, 0.5, 0.5, 1), std::exp(log_selberg_constant(3, 0.5, 0.5, 1)), 1e-15);
}

TEST(Constants, SelbergAgainstQuadrature) {
  for (int N : {1, 2})
    for (double l1 : {0.0, 0.5, 1.0})
      for (double lam : {0.5, 1.0}) {
        double q = selberg_type_integral(N, l1, 0.5, lam, [](const std::vector<double>&) { return 1.0; });
        double c = selberg_constant(N, l1, 0.5, lam);
        EXPECT_NEAR(q / c, 1.0, 1e-8) << N << " " << l1 << " " << lam;
      }
}

TEST(Constants, Morris) {
  EXPECT_NEAR(morris_constant(1, 0, 0, 1), 2 * std::numbers::pi, 1e-13);
  EXPECT_NEAR(morris_constant(1, 1.5, 0.5, 1), 2 * std::numbers::pi * std::tgamma(3) / (std::tgamma(2.5) * std::tgamma(1.5)),
              1e-12);
  // N = 2, λ = 1, a = b = 1: periodic trapezoid quadrature of the Morris integrand.
  const int K = 256;
  double sum = 0;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) {
      double t1 = -std::numbers::pi + 2 * std::numbers::pi * i / K;
      double t2 = -std::numbers::pi + 2 * std::numbers::pi * j / K;
      // ∏ e^{iθ(a−b)/2}|1 + e^{iθ}|^{a+b} ∏|e^{iθ₁} − e^{iθ₂}|^{2λ}
      double w = std::pow(2 + 2 * std::cos(t1), 1.0) * std::pow(2 + 2 * std::cos(t2), 1.0);
      double v = 2 - 2 * std::cos(t1 - t2);
      sum += w * v;
    }
  sum *= std::pow(2 * std::numbers::pi / K, 2);
  EXPECT_NEAR(sum, morris_constant(2, 1, 1, 1), 1e-8 * sum);
}

TEST(Constants, LaguerreAndGaussian) {
  // N = 1: ∫ x^{λ₁} e^{−βx/2} dx = Γ(λ₁+1)(2/β)^{λ₁+1}.
  EXPECT_NEAR(laguerre_W(0.5, 2, 1), std::tgamma(1.5), 1e-13);
  EXPECT_NEAR(laguerre_W(1, 4, 1), std::tgamma(2) * std::pow(0.5, 2), 1e-13);
  EXPECT_NEAR(gaussian_G(2, 1), std::sqrt(std::numbers::pi), 1e-13);
  EXPECT_THROW(laguerre_W(0.5, 2, -1), std::invalid_argument);
}

TEST(SelbergQuadrature, Normalization) {
  for (int N : {1, 2, 3})
    for (double beta : {1.0, 2.0, 4.0})
      for (double l : {0.0, 0.5, 1.0}) {
        auto spec = make(Family::Jacobi, N, beta, l, 0.5);
        EXPECT_NEAR(selberg_quadrature(spec, {}), 1.0, 1e-9) << N << " " << beta << " " << l;
      }
}

TEST(SelbergQuadrature, OneVariableEulerIntegral) {
  // N = 1: E[(1 − tx)/(1 − sx)^{β/2}] with x ~ Beta(λ₁+1, λ₂+1).
  auto spec = make(Family::Jacobi, 1, 2, 0.5, 0.25);
  RatioQuery q{{0.2}, {0.3}, RatioForm::OneMinusTX};
  // Σ_k s^k (E[x^k] − t E[x^{k+1}]) with Beta moments.
  double sum = 0, mk = 1;
  for (int k = 0; k < 200; ++k) {
    double mk1 = mk * (1.5 + k) / (2.75 + k);
    sum += std::pow(0.3, k) * (mk - 0.2 * mk1);
    mk = mk1;
  }
  EXPECT_NEAR(selberg_quadrature(spec, q), sum, 1e-9);
  EXPECT_THROW(selberg_quadrature(make(Family::Jacobi, 4, 2), q), std::invalid_argument);
  EXPECT_THROW(selberg_quadrature(make(Family::Laguerre, 2, 2), q), std::invalid_argument);
}

TEST(SelbergQuadrature, HeadlineIdentity) {
  auto spec = make(Family::Jacobi, 2, 2, 0.5, 0.5);
  RatioQuery q{{0.2}, {0.3}, RatioForm::OneMinusTX};
  EXPECT_NEAR(selberg_quadrature(spec, q), ratio_series_prediction(spec, q, 20), 1e-6);
}

TEST(Sampler, SpecValidation) {
  EXPECT_THROW(make(Family::Jacobi, 0, 2).validate(), std::invalid_argument);
  EXPECT_THROW(make(Family::Jacobi, 2, -1).validate(), std::domain_error);
  EXPECT_THROW(make(Family::Jacobi, 2, 2, -1).validate(), std::domain_error);
  EXPECT_THROW(make(Family::Laguerre, 2, 2, -2).validate(), std::domain_error);
  EXPECT_THROW(parse_family("gue"), std::invalid_argument);
  EXPECT_EQ(parse_family("circular-jacobi"), Family::CircularJacobi);
  EXPECT_EQ(family_name(Family::Hermite), "hermite");
}

TEST(Sampler, HermiteOneByOne) {
  auto m = moments(make(Family::Hermite, 1, 2), 100000, 1);
  EXPECT_NEAR(m.mean, 0, 4 * se(m));
  auto m2 = moments(make(Family::Hermite, 1, 2), 100000, 2, 2);
  EXPECT_NEAR(m2.mean, 0.5, 4 * se(m2));
}

TEST(Sampler, JacobiOneByOneIsBeta) {
  auto m = moments(make(Family::Jacobi, 1, 2, 1, 0.5), 100000, 3);
  EXPECT_NEAR(m.mean, 2.0 / 3.5, 4 * se(m));
  auto m2 = moments(make(Family::Jacobi, 1, 2, 1, 0.5), 100000, 4, 2);
  EXPECT_NEAR(m2.mean, 2.0 / 3.5 * 3.0 / 4.5, 4 * se(m2));
}

TEST(Sampler, JacobiTwoByTwoMeanMatchesQuadrature) {
  auto spec = make(Family::Jacobi, 2, 2);
  auto m = moments(spec, 100000, 5);
  double q = selberg_type_integral(2, 0, 0, 1, [](const std::vector<double>& x) { return x[0] + x[1]; }) /
             selberg_constant(2, 0, 0, 1);
  EXPECT_NEAR(m.mean, q, 4 * se(m));
}

TEST(Sampler, LaguerreOneByOne) {
  // x^{λ₁} e^{−βx/2}: Gamma(λ₁+1, scale 2/β).
  auto m = moments(make(Family::Laguerre, 1, 2, 0.5), 100000, 6);
  EXPECT_NEAR(m.mean, 1.5, 4 * se(m));
}

TEST(Sampler, CircularAnglesAreUniformForN1) {
  auto m = moments(make(Family::Circular, 1, 2), 100000, 7);
  EXPECT_NEAR(m.mean, 0, 4 * se(m));
  for (double x : sample_ensemble(make(Family::Circular, 3, 2), 9)) {
    EXPECT_GT(x, -std::numbers::pi - 1e-12);
    EXPECT_LE(x, std::numbers::pi + 1e-12);
  }
}

TEST(Sampler, CircularJacobiMoments) {
  // N = 1: E[cos θ] = b/(b+1) under |1 + e^{iθ}|^{2b}.
  // N = 2, β = 4, b = 1 by tensor quadrature: E[Σcos θ] = 1/2, E[Σcos 2θ] = −1/2, E[cos θ₁ cos θ₂] = −3/32.
  std::mt19937_64 rng(17);
  const long draws = 100000;
  double c1 = 0, c1sq = 0;
  for (long i = 0; i < draws; ++i) {
    double c = std::cos(sample_ensemble(make(Family::CircularJacobi, 1, 2, 0, 0, 2), rng)[0]);
    c1 += c;
    c1sq += c * c;
  }
  c1 /= draws;
  EXPECT_NEAR(c1, 2.0 / 3, 4 * std::sqrt((c1sq / draws - c1 * c1) / draws));

  const double expect[3] = {0.5, -0.5, -3.0 / 32};
  double sum[3] = {}, sq[3] = {};
  for (long i = 0; i < draws; ++i) {
    auto th = sample_ensemble(make(Family::CircularJacobi, 2, 4, 0, 0, 1), rng);
    const double v[3] = {std::cos(th[0]) + std::cos(th[1]), std::cos(2 * th[0]) + std::cos(2 * th[1]),
                         std::cos(th[0]) * std::cos(th[1])};
    for (int j = 0; j < 3; ++j) {
      sum[j] += v[j];
      sq[j] += v[j] * v[j];
    }
  }
  for (int j = 0; j < 3; ++j) {
    double mean = sum[j] / draws, err = std::sqrt((sq[j] / draws - mean * mean) / draws);
    EXPECT_NEAR(mean, expect[j], 4 * err) << j;
  }

  // The deformed Verblunsky construction has no rejection cost growing with N.
  auto big = sample_ensemble(make(Family::CircularJacobi, 64, 2, 0, 0, 3), 5);
  EXPECT_EQ(big.size(), 64u);
  EXPECT_THROW(sample_ensemble(make(Family::CircularJacobi, 2, 2, 0, 0, -0.25), 5), std::domain_error);
}

TEST(Sampler, SeedsAreReproducible) {
  auto spec = make(Family::Jacobi, 3, 2, 0.5, 0.5);
  EXPECT_EQ(sample_ensemble(spec, 42), sample_ensemble(spec, 42));
  EXPECT_NE(sample_ensemble(spec, 42), sample_ensemble(spec, 43));
}

TEST(MonteCarlo, EmptyQuery) {
  auto est = mc_ratio_expectation(make(Family::Jacobi, 2, 2), {}, 100, 1);
  EXPECT_DOUBLE_EQ(est.mean, 1.0);
  EXPECT_DOUBLE_EQ(est.std_error, 0.0);
}

TEST(MonteCarlo, IndependentOfThreadCount) {
  auto spec = make(Family::Jacobi, 3, 2, 0.5, 0.5);
  RatioQuery q{{0.1}, {0.05}, RatioForm::OneMinusTX};
  auto a = mc_ratio_expectation(spec, q, 20000, 11, 1);
  auto b = mc_ratio_expectation(spec, q, 20000, 11, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_LE(a.ess, static_cast<double>(a.n_samples));
  EXPECT_THROW(mc_ratio_expectation(spec, q, 1, 11), std::invalid_argument);
}

TEST(MonteCarlo, DenominatorInsideSupport) {
  auto spec = make(Family::Jacobi, 2, 2);
  RatioQuery q{{}, {2.0}, RatioForm::OneMinusTX};
  EXPECT_THROW(mc_ratio_expectation(spec, q, 1000, 1), std::domain_error);
}

TEST(SeriesPrediction, DecimalParametersWithLeadingZeros) {
  // 0.0123 and 0.09 once went through an octal parse.
  auto spec = make(Family::Jacobi, 2, 2, 0.5, 1.5);
  RatioQuery q{{0.0123}, {0.09}, RatioForm::OneMinusTX};
  EXPECT_NEAR(ratio_series_prediction(spec, q), selberg_quadrature(spec, q), 1e-8);
}

TEST(MonteCarlo, JacobiAgainstSeries) {
  auto spec = make(Family::Jacobi, 3, 2, 0.5, 0.5);
  RatioQuery q{{0.1}, {0.05}, RatioForm::OneMinusTX};
  auto est = mc_ratio_expectation(spec, q, 100000, 20240611, 2);
  EXPECT_NEAR(est.mean, ratio_series_prediction(spec, q), 3 * est.std_error);
}

TEST(MonteCarlo, CircularJacobiAgainstSeries) {
  auto spec = make(Family::CircularJacobi, 3, 4, 0, 0, 1);
  RatioQuery q{{0.1}, {0.05}, RatioForm::OneMinusTX};
  auto est = mc_ratio_expectation(spec, q, 100000, 20240611, 2);
  EXPECT_NEAR(est.mean, ratio_series_prediction(spec, q), 3 * est.std_error);
  EXPECT_THROW(ratio_series_prediction(make(Family::Hermite, 2, 2), q), std::invalid_argument);
}

TEST(GaussianLimit, ErrorPaths) {
  auto herm = make(Family::Hermite, 2, 2);
  RatioQuery q{{3.0}, {}, RatioForm::XMinusT};
  EXPECT_THROW(gaussian_ratio_vs_limit(make(Family::Jacobi, 2, 2), q, {8, 16}, 100, 1), std::invalid_argument);
  EXPECT_THROW(gaussian_ratio_vs_limit(herm, q, {8}, 100, 1), std::invalid_argument);
  RatioQuery qs{{3.0}, {5.0}, RatioForm::XMinusT};
  EXPECT_THROW(gaussian_ratio_vs_limit(herm, qs, {8, 16}, 100, 1), std::invalid_argument);
}

TEST(GaussianLimit, SecondMomentIdentity) {
  // N = 2, β = 2: E[(x₁ − t)(x₂ − t)] = t² + E[x₁x₂], and E[x₁x₂] = (E[(tr H)²] − E[tr H²])/2 = (1 − 2)/2.
  auto herm = make(Family::Hermite, 2, 2);
  RatioQuery q{{3.0}, {}, RatioForm::XMinusT};
  auto res = gaussian_ratio_vs_limit(herm, q, {8, 16, 32, 64, 128}, 100000, 20240611, 2);
  EXPECT_NEAR(res.mc.mean, res.extrapolated, 3 * res.mc.std_error);
  EXPECT_NEAR(res.extrapolated, 9.0 - 0.5, 1e-3);
  EXPECT_NEAR(res.pde_residual_mean, 0, 3 * res.pde_residual_se);
}

TEST(HardEdge, OneByOneAndQuadrature) {
  auto he = laguerre_hardedge_quantities(1, Q(2), 0, 0, Q(3, 4));
  EXPECT_NEAR(he.E, std::exp(-0.75), 1e-10);
  auto near0 = laguerre_hardedge_quantities(2, Q(2), 1, 0, Q(1, 100000));
  EXPECT_NEAR(near0.E, 1.0, 1e-6);
  auto f = laguerre_hardedge_quantities(2, Q(2), 1, 0, Q(1, 2));
  auto q = laguerre_hardedge_quadrature(2, 2, 1, 0.5);
  EXPECT_NEAR(f.E, q.E, 1e-6);
  EXPECT_NEAR(f.p, q.p, 1e-6);
  EXPECT_THROW(laguerre_hardedge_quantities(2, Q(2), 0, 1, Q(1)), std::domain_error);
  EXPECT_THROW(laguerre_hardedge_quantities(2, Q(2), 1, 0, Q(0)), std::domain_error);
}

TEST(GammaSelberg, Checks) {
  auto r = gamma_selberg_check(Q(1), Q(3), Q(0), Q(0), 1, {Q(1, 10)}, {Q(1, 10)});
  EXPECT_LT(r.discrepancy, 1e-7);
  for (const auto& g : {Q(1), Q(2), Q(1, 2), Q(4)}) {
    auto rec = gamma_selberg_check(Q(2), g, Q(1, 2), Q(1, 2), 1, {Q(1, 10)}, {Q(1, 10)});
    EXPECT_LT(rec.discrepancy, 1e-7);
  }
  EXPECT_THROW(gamma_selberg_check(Q(2), Q(1), Q(0), Q(0), 3, {Q(1, 10)}, {}), std::invalid_argument);
}

TEST(MorrisSelbergBridge, AgreesWhereReal) {
  auto [s, m] = morris_selberg_bridge(1, 0.5, 0.25, 1);
  EXPECT_NEAR(s, m, 1e-10 * std::abs(s));
}
