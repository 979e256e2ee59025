#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sjack/holonomic.hpp"

using namespace sjack;

namespace {

Scalar Q(long p, long q = 1) { return Scalar(p, q); }

BasisExpansion single(const Partition& k, const Scalar& alpha, int n, int m) {
  BasisExpansion f;
  f.n = n;
  f.m = m;
  f.alpha = alpha;
  f.add(k, Scalar(1));
  return f;
}

Evaluable series_fn(const BasisExpansion& f) {
  return [f](const std::vector<double>& t, const std::vector<double>& s) {
    return f.evaluate(SuperPoint{to_scalars(t), to_scalars(s)});
  };
}

// Parameters tied to the β = 2λ Selberg-type average with N = 3, λ = 2, λ₁ = λ₂ = 1/2.
DeformedSystemSpec selberg_system() { return DeformedSystemSpec::jacobi(Q(-3), Q(-11, 4), Q(-11, 2), Q(2), 1, 1); }

}  // namespace

TEST(Operators, HandValues) {
  const Scalar a = Q(3, 2);
  const int n = 2, m = 1;
  const Scalar p0 = Scalar(n) - a * Scalar(m);
  EXPECT_TRUE(op_E(1, single({}, a, n, m)).coeffs.empty());
  auto e0 = op_E(0, single({1}, a, n, m));
  EXPECT_EQ(e0.coeff({}), p0);
  EXPECT_EQ(e0.coeffs.size(), 1u);
  auto e1 = op_E(1, single({2, 1}, a, n, m));
  EXPECT_EQ(e1.coeff({2, 1}), Q(3));
  EXPECT_TRUE(op_D(2, single({}, a, n, m)).coeffs.empty());
  EXPECT_EQ(op_D(2, single({1}, a, n, m)).coeff({1}), Q(2) / a * (p0 - Q(1)));
  EXPECT_EQ(op_D(1, single({1}, a, n, m)).coeff({}), p0 * (p0 - Q(1)) / a);
  EXPECT_EQ(jack_eigen_e({2, 1}, a, p0), Q(2) * (Q(1) + Q(2) / a * (p0 - Q(1))) + Q(2) / a * (p0 - Q(2)));
}

TEST(Operators, AgreeWithAnalyticDifferentiation) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (const auto& a : {Q(1, 2), Q(2)}) {
    const int n = 2, m = 1;
    for (int trial = 0; trial < 20; ++trial) {
      SuperPoint pt{to_scalars({u(rng), u(rng)}), to_scalars({u(rng)})};
      for (const auto& k : enumerate_partitions(5, FatHook{n, m})) {
        auto f = single(k, a, n, m);
        for (int l : {0, 1}) {
          double want = op_E_pointwise(l, k, a, pt), got = op_E(l, f).evaluate(pt);
          EXPECT_NEAR(got, want, 1e-10 * std::max(1.0, std::abs(want))) << "E" << l << " " << k.str();
        }
        for (int kind : {1, 2}) {
          double want = op_D_pointwise(kind, k, a, pt), got = op_D(kind, f).evaluate(pt);
          EXPECT_NEAR(got, want, 1e-10 * std::max(1.0, std::abs(want))) << "D" << kind << " " << k.str();
        }
      }
    }
  }
}

TEST(BasisExpansion, RejectsShapesOutsideHook) {
  BasisExpansion f;
  f.n = 1;
  f.m = 1;
  EXPECT_THROW(f.add({2, 2}, Q(1)), std::invalid_argument);
  EXPECT_NO_THROW(f.add({3, 1, 1}, Q(1)));
  EXPECT_EQ(f.degree(), 5);
}

TEST(SummedOperator, TwoSFOneIsAnnihilatedBelowTop) {
  struct Case {
    Scalar a, b, c, alpha;
    int n, m;
  };
  for (const auto& cs : {Case{Q(2, 7), Q(-5, 3), Q(11, 5), Q(1), 1, 1}, Case{Q(1, 3), Q(3, 4), Q(9, 5), Q(2), 2, 1},
                         Case{Q(-3), Q(-11, 4), Q(-11, 2), Q(2), 1, 1}, Case{Q(5, 2), Q(-1, 7), Q(4, 3), Q(1, 3), 1, 2}}) {
    auto sys = DeformedSystemSpec::jacobi(cs.a, cs.b, cs.c, cs.alpha, cs.n, cs.m);
    auto f = truncated_2SF1(cs.a, cs.b, cs.c, cs.alpha, cs.n, cs.m, 8);
    auto r = summed_operator_residual(sys, f, 8);
    EXPECT_TRUE(r.below_top.is_zero());
    EXPECT_EQ(r.degree, 8);
  }
}

TEST(SummedOperator, NegativeControls) {
  auto sys = DeformedSystemSpec::jacobi(Q(2, 7), Q(-5, 3), Q(11, 5), Q(3, 2), 1, 1);
  BasisExpansion ones;
  ones.n = 1;
  ones.m = 1;
  ones.alpha = Q(3, 2);
  for (const auto& k : enumerate_partitions(6, FatHook{1, 1})) ones.add(k, Q(1));
  EXPECT_FALSE(summed_operator_residual(sys, ones, 6).below_top.is_zero());

  // Constants survive exactly when p₀ab = 0.
  auto zero_ab = DeformedSystemSpec::jacobi(Q(0), Q(3), Q(2), Q(3, 2), 1, 1);
  EXPECT_TRUE(summed_operator_residual(zero_ab, single({}, Q(3, 2), 1, 1), 2).below_top.is_zero());
  auto zero_p0 = DeformedSystemSpec::jacobi(Q(1, 3), Q(3), Q(5, 2), Q(2), 2, 1);
  EXPECT_TRUE(apply_summed_operator(zero_p0, single({}, Q(2), 2, 1)).coeffs.empty() ||
              apply_summed_operator(zero_p0, single({}, Q(2), 2, 1)).coeff({}).is_zero());
}

TEST(PointwiseResidual, TruncatedSeriesSolvesSystem) {
  auto sys = selberg_system();
  auto f = truncated_2SF1(sys.a, sys.b, sys.c, sys.alpha, 1, 1, 16);
  auto r = pointwise_system_residual(sys, series_fn(f), {0.03}, {0.02}, 1e-3);
  ASSERT_EQ(r.size(), 2u);
  for (double x : r) EXPECT_LT(std::abs(x), 1e-5);
  EXPECT_LT(std::abs(cancellation_residual(series_fn(f), sys.alpha, {0.025}, {0.025}, 0, 0)), 1e-6);
}

TEST(PointwiseResidual, TwoEvenOneOdd) {
  auto sys = DeformedSystemSpec::jacobi(Q(1, 3), Q(3, 4), Q(9, 5), Q(2), 2, 1);
  auto f = truncated_2SF1(sys.a, sys.b, sys.c, sys.alpha, 2, 1, 14);
  auto r = pointwise_system_residual(sys, series_fn(f), {0.02, -0.015}, {0.01}, 1e-3);
  ASSERT_EQ(r.size(), 3u);
  for (double x : r) EXPECT_LT(std::abs(x), 1e-5);
}

TEST(PointwiseResidual, ConstantWithZeroProduct) {
  auto sys = DeformedSystemSpec::jacobi(Q(0), Q(2), Q(3), Q(2), 2, 1);
  Evaluable one = [](const std::vector<double>&, const std::vector<double>&) { return 1.0; };
  for (double x : pointwise_system_residual(sys, one, {0.1, 0.3}, {0.2})) EXPECT_LT(std::abs(x), 1e-12);
  auto g = DeformedSystemSpec::gaussian(Q(0), Q(1), Q(2), 1, 1);
  for (double x : pointwise_system_residual(g, one, {0.1}, {0.2})) EXPECT_LT(std::abs(x), 1e-12);
}

TEST(PointwiseResidual, WrongParametersAreDetected) {
  auto sys = selberg_system();
  auto f = truncated_2SF1(sys.a, sys.b, sys.c + Q(1, 10), sys.alpha, 1, 1, 16);
  auto r = pointwise_system_residual(sys, series_fn(f), {0.03}, {0.02}, 1e-3);
  EXPECT_GT(std::max(std::abs(r[0]), std::abs(r[1])), 1e-4);
}

TEST(PointwiseResidual, ErrorPaths) {
  auto sys = selberg_system();
  Evaluable one = [](const std::vector<double>&, const std::vector<double>&) { return 1.0; };
  EXPECT_THROW(pointwise_system_residual(sys, one, {0.1}, {0.1}), std::domain_error);
  EXPECT_THROW(pointwise_system_residual(sys, one, {0.1, 0.2}, {0.3}), std::invalid_argument);
  EXPECT_THROW(pointwise_system_residual(sys, one, {0.1}, {0.3}, 0.0), std::invalid_argument);
  EXPECT_THROW(cancellation_residual(one, Q(1), {0.1}, {0.1}, 0, 1), std::invalid_argument);
}

TEST(SystemDuality, ResidualsMapToResiduals) {
  // With G(x; y) = F(y; x), the dual system (1/α, −αa, −αb, −αc) on G reproduces −α times the
  // swapped residuals of the original system on F, for any smooth F.
  const Scalar al = Q(3, 2);
  auto sys = DeformedSystemSpec::jacobi(Q(1, 3), Q(-2, 5), Q(7, 4), al, 2, 1);
  auto dual = DeformedSystemSpec::jacobi(-al * sys.a, -al * sys.b, -al * sys.c, Q(1) / al, 1, 2);
  Evaluable F = [](const std::vector<double>& t, const std::vector<double>& s) {
    return std::exp(0.7 * t[0] - 0.4 * t[1] * t[1] + 0.3 * s[0]) + t[0] * t[1] * s[0];
  };
  Evaluable G = [F](const std::vector<double>& x, const std::vector<double>& y) { return F(y, x); };
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.05, 0.6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> t{u(rng), -u(rng)}, s{u(rng) + 0.7};
    auto r = pointwise_system_residual(sys, F, t, s, 1e-3);
    auto rd = pointwise_system_residual(dual, G, s, t, 1e-3);
    const double A = al.to_double();
    const double scale = 1e-6 * (1 + std::abs(r[0]) + std::abs(r[1]) + std::abs(r[2]));
    EXPECT_NEAR(rd[0], -A * r[2], scale);
    EXPECT_NEAR(rd[1], -A * r[0], scale);
    EXPECT_NEAR(rd[2], -A * r[1], scale);
  }
}

TEST(Inversion, ParameterMapIsInvolution) {
  auto sys = selberg_system();
  Evaluable one = [](const std::vector<double>&, const std::vector<double>&) { return 1.0; };
  auto [once, g1] = inversion_transform(sys, one);
  auto [twice, g2] = inversion_transform(once, g1);
  EXPECT_EQ(twice.a, sys.a);
  EXPECT_EQ(twice.b, sys.b);
  EXPECT_EQ(twice.c, sys.c);
  EXPECT_EQ(once.a, sys.a);
  EXPECT_EQ(once.b, Q(5, 2));
  EXPECT_EQ(once.c, Q(-1, 4));
}

TEST(Inversion, ConstantWithZeroA) {
  auto sys = DeformedSystemSpec::jacobi(Q(0), Q(1, 3), Q(5, 2), Q(2), 1, 1);
  Evaluable one = [](const std::vector<double>&, const std::vector<double>&) { return 1.0; };
  auto [spec, f] = inversion_transform(sys, one);
  EXPECT_DOUBLE_EQ(f({3.0}, {5.0}), 1.0);
  EXPECT_DOUBLE_EQ(f({7.0}, {0.5}), 1.0);
}

TEST(Inversion, TransformedSeriesSolvesTransformedSystem) {
  auto sys = selberg_system();
  auto [target, _] = inversion_transform(sys, Evaluable{});
  // G solves the transformed-parameter system; its inversion solves the original one at large w.
  auto g = truncated_2SF1(target.a, target.b, target.c, target.alpha, 1, 1, 16);
  auto [back, F] = inversion_transform(target, series_fn(g));
  EXPECT_EQ(back.b, sys.b);
  auto r = pointwise_system_residual(back, F, {5.0}, {7.0}, 1e-3);
  for (double x : r) EXPECT_LT(std::abs(x), 1e-4);
}

TEST(Kaneko, CriterionHoldsForTwoSFOne) {
  EXPECT_TRUE(kaneko_criterion_check(Q(2, 7), Q(-5, 3), Q(11, 5), Q(1), 1, 0, 5).ok);
  EXPECT_TRUE(kaneko_criterion_check(Q(2, 7), Q(-5, 3), Q(11, 5), Q(2), 2, 1, 5).ok);
}

TEST(Kaneko, PerturbedCoefficientFails) {
  const Scalar a = Q(2, 7), b = Q(-5, 3), c = Q(11, 5), al = Q(2);
  auto bad = [&](const Partition& k) {
    Scalar v = twoF1_coefficient(a, b, c, al, k);
    return k == Partition{1, 1} ? v * Scalar(2) : v;
  };
  auto rep = kaneko_criterion_check_with(bad, a, b, c, al, 2, 1, 4);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.failed.empty());
}

TEST(SystemSpec, GeneralFamilyValidation) {
  auto j = DeformedSystemSpec::jacobi(Q(1, 3), Q(1, 5), Q(7, 4), Q(2), 1, 1);
  auto g = j.general_coefficients();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[0], Q(1));
  EXPECT_EQ(g[1], Q(-1));
  EXPECT_EQ(g[2], Q(7, 4));
  EXPECT_EQ(g[3], -(Q(1, 3) + Q(1, 5) + Q(1)));
  EXPECT_EQ(g[4], -(Q(1, 3) * Q(1, 5)));
  EXPECT_NO_THROW(j.validate());
  // β₀ = (i−1)/α − κ_i for i = 2, κ = (1,1): 1/2 − 1.
  auto bad = DeformedSystemSpec::general(Q(1), Q(-1), Q(-1, 2), Q(0), Q(0), Q(2), 1, 1);
  EXPECT_THROW(bad.validate(), std::domain_error);
}

TEST(SuperJacobi, TerminatesWithTopTerm) {
  auto sj = super_jacobi(2, 2, Q(1), Q(5, 3), 1, 1);
  EXPECT_TRUE(sj.eigen_ok);
  EXPECT_TRUE(sj.top_ok);
  EXPECT_EQ(sj.eps_top, sj.ab_p0);
  EXPECT_EQ(sj.poly.degree(), sj.kappa_max.weight());
  EXPECT_FALSE(sj.poly.coeff(sj.kappa_max).is_zero());
  for (const auto& [k, c] : sj.poly.coeffs) EXPECT_TRUE(sj.kappa_max.contains(k)) << k.str();
  EXPECT_EQ(sj.poly.coeff({}), Q(1));
}

TEST(SuperJacobi, EigenvalueIdentityAcrossParameters) {
  for (const auto& al : {Q(1, 2), Q(2), Q(3, 2)})
    for (auto [N, M] : {std::pair{1, 1}, {2, 3}, {3, 2}}) {
      auto sj = super_jacobi(N, M, al, Q(13, 7), 1, 1);
      EXPECT_EQ(sj.eps_top, sj.ab_p0);
      EXPECT_TRUE(sj.eigen_ok);
      EXPECT_EQ(super_jacobi_eigenvalue(sj.kappa_max, al, Scalar(1) - al, sj.gamma, sj.eta), sj.ab_p0);
    }
}

TEST(SuperJacobi, RejectsNonTerminating) {
  EXPECT_THROW(super_jacobi(2, 0, Q(1), Q(5, 3), 1, 1), std::invalid_argument);
  EXPECT_THROW(super_jacobi(0, 2, Q(1), Q(5, 3), 1, 1), std::invalid_argument);
  EXPECT_THROW(super_jacobi(2, 1, Q(1), Q(5, 3), 2, 1), std::domain_error);
}
