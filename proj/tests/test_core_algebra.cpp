#include <gtest/gtest.h>

#include <random>

#include "sjack/partition.hpp"
#include "sjack/scalar.hpp"

using namespace sjack;

namespace {

Scalar Q(long p, long q = 1) { return Scalar(p, q); }

Partition random_partition(std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  auto all = partitions_of(w(rng));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace

TEST(Scalar, ParsesRationals) {
  EXPECT_EQ(Scalar::parse("3/6", false), Q(1, 2));
  EXPECT_EQ(Scalar::parse("-4", false), Q(-4));
  EXPECT_EQ(Scalar::parse("2/-3", false), Q(-2, 3));
  EXPECT_EQ(Q(6, 4).str(), "3/2");
  EXPECT_EQ(Q(4, 2).str(), "2");
}

TEST(Scalar, DecimalsNeedFloatOptIn) {
  EXPECT_THROW(Scalar::parse("0.5", false), std::invalid_argument);
  Scalar f = Scalar::parse("0.5", true);
  EXPECT_FALSE(f.is_exact());
  EXPECT_DOUBLE_EQ(f.to_double(), 0.5);
}

TEST(Scalar, ErrorPaths) {
  EXPECT_THROW(Scalar::parse("", false), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/x", false), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("1/0", false), std::domain_error);
  EXPECT_THROW(Q(1) / Q(0), std::domain_error);
  EXPECT_THROW(Scalar(1, 0), std::domain_error);
  EXPECT_THROW(Scalar::from_double(1.0) / Scalar::from_double(0.0), std::domain_error);
  EXPECT_THROW(Q(1, 3).to_long(), std::domain_error);
}

TEST(Scalar, NonFiniteFloatIsRejected) {
  EXPECT_THROW(Scalar::from_double(1e308) * Scalar::from_double(1e308), std::domain_error);
}

TEST(Scalar, MixedArithmeticDegradesToFloat) {
  Scalar r = Q(1, 3) + Scalar::from_double(0.25);
  EXPECT_FALSE(r.is_exact());
  EXPECT_NEAR(r.to_double(), 1.0 / 3 + 0.25, 1e-15);
}

TEST(Scalar, BigRationalRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 1'000'000'007L);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = Scalar(d(rng), d(rng)).pow(3);
    Scalar y = Scalar(-d(rng), d(rng)).pow(2);
    EXPECT_EQ((x + y) - y, x);
    EXPECT_EQ((x * y) / y, x);
  }
}

TEST(Partition, CanonicalForm) {
  Partition p{3, 1, 0, 0};
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 4);
  EXPECT_EQ(p.str(), "3,1");
  EXPECT_EQ(Partition::parse("3,1,1"), (Partition{3, 1, 1}));
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_EQ(Partition::parse("0"), Partition{});
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
}

TEST(Partition, ArmLegAndBoxes) {
  Partition p{4, 2, 1};
  EXPECT_EQ(p.arm(0, 0), 3);
  EXPECT_EQ(p.leg(0, 0), 2);
  EXPECT_EQ(p.leg(1, 1), 0);
  EXPECT_EQ(*p.add_box(1), (Partition{4, 3, 1}));
  EXPECT_EQ(*p.add_box(3), (Partition{4, 2, 1, 1}));
  EXPECT_FALSE(Partition({2, 2}).remove_box(0).has_value());
  EXPECT_EQ(*Partition({2, 2}).remove_box(1), (Partition{2, 1}));
}

TEST(Partition, Enumeration) {
  auto z = enumerate_partitions(0);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].empty());
  auto two = enumerate_partitions(2);
  std::vector<Partition> want{{}, {1}, {2}, {1, 1}};
  EXPECT_EQ(two, want);
  EXPECT_THROW(enumerate_partitions(-1), std::invalid_argument);

  // Counts p(k) for k ≤ 10.
  const int pk[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(partitions_of(k).size(), static_cast<std::size_t>(pk[k]));
}

TEST(Partition, FatHookFilter) {
  FatHook h{1, 1};
  auto in3 = enumerate_partitions(3, h);
  EXPECT_EQ(in3.size(), enumerate_partitions(3).size());
  auto in4 = enumerate_partitions(4, h);
  EXPECT_EQ(std::count(in4.begin(), in4.end(), Partition{2, 2}), 0);
  EXPECT_EQ(in4.size(), enumerate_partitions(4).size() - 1);
  for (const auto& k : enumerate_partitions(8))
    EXPECT_EQ(FatHook({2, 1}).contains(k), k[2] <= 1) << k.str();
}

TEST(Partition, Dominance) {
  EXPECT_TRUE(dominance_leq({1, 1, 1}, {3}));
  EXPECT_TRUE(dominance_leq({2, 1}, {2, 1}));
  EXPECT_TRUE(dominance_leq({2, 2}, {3, 1}));
  EXPECT_FALSE(dominance_leq({3, 1}, {2, 2}));
  EXPECT_THROW(dominance_leq({2}, {1}), std::invalid_argument);
}

TEST(Partition, ConjugationIsInvolution) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Partition k = random_partition(rng, 20);
    EXPECT_EQ(k.conjugate().conjugate(), k);
    EXPECT_EQ(k.conjugate().weight(), k.weight());
  }
}

TEST(Partition, DominanceIsAntitoneUnderConjugation) {
  for (int w = 1; w <= 8; ++w) {
    auto ps = partitions_of(w);
    for (const auto& k : ps)
      for (const auto& s : ps) EXPECT_EQ(dominance_leq(k, s), dominance_leq(s.conjugate(), k.conjugate()));
  }
}

TEST(HookProducts, HandValues) {
  EXPECT_EQ(hook_product(Partition{}, Q(3)), Q(1));
  EXPECT_EQ(hook_product(Partition{1}, Q(3)), Q(1));
  EXPECT_EQ(hook_product(Partition{2}, Q(2)), Q(2));
  EXPECT_EQ(hook_product(Partition{1, 1}, Q(2)), Q(3, 2));
  // h′ of (2) at α = 2: boxes give (1 + 1/2)(0 + 1/2).
  EXPECT_EQ(hook_product_prime(Partition{2}, Q(2)), Q(3, 4));
}

TEST(HookProducts, ProductFactorization) {
  // h_κ h′_κ = ∏ (a + l/α + 1)(a + l/α + 1/α), box by box.
  for (const auto& alpha : {Q(1, 2), Q(2), Q(5, 3)})
    for (const auto& k : enumerate_partitions(6)) {
      Scalar want(1);
      for (int i = 0; i < k.length(); ++i)
        for (int j = 0; j < k[i]; ++j) {
          Scalar a(k.arm(i, j)), l(k.leg(i, j));
          want *= (a + l / alpha + Scalar(1)) * (a + l / alpha + Scalar(1) / alpha);
        }
      EXPECT_EQ(hook_product(k, alpha) * hook_product_prime(k, alpha), want) << k.str();
    }
}

TEST(Pochhammer, HandValues) {
  Scalar x = Q(7, 5), alpha = Q(3, 2);
  EXPECT_EQ(gen_pochhammer(x, Partition{}, alpha), Q(1));
  EXPECT_EQ(gen_pochhammer(x, Partition{1}, alpha), x);
  EXPECT_EQ(gen_pochhammer(x, Partition{2, 1}, alpha), x * (x + Q(1)) * (x - Q(1) / alpha));
}

TEST(Pochhammer, ConjugateDuality) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9), e(1, 7);
  for (int trial = 0; trial < 6; ++trial) {
    Scalar x(d(rng), e(rng)), alpha(e(rng), e(rng));
    for (const auto& k : enumerate_partitions(6)) {
      Scalar lhs = gen_pochhammer(x, k, alpha);
      Scalar rhs = (-alpha).pow(-k.weight()) * gen_pochhammer(-alpha * x, k.conjugate(), Q(1) / alpha);
      EXPECT_EQ(lhs, rhs) << k.str();
    }
  }
}

TEST(Pochhammer, Vanishing) {
  const Scalar a(2);
  EXPECT_TRUE(pochhammer_vanishes({3}, a, VanishKind::NegInt, 2));
  EXPECT_FALSE(pochhammer_vanishes({2}, a, VanishKind::NegInt, 2));
  EXPECT_TRUE(pochhammer_vanishes({1, 1, 1}, a, VanishKind::OverAlpha, 2));
  EXPECT_FALSE(pochhammer_vanishes({3, 3}, a, VanishKind::OverAlpha, 2));
  EXPECT_THROW(pochhammer_vanishes({1}, a, VanishKind::NegInt, 0), std::invalid_argument);
  // Agreement with the symbol itself.
  for (const auto& k : enumerate_partitions(6)) {
    EXPECT_EQ(pochhammer_vanishes(k, a, VanishKind::NegInt, 3), gen_pochhammer(Q(-3), k, a).is_zero());
    EXPECT_EQ(pochhammer_vanishes(k, a, VanishKind::OverAlpha, 2), gen_pochhammer(Q(2) / a, k, a).is_zero());
  }
}

TEST(Alpha, MustBePositive) {
  EXPECT_THROW(require_alpha(Q(0)), std::domain_error);
  EXPECT_THROW(require_alpha(Q(-1, 2)), std::domain_error);
  EXPECT_NO_THROW(require_alpha(Q(1, 2)));
}
