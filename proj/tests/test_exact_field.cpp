#include <gtest/gtest.h>

#include <random>

#include "monohopf/cyclotomic.hpp"
#include "monohopf/qcombinatorics.hpp"

using namespace monohopf;

namespace {

Polynomial poly(std::initializer_list<long long> c) {
  std::vector<Rat> v;
  for (long long x : c) v.emplace_back(x);
  return Polynomial(v);
}

int moebius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

// Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}: multiply the positive factors,
// then divide out the negative ones.
Polynomial moebius_cyclotomic(long n) {
  Polynomial num = poly({1});
  Polynomial den = poly({1});
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int m = moebius(n / d);
    const Polynomial f = Polynomial::monomial(static_cast<std::size_t>(d)) - poly({1});
    if (m == 1) num = num * f;
    if (m == -1) den = den * f;
  }
  auto [q, r] = Polynomial::divmod(num, den);
  EXPECT_TRUE(r.is_zero());
  return q;
}

// (n choose k)_q as a sum over k-subsets of {1..n} of q^(sum - k(k+1)/2).
CycloNum subset_binomial(long n, long k, const CycloNum& q) {
  CycloNum total = CycloNum::zero(q.conductor());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    long s = 0;
    for (long i = 0; i < n; ++i) {
      if (mask & (1u << i)) s += i + 1;
    }
    total += q.pow(s - k * (k + 1) / 2);
  }
  return total;
}

CycloNum random_cyclo(std::mt19937_64& rng, long conductor) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 5);
  const auto phi = static_cast<std::size_t>(euler_phi(conductor));
  std::vector<Rat> c;
  for (std::size_t i = 0; i < phi; ++i) c.emplace_back(num(rng), den(rng));
  return CycloNum(conductor, c);
}

}  // namespace

TEST(Rational, CanonicalAndOverflowFallback) {
  EXPECT_EQ(Rat(2, 4), Rat(1, 2));
  EXPECT_EQ(Rat(3, -6).str(), "-1/2");
  EXPECT_EQ(Rat().str(), "0/1");
  Rat big(1);
  for (int i = 0; i < 5; ++i) big *= Rat(1LL << 40);
  EXPECT_FALSE(big.is_small());
  Rat back = big;
  for (int i = 0; i < 5; ++i) back /= Rat(1LL << 40);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rat(1));
  EXPECT_EQ(Rat::parse("-12/8"), Rat(-3, 2));
  EXPECT_THROW(Rat::parse("1/0"), DomainError);
  EXPECT_THROW(Rat(1) / Rat(0), DomainError);
}

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), poly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), poly({1, -1, 1}));
}

TEST(Cyclotomic, AgreesWithMoebiusProduct) {
  for (long n = 1; n <= 60; ++n) {
    const Polynomial p = cyclotomic_polynomial(n);
    EXPECT_EQ(p, moebius_cyclotomic(n)) << "N=" << n;
    EXPECT_EQ(p.degree(), euler_phi(n)) << "N=" << n;
  }
}

TEST(Cyclotomic, Arithmetic) {
  const CycloNum i = CycloNum::root(4, 1);
  EXPECT_EQ(i * i, CycloNum(-1));
  const CycloNum z3 = CycloNum::root(3, 1);
  EXPECT_EQ((CycloNum::one(3) + z3).inverse(), -z3);
  EXPECT_EQ(z3 + CycloNum(0), z3);
  EXPECT_THROW(CycloNum::zero(5).inverse(), DomainError);
  EXPECT_THROW(z3 / CycloNum::zero(3), DomainError);
}

TEST(Cyclotomic, MixedConductorsCompareAfterEmbedding) {
  EXPECT_EQ(CycloNum::root(2, 1), CycloNum(-1));
  EXPECT_EQ(CycloNum::root(4, 2), CycloNum::root(2, 1));
  EXPECT_EQ(CycloNum::root(12, 8), CycloNum::root(3, 2));
  EXPECT_EQ(CycloNum::root(4, 1) * CycloNum::root(3, 1), CycloNum::root(12, 7));
  EXPECT_NE(CycloNum::root(4, 1), CycloNum::root(4, 3));
}

TEST(RootOfUnityTest, Order) {
  EXPECT_EQ(order_of(RootOfUnity(12, 8)), 3);
  EXPECT_EQ(order_of(RootOfUnity(7, 0)), 1);
  EXPECT_EQ(order_of(RootOfUnity(2, 1)), 2);
  for (long n = 1; n <= 24; ++n) {
    for (long k = 0; k < n; ++k) {
      const RootOfUnity q(n, k);
      const long d = order_of(q);
      const CycloNum v = q.value();
      EXPECT_TRUE(v.pow(d).is_one());
      for (long j = 1; j < d; ++j) EXPECT_FALSE(v.pow(j).is_one()) << n << " " << k << " " << j;
    }
  }
}

TEST(RootOfUnityTest, Recognize) {
  auto r = RootOfUnity::recognize(CycloNum(-1));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->order(), 2);
  auto z = RootOfUnity::recognize(CycloNum::root(12, 5));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(*z, RootOfUnity(12, 5));
  EXPECT_FALSE(RootOfUnity::recognize(CycloNum(2)).has_value());
}

TEST(Cyclotomic, FieldAxiomsSpotCheck) {
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> cond(1, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    const long n = cond(rng);
    const CycloNum a = random_cyclo(rng, n);
    const CycloNum b = random_cyclo(rng, n);
    const CycloNum c = random_cyclo(rng, n);
    ASSERT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) {
      ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Cyclotomic, EmbeddingIsARingMap) {
  std::mt19937_64 rng(1);
  for (long n = 1; n <= 24; ++n) {
    for (long m = n; m <= 24; m += n) {
      const CycloNum a = random_cyclo(rng, n);
      const CycloNum b = random_cyclo(rng, n);
      EXPECT_EQ((a + b).embed(m), a.embed(m) + b.embed(m));
      EXPECT_EQ((a * b).embed(m), a.embed(m) * b.embed(m));
    }
  }
}

TEST(QCombinatorics, Examples) {
  EXPECT_TRUE(q_factorial(0, CycloNum::root(5, 2)).is_one());
  EXPECT_TRUE(q_factorial(2, CycloNum(-1)).is_zero());
  EXPECT_EQ(q_integer(3, CycloNum(1)), CycloNum(3));
  EXPECT_TRUE(q_binomial(2, 1, CycloNum(-1)).is_zero());
  EXPECT_TRUE(q_binomial(7, 0, CycloNum::root(5, 1)).is_one());
  EXPECT_TRUE(q_binomial(4, 2, CycloNum::root(4, 1)).is_zero());
  EXPECT_EQ(q_binomial(3, 1, CycloNum(1)), CycloNum(3));
  EXPECT_EQ(q_binomial(4, 2, CycloNum(-1)), CycloNum(2));
  EXPECT_THROW(q_binomial(2, 3, CycloNum(1)), DomainError);
}

TEST(QCombinatorics, PascalAgreesWithSubsetEnumeration) {
  for (long n : {1L, 3L, 4L, 5L, 12L}) {
    for (const RootOfUnity& q : {RootOfUnity(n, 1), RootOfUnity(n, n - 1)}) {
      const CycloNum qv = q.value();
      for (long a = 0; a <= 12; ++a) {
        for (long b = 0; b <= a; ++b) {
          ASSERT_EQ(q_binomial(a, b, qv), subset_binomial(a, b, qv)) << a << " " << b;
        }
      }
    }
  }
}

TEST(QCombinatorics, PascalRecurrence) {
  for (long n = 1; n <= 8; ++n) {
    const CycloNum q = CycloNum::root(n, 1);
    const GaussianBinomialTable t(16, q);
    for (long a = 1; a <= 16; ++a) {
      for (long b = 1; b < a; ++b) {
        ASSERT_EQ(t.at(a, b), t.at(a - 1, b - 1) + q.pow(b) * t.at(a - 1, b));
      }
    }
  }
}

TEST(QCombinatorics, VanishingCriterionExamples) {
  EXPECT_TRUE(binomial_vanishes(1, 1, 2));
  EXPECT_FALSE(binomial_vanishes(0, 5, 3));
  EXPECT_FALSE(binomial_vanishes(2, 2, 2));
  EXPECT_THROW(binomial_vanishes(1, 1, 1), DomainError);
}

TEST(QCombinatorics, VandermondeExamples) {
  const CycloNum q = CycloNum::root(7, 3);
  EXPECT_TRUE(q_vandermonde_check(2, 1, 1, q));
  EXPECT_EQ(q_binomial(2, 1, q), CycloNum::one(7) + q);
  EXPECT_FALSE(q_vandermonde_check(5, 2, 2, q, 1));
  EXPECT_TRUE(q_vandermonde_check(5, 2, 2, q));
}
