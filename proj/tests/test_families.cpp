#include <gtest/gtest.h>

#include "monohopf/hopf_families.hpp"
#include "monohopf/structure.hpp"
#include "monohopf/verify.hpp"

using namespace monohopf;

namespace {

const RootOfUnity kMinusOne(2, 1);
const RootOfUnity kI(4, 1);

FamilyParams params(long n, long d, long mu, RootOfUnity q) { return FamilyParams::make(n, d, q, CycloNum(mu)); }

SparseVec vec(std::initializer_list<std::pair<std::size_t, CycloNum>> terms) {
  SparseVec v;
  for (const auto& [i, c] : terms) v.push_back({i, c});
  return normalize(v);
}

}  // namespace

TEST(FamilyParams, Validation) {
  EXPECT_THROW(FamilyParams::make(6, 4, RootOfUnity(4, 1), CycloNum(0)), DomainError);  // 4 does not divide 6
  EXPECT_THROW(FamilyParams::make(4, 3, kMinusOne, CycloNum(0)), DomainError);          // q has order 2
  EXPECT_THROW(FamilyParams::make(4, RootOfUnity(1, 0), CycloNum(0)), DomainError);     // d = 1
  const auto p = FamilyParams::make(3, RootOfUnity(3, 1), CycloNum(5));
  EXPECT_TRUE(p.mu.is_zero());  // d = n forces mu = 0
  EXPECT_EQ(p.mu_given, CycloNum(5));
}

TEST(TruncatedKZ, Products) {
  // n = 2, q = -1: a0 * a0 = (2 choose 1)_{-1} p0^2 = 0
  const TruncatedKZ z2(2, kMinusOne, 3);
  EXPECT_TRUE(z2.product(0, 1, 0, 1).empty());
  // vertices multiply as Z_n
  EXPECT_TRUE(same(z2.product(1, 0, 1, 0), vec({{z2.index(0, 0), CycloNum(1)}})));

  // n = 4, q = i: a1 * a2 = q^2 (1 + q) p3^2
  const TruncatedKZ z4(4, kI, 3);
  const CycloNum i = kI.value();
  EXPECT_TRUE(same(z4.product(1, 1, 2, 1), vec({{z4.index(3, 2), i * i * (CycloNum(1) + i)}})));
  EXPECT_THROW(z4.product(0, 2, 0, 2), OutOfWindow);

  EXPECT_TRUE(z4.verify_window().passed);
  EXPECT_FALSE(z4.verify_window(PathAntipode::printed).passed);
}

TEST(PathCoalgebraFamily, WrapProduct) {
  // C_2(4, 1, -1), basis p_i^l at 2i + l: p0^1 p0^1 = e0 - e2
  const FDBialgebra c = c_d_n_mu_q(params(4, 2, 1, kMinusOne));
  EXPECT_TRUE(same(c.product(1, 1), vec({{0, CycloNum(1)}, {4, CycloNum(-1)}})));
  EXPECT_EQ(c.labels()[1], "p0^1");
  // S(e0) = e0
  EXPECT_TRUE(same(c.antipode(0), vec({{0, CycloNum(1)}})));
}

TEST(PathCoalgebraFamily, MuZeroIsTheGradedFamily) {
  EXPECT_TRUE(same_structure(c_d_n_mu_q(params(6, 3, 0, RootOfUnity(3, 1))), c_d_n_q(6, RootOfUnity(3, 1))));
}

TEST(PathCoalgebraFamily, AntipodeFormulas) {
  for (const auto& p : {params(4, 2, 1, kMinusOne), params(6, 3, 1, RootOfUnity(3, 2)), params(4, 4, 0, kI)}) {
    FDBialgebra standard = c_d_n_mu_q(p);
    EXPECT_TRUE(verify_all(standard).all_passed()) << p.str();
    FDBialgebra printed = c_d_n_mu_q(p, PathAntipode::printed);
    EXPECT_FALSE(verify_all(printed).antipode.passed) << p.str();
  }
}

TEST(SkewFamily, Relations) {
  // Sweedler: dim 4, every suite passes
  FDBialgebra s = a_n_d_mu_q(params(2, 2, 0, kMinusOne));
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_TRUE(verify_all(s).all_passed());

  // A(4,2,1,-1): basis g^i x^j at 2i + j; g = 2, x = 1, gx = 3
  const FDBialgebra a = a_n_d_mu_q(params(4, 2, 1, kMinusOne));
  EXPECT_TRUE(same(a.product(1, 2), vec({{3, CycloNum(-1)}})));  // xg = -gx
  EXPECT_TRUE(same(a.product(2, 1), vec({{3, CycloNum(1)}})));
  EXPECT_TRUE(same(a.product(1, 1), vec({{0, CycloNum(1)}, {4, CycloNum(-1)}})));  // x^2 = 1 - g^2
  EXPECT_EQ(a.labels()[3], "g*x");
}

TEST(SkewFamily, AntipodeVariants) {
  const auto p = params(4, 2, 1, kMinusOne);
  // -x g^-1 = -q^-1 g^-1 x, wrong unless q = 1
  FDBialgebra a = a_n_d_mu_q(p, XAntipode::minus_x_ginv);
  EXPECT_FALSE(verify_all(a).antipode.passed);
  FDBialgebra b = a_n_d_mu_q(p, XAntipode::plus_ginv_x);
  EXPECT_FALSE(verify_all(b).antipode.passed);
}

TEST(FamilyIso, FactorialColumns) {
  // (2,2,0,-1): g x -> 1!_{-1} p1^1, g^i -> e_i
  const FamilyIso f = family_iso(params(2, 2, 0, kMinusOne));
  EXPECT_TRUE(f.report.iso()) << f.report.summary();
  EXPECT_TRUE(same(f.witness.columns[3], vec({{3, CycloNum(1)}})));
  EXPECT_TRUE(same(f.witness.columns[2], vec({{2, CycloNum(1)}})));

  // j!_q appears in column g^i x^j
  const auto p = params(6, 3, 1, RootOfUnity(3, 1));
  const FamilyIso g = family_iso(p);
  EXPECT_TRUE(g.report.iso()) << g.report.summary();
  const CycloNum q = p.qv();
  EXPECT_TRUE(same(g.witness.columns[3 * 1 + 2], vec({{5, CycloNum(1) + q}})));
}

TEST(FamilyIso, SmallGrid) {
  for (long n = 2; n <= 6; ++n) {
    for (long d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      for (const RootOfUnity& q : primitive_roots(d)) {
        for (long mu : {0, 1}) {
          const auto p = FamilyParams::make(n, q, CycloNum(mu));
          EXPECT_TRUE(family_iso(p).report.iso()) << p.str();
        }
      }
    }
  }
}

TEST(Existence, DividesCriterion) {
  EXPECT_TRUE(admits_hopf(6, 3).admits);
  EXPECT_FALSE(admits_hopf(6, 4).admits);
  EXPECT_THROW(admits_hopf(6, 1), DomainError);

  // n = 4, d = 2: at d0 = 2 the binomials vanish, at d0 = 4 (2 choose 1)_i = 1 + i does not
  const ExistenceReport r = admits_hopf(4, 2);
  EXPECT_TRUE(r.witness_consistent());
  bool saw2 = false;
  bool saw4 = false;
  for (const auto& w : r.witnesses) {
    if (w.d0 == 2) {
      saw2 = true;
      EXPECT_TRUE(w.pattern_holds);
    }
    if (w.d0 == 4) {
      saw4 = true;
      EXPECT_FALSE(w.pattern_holds);
      ASSERT_TRUE(w.counterexample);
      EXPECT_EQ(*w.counterexample, std::make_pair(1L, 1L));
    }
  }
  EXPECT_TRUE(saw2 && saw4);
  for (long n = 1; n <= 12; ++n) {
    for (long d = 2; d <= 12; ++d) EXPECT_TRUE(admits_hopf(n, d).witness_consistent()) << n << "," << d;
  }
}

TEST(Classification, Examples) {
  const auto a = classify_pair(params(4, 2, 1, kMinusOne), params(4, 2, 4, kMinusOne));
  ASSERT_EQ(a.kind, IsoKind::isomorphic);
  EXPECT_EQ(*a.delta, CycloNum(2));
  ASSERT_TRUE(a.witness_report);
  EXPECT_TRUE(a.witness_report->iso());

  const auto b = classify_pair(params(4, 2, 0, kMinusOne), params(4, 2, 1, kMinusOne));
  EXPECT_EQ(b.kind, IsoKind::not_isomorphic);

  const auto c = classify_pair(params(3, 3, 5, RootOfUnity(3, 1)), params(3, 3, 0, RootOfUnity(3, 1)));
  EXPECT_EQ(c.kind, IsoKind::isomorphic);

  const auto d = classify_pair(params(4, 4, 0, kI), params(4, 4, 0, RootOfUnity(4, 3)));
  EXPECT_EQ(d.kind, IsoKind::not_isomorphic);
  EXPECT_NE(d.reason.find("q differs"), std::string::npos);

  const auto e = classify_pair(params(4, 2, 0, kMinusOne), params(6, 2, 0, kMinusOne));
  EXPECT_EQ(e.kind, IsoKind::not_isomorphic);
}

TEST(Classification, RootsInsideTheConductorBound) {
  // delta = sqrt 2 lives in Q(zeta_8)
  const auto a = classify_pair(params(4, 2, 1, kMinusOne), params(4, 2, 2, kMinusOne));
  ASSERT_EQ(a.kind, IsoKind::isomorphic);
  EXPECT_EQ(a.delta->pow(2), CycloNum(2));
  EXPECT_TRUE(a.witness_report->iso());

  // delta = i
  const auto b = classify_pair(params(4, 2, 1, kMinusOne), params(4, 2, -1, kMinusOne));
  ASSERT_EQ(b.kind, IsoKind::isomorphic);
  EXPECT_EQ(b.delta->pow(2), CycloNum(-1));

  // sqrt 13 needs conductor 13
  const auto c = classify_pair(params(4, 2, 1, kMinusOne), params(4, 2, 13, kMinusOne), 12);
  EXPECT_EQ(c.kind, IsoKind::isomorphic_over_extension);
  const auto c2 = classify_pair(params(4, 2, 1, kMinusOne), params(4, 2, 13, kMinusOne), 13);
  EXPECT_EQ(c2.kind, IsoKind::isomorphic);

  // the real cube root of 2 is in no cyclotomic field
  const auto d = classify_pair(params(9, 3, 1, RootOfUnity(3, 1)), params(9, 3, 2, RootOfUnity(3, 1)));
  EXPECT_EQ(d.kind, IsoKind::isomorphic_over_extension);
  const auto e = classify_pair(params(9, 3, 1, RootOfUnity(3, 1)), params(9, 3, 8, RootOfUnity(3, 1)));
  ASSERT_EQ(e.kind, IsoKind::isomorphic);
  EXPECT_EQ(*e.delta, CycloNum(2));
}

TEST(Classification, SquareRootsOfSquarefreeIntegers) {
  for (long D : {-1, 2, -2, 3, -3, 5, 6, -7, 10, -15}) {
    const CycloNum s = detail::sqrt_squarefree(D);
    EXPECT_EQ(s * s, CycloNum(D)) << D;
    EXPECT_EQ(s.conductor(), detail::sqrt_conductor(D)) << D;
  }
}
