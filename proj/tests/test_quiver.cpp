#include <gtest/gtest.h>

#include "monohopf/quiver.hpp"

using namespace monohopf;

namespace {

MonomialPresentation linear_a2() {
  // 0 -> 1 with I = 0; there are no paths of length 2 to forbid
  return MonomialPresentation(Quiver(2, {{0, 1}}), {}, 2);
}

}  // namespace

TEST(Quiver, CycleQuivers) {
  const Quiver q1 = cycle_quiver(1);
  EXPECT_EQ(q1.vertex_count(), 1u);
  ASSERT_EQ(q1.arrows().size(), 1u);
  EXPECT_EQ(q1.arrow(0), (Arrow{0, 0}));

  const Quiver q4 = cycle_quiver(4);
  EXPECT_EQ(q4.vertex_count(), 4u);
  ASSERT_EQ(q4.arrows().size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(q4.arrow(i), (Arrow{i, (i + 1) % 4}));

  const Quiver q2 = cycle_quiver(2);
  EXPECT_EQ(q2.arrow(0), (Arrow{0, 1}));
  EXPECT_EQ(q2.arrow(1), (Arrow{1, 0}));
}

TEST(Quiver, RejectsBadEndpoints) {
  EXPECT_THROW(Quiver(2, {{0, 2}}), DomainError);
  EXPECT_THROW(Quiver(0, {}), DomainError);
}

TEST(Quiver, Comultiplication) {
  const Quiver z2 = cycle_quiver(2);
  const auto de = path_comultiply(z2, trivial_path(1));
  ASSERT_EQ(de.size(), 1u);
  EXPECT_EQ(de[0].first, trivial_path(1));
  EXPECT_EQ(de[0].second, trivial_path(1));

  // Delta(a0) = a0 (x) e0 + e1 (x) a0
  const auto da = path_comultiply(z2, cycle_path(2, 0, 1));
  ASSERT_EQ(da.size(), 2u);
  EXPECT_EQ(da[0], std::make_pair(cycle_path(2, 0, 1), trivial_path(0)));
  EXPECT_EQ(da[1], std::make_pair(trivial_path(1), cycle_path(2, 0, 1)));

  // Delta(p0^2) in Z4 = p0^2 (x) e0 + a1 (x) a0 + e2 (x) p0^2
  const Quiver z4 = cycle_quiver(4);
  const auto dp = path_comultiply(z4, cycle_path(4, 0, 2));
  ASSERT_EQ(dp.size(), 3u);
  EXPECT_EQ(dp[0], std::make_pair(cycle_path(4, 0, 2), trivial_path(0)));
  EXPECT_EQ(dp[1], std::make_pair(cycle_path(4, 1, 1), cycle_path(4, 0, 1)));
  EXPECT_EQ(dp[2], std::make_pair(trivial_path(2), cycle_path(4, 0, 2)));

  EXPECT_EQ(path_counit(trivial_path(3)), Rat(1));
  EXPECT_EQ(path_counit(cycle_path(4, 0, 1)), Rat(0));
}

TEST(Quiver, PathLabelsReadRightToLeft) {
  EXPECT_EQ(trivial_path(2).label(), "e2");
  EXPECT_EQ(cycle_path(4, 0, 2).label(), "a1*a0");
}

TEST(MonomialPresentation, Basis) {
  EXPECT_EQ(monomial_basis(MonomialPresentation::truncated(cycle_quiver(2), 2)).size(), 4u);
  EXPECT_EQ(monomial_basis(MonomialPresentation::truncated(cycle_quiver(3), 2)).size(), 6u);
  EXPECT_EQ(monomial_basis(MonomialPresentation::truncated(cycle_quiver(3), 3)).size(), 9u);

  const MonomialPresentation point(Quiver(1, {}), {}, 2);
  const auto b = monomial_basis(point);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], trivial_path(0));
}

TEST(MonomialPresentation, ValidatesAdmissibility) {
  // J^N must lie in I: the 2-cycle with nothing forbidden is infinite-dimensional
  EXPECT_THROW(MonomialPresentation(cycle_quiver(2), {}, 2), DomainError);
  // forbidden paths of length 1 would kill arrows (I must sit in J^2)
  EXPECT_THROW(MonomialPresentation(cycle_quiver(1), {Path{0, {0}}}, 2), DomainError);
}

TEST(MonomialPresentation, SocleDimensions) {
  const auto z2 = socle_dimensions(MonomialPresentation::truncated(cycle_quiver(2), 2));
  EXPECT_EQ(z2.left, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(z2.right, (std::vector<std::size_t>{1, 1}));

  const auto a2 = socle_dimensions(linear_a2());
  EXPECT_EQ(a2.left, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(a2.right, (std::vector<std::size_t>{1, 1}));

  const auto pt = socle_dimensions(MonomialPresentation(Quiver(1, {}), {}, 2));
  EXPECT_EQ(pt.left, (std::vector<std::size_t>{1}));
  EXPECT_EQ(pt.right, (std::vector<std::size_t>{1}));
}

TEST(MonomialPresentation, FrobeniusClassifier) {
  const auto z3 = frobenius_classify(MonomialPresentation::truncated(cycle_quiver(3), 2));
  ASSERT_EQ(z3.size(), 1u);
  EXPECT_EQ(std::get<TruncatedCycle>(z3[0].verdict), (TruncatedCycle{3, 2}));

  const auto a2 = frobenius_classify(linear_a2());
  ASSERT_EQ(a2.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<NotFrobenius>(a2[0].verdict));

  const auto pt = frobenius_classify(MonomialPresentation(Quiver(1, {}), {}, 2));
  ASSERT_EQ(pt.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<PointAlgebra>(pt[0].verdict));
}

TEST(MonomialPresentation, ComponentsAreClassifiedSeparately) {
  // a 2-cycle mod J^2 next to an isolated vertex
  const Quiver q(3, {{0, 1}, {1, 0}});
  const MonomialPresentation p(q, {Path{0, {0, 1}}, Path{1, {1, 0}}}, 2);
  const auto v = frobenius_classify(p);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(std::get<TruncatedCycle>(v[0].verdict), (TruncatedCycle{2, 2}));
  EXPECT_TRUE(std::holds_alternative<PointAlgebra>(v[1].verdict));
}

TEST(MonomialPresentation, NonuniformRelationsAreNotFrobenius) {
  // loop with x^2 = 0 at vertex 0, and an arrow out to vertex 1
  const Quiver q(2, {{0, 0}, {0, 1}});
  const MonomialPresentation p(q, {Path{0, {0, 0}}, Path{0, {0, 1}}}, 2);
  const auto v = frobenius_classify(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<NotFrobenius>(v[0].verdict));
}

TEST(Cofrobenius, BasisSizes) {
  EXPECT_EQ(cofrobenius_classify(2, 2).basis.size(), 4u);
  EXPECT_EQ(cofrobenius_classify(3, 3).basis.size(), 9u);
  const auto c = cofrobenius_classify(2, 1);
  ASSERT_EQ(c.basis.size(), 2u);
  EXPECT_EQ(c.basis[0], trivial_path(0));
  EXPECT_EQ(c.basis[1], (Path{0, {0}}));
  EXPECT_THROW(cofrobenius_classify(1, 3), DomainError);
}
