#include <gtest/gtest.h>

#include "monohopf/group_data.hpp"
#include "monohopf/hopf_families.hpp"
#include "monohopf/structure.hpp"
#include "monohopf/verify.hpp"

using namespace monohopf;

namespace {

const RootOfUnity kMinusOne(2, 1);

FDBialgebra cyclic_group_algebra(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return group_algebra(t, 0);
}

FDBialgebra sweedler() { return a_n_d_mu_q(FamilyParams::make(2, kMinusOne, CycloNum(0))); }

GroupDatum z4_datum(std::size_t g, long chi_exp, long mu) {
  const FiniteGroup G = FiniteGroup::cyclic(4);
  return GroupDatum{G, g, abelian_character(G, {RootOfUnity(4, chi_exp)}), CycloNum(mu)};
}

std::size_t dim_of(const std::vector<SparseVec>& basis) { return basis.size(); }

}  // namespace

TEST(Verifier, GroupAlgebraPasses) {
  FDBialgebra a = cyclic_group_algebra(4);
  const auto s = verify_all(a);
  EXPECT_TRUE(s.all_passed()) << s.antipode.summary();
  EXPECT_TRUE(a.verified().algebra && a.verified().antipode);
}

TEST(Verifier, SweedlerPasses) {
  FDBialgebra a = sweedler();
  EXPECT_EQ(a.dim(), 4u);
  EXPECT_TRUE(verify_all(a).all_passed());
}

TEST(Verifier, CorruptedConstantIsCaughtWithWitness) {
  FDBialgebra a = sweedler();
  // x * x = 0 in Sweedler; claim x * x = 1 instead
  a.set_product(1, 1, basis_vector(0, a.conductor()));
  const auto s = verify_all(a);
  EXPECT_FALSE(s.all_passed());
  const AxiomReport& r = s.algebra.passed ? s.bialgebra : s.algebra;
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.axiom.empty());
  EXPECT_FALSE(r.witness.empty());
  EXPECT_NE(r.summary().find("FAIL"), std::string::npos);
  EXPECT_FALSE(a.verified().bialgebra && a.verified().algebra);
}

TEST(Verifier, MissingStructureIsNotApplicable) {
  FDBialgebra a = sweedler().algebra_part();
  const auto s = verify_all(a);
  EXPECT_TRUE(s.algebra.passed && s.algebra.applicable);
  EXPECT_FALSE(s.coalgebra.applicable);
  EXPECT_FALSE(s.all_passed());
}

TEST(Verifier, PathCoalgebraAntipode) {
  const auto p = FamilyParams::make(2, kMinusOne, CycloNum(0));
  FDBialgebra standard = c_d_n_mu_q(p);
  EXPECT_TRUE(verify_all(standard).all_passed());
}

TEST(Verifier, SkewExtensionAntipodeSign) {
  const GroupDatum a = z4_datum(2, 1, 0);
  FDBialgebra good = build_A(a, XAntipode::minus_ginv_x);
  EXPECT_TRUE(verify_all(good).all_passed());

  // Delta(x) = x (x) 1 + g (x) x gives S(x) 1 + S(g) x = -g^-1 x + g^-1 x = 0
  // only with the minus sign
  FDBialgebra bad = build_A(a, XAntipode::plus_ginv_x);
  const auto s = verify_all(bad);
  EXPECT_TRUE(s.algebra.passed && s.coalgebra.passed && s.bialgebra.passed);
  EXPECT_FALSE(s.antipode.passed);
  EXPECT_EQ(s.antipode.witness_labels, "x");
}

TEST(Linalg, Nullspace) {
  EXPECT_TRUE(nullspace(Matrix::identity(3)).empty());
  EXPECT_EQ(nullspace(Matrix(3, 3)).size(), 3u);
  Matrix m(2, 3);
  m(0, 0) = CycloNum(1);
  m(0, 1) = CycloNum(1);
  m(1, 2) = CycloNum(2);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0][0] + ns[0][1], CycloNum(0));
  EXPECT_TRUE(ns[0][2].is_zero());
}

TEST(Structure, SkewPrimitivesOfPathCoalgebra) {
  const FDBialgebra c = c_d_n_q(4, kMinusOne);  // basis p_i^l at i*2 + l
  // P_{e0,e1} = span{a0, e0 - e1}
  const auto p01 = skew_primitives(c, 0, 2);
  EXPECT_EQ(dim_of(p01), 2u);
  EXPECT_EQ(rank_of(p01, c.dim()), 2u);
  auto with_arrow = p01;
  with_arrow.push_back(basis_vector(1, c.conductor()));
  with_arrow.push_back(sub(basis_vector(0, 1), basis_vector(2, 1)));
  EXPECT_EQ(rank_of(with_arrow, c.dim()), 2u);

  // no arrow from e0 to e2: only e0 - e2
  EXPECT_EQ(dim_of(skew_primitives(c, 0, 4)), 1u);
}

TEST(Structure, PrimitivesOfGroupAlgebraVanish) {
  const FDBialgebra k = cyclic_group_algebra(3);
  EXPECT_EQ(dim_of(skew_primitives(k, 0, 0)), 0u);
}

TEST(Structure, GroupLikes) {
  const FDBialgebra c = c_d_n_q(4, kMinusOne);
  const auto gl = group_likes(c, {0, 2, 4, 6});
  EXPECT_FALSE(gl.problem);
  EXPECT_EQ(gl.elements.size(), 4u);
  ASSERT_EQ(gl.table.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(gl.table[i][j], (i + j) % 4);
  }

  // candidates that are not group-like are dropped
  const auto some = group_likes(c, {0, 1, 2});
  EXPECT_EQ(some.elements, (std::vector<std::size_t>{0, 2}));

  EXPECT_EQ(group_likes(cyclic_group_algebra(3), {0, 1, 2}).elements.size(), 3u);

  const FDBialgebra a = build_A(GroupDatum{FiniteGroup::abelian({2, 2}), 2,
                                           abelian_character(FiniteGroup::abelian({2, 2}), {kMinusOne, RootOfUnity(1, 0)}),
                                           CycloNum(0)});
  const auto gla = group_likes(a, grouplike_candidates(a));
  EXPECT_EQ(gla.elements.size(), 4u);
  EXPECT_EQ(gla.table, FiniteGroup::abelian({2, 2}).table());
}

TEST(Structure, LinkQuivers) {
  const FDBialgebra c = c_d_n_q(4, kMinusOne);
  const LinkQuiver lq = link_quiver(c, {0, 2, 4, 6});
  EXPECT_EQ(lq.arrow_count(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(lq.arrows(i, (i + 1) % 4), 1u);
  EXPECT_EQ(coalgebra_components(lq).size(), 1u);

  // G = Z4, g = 2, chi(1) = i: arrows h -> h + 2 only
  const FDBialgebra a = build_A(z4_datum(2, 1, 0));
  const auto gl = group_likes(a, grouplike_candidates(a));
  const LinkQuiver la = link_quiver(a, gl.elements);
  EXPECT_EQ(la.arrow_count(), 4u);
  const auto comps = coalgebra_components(la);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].size(), 2u);
  EXPECT_EQ(comps[1].size(), 2u);

  const FDBialgebra k = cyclic_group_algebra(5);
  const LinkQuiver lk = link_quiver(k, {0, 1, 2, 3, 4});
  EXPECT_EQ(lk.arrow_count(), 0u);
  EXPECT_EQ(coalgebra_components(lk).size(), 5u);
}

TEST(Structure, Center) {
  // span{1, g^2}
  const FDBialgebra a = a_n_d_mu_q(FamilyParams::make(4, kMinusOne, CycloNum(1)));
  const auto z = center(a);
  ASSERT_EQ(z.size(), 2u);
  std::vector<SparseVec> with = z;
  with.push_back(basis_vector(0, 1));
  with.push_back(basis_vector(4, 1));
  EXPECT_EQ(rank_of(with, a.dim()), 2u);

  EXPECT_EQ(center(cyclic_group_algebra(4)).size(), 4u);

  const std::vector<std::pair<long, long>> nd{{6, 2}, {6, 3}, {8, 4}};
  for (auto [n, d] : nd) {
    const FDBialgebra b = a_n_d_mu_q(FamilyParams::make(n, RootOfUnity(d, 1), CycloNum(1)));
    EXPECT_EQ(center(b).size(), static_cast<std::size_t>(n / d)) << n << "," << d;
    EXPECT_EQ(center(b, {static_cast<std::size_t>(d), 1}).size(), static_cast<std::size_t>(n / d));
  }
}

TEST(Structure, Dual) {
  const FDBialgebra c = c_d_n_mu_q(FamilyParams::make(2, kMinusOne, CycloNum(0)));
  EXPECT_TRUE(same_structure(dual(dual(c)), c));
  FDBialgebra dc = dual(c);
  EXPECT_TRUE(verify_all(dc).all_passed());

  // dual of K[Z_n]: the function algebra, delta_i delta_j = [i = j] delta_i
  const FDBialgebra f = dual(cyclic_group_algebra(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_TRUE(same(f.product(i, j), i == j ? basis_vector(i, 1) : SparseVec{}));
    }
  }
}

TEST(Structure, DualOfPathCoalgebraIsTruncatedPathAlgebra) {
  // basis of C_2(2): e0, a0, e1, a1; the dual multiplies as KZ_2^a / J^2
  const FDBialgebra c = c_d_n_q(2, kMinusOne);
  const FDBialgebra d = dual(c);
  const FDBialgebra kq = monomial_algebra(MonomialPresentation::truncated(cycle_quiver(2), 2));
  ASSERT_EQ(kq.dim(), 4u);
  // e0, e1 idempotent, a0 a1 = 0, and each arrow is fixed by its end vertices
  EXPECT_TRUE(same(d.product(0, 0), basis_vector(0, 1)));
  EXPECT_TRUE(same(d.product(2, 2), basis_vector(2, 1)));
  EXPECT_TRUE(same(d.product(1, 3), {}));
  EXPECT_TRUE(same(d.product(3, 1), {}));
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) nonzero += d.product(i, j).empty() ? 0 : 1;
  }
  std::size_t nonzero_kq = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) nonzero_kq += kq.product(i, j).empty() ? 0 : 1;
  }
  EXPECT_EQ(nonzero, nonzero_kq);
  EXPECT_EQ(center(d).size(), center(kq).size());
}

TEST(Structure, TensorProducts) {
  FDBialgebra t = hopf_tensor(sweedler(), cyclic_group_algebra(2));
  EXPECT_EQ(t.dim(), 8u);
  EXPECT_TRUE(verify_all(t).all_passed());
  const auto gl = group_likes(t, grouplike_candidates(t));
  EXPECT_EQ(gl.elements.size(), 4u);
  // |G| disjoint copies of the link quiver of the Sweedler algebra
  const LinkQuiver lq = link_quiver(t, gl.elements);
  EXPECT_EQ(coalgebra_components(lq).size(), 2u);
  EXPECT_EQ(lq.arrow_count(), 4u);

  const FDBialgebra s = sweedler();
  EXPECT_TRUE(same_structure(hopf_tensor(s, ground_field()), s));
}

TEST(Structure, FrobeniusOracle) {
  const FDBialgebra kz2 = monomial_algebra(MonomialPresentation::truncated(cycle_quiver(2), 2));
  EXPECT_EQ(frobenius_oracle(kz2, 48, 0).verdict, OracleVerdict::frobenius);
  EXPECT_EQ(frobenius_oracle(ground_field(), 48, 0).verdict, OracleVerdict::frobenius);

  const FDBialgebra a2 = monomial_algebra(MonomialPresentation(Quiver(2, {{0, 1}}), {}, 2));
  const auto r = frobenius_oracle(a2, 48, 0);
  EXPECT_EQ(r.verdict, OracleVerdict::inconclusive);
  EXPECT_EQ(r.trials_used, 48);

  // same seed, same answer
  EXPECT_EQ(frobenius_oracle(kz2, 48, 7).functional, frobenius_oracle(kz2, 48, 7).functional);
}

TEST(Morphism, SweedlerOntoPathCoalgebra) {
  const auto p = FamilyParams::make(2, kMinusOne, CycloNum(0));
  const FDBialgebra a = a_n_d_mu_q(p);
  const FDBialgebra c = c_d_n_mu_q(p);
  // g -> e1, x -> a0
  IsoWitness w = extend_from_generators(a, c, {{2, basis_vector(2, 2)}, {1, basis_vector(1, 2)}});
  const MapReport r = check_map(w);
  EXPECT_TRUE(r.iso()) << r.summary();
  EXPECT_TRUE(w.checked.bijective && w.checked.coalgebra_map && w.checked.antipode_map);

  IsoWitness id = extend_from_generators(a, a, {{2, basis_vector(2, 2)}, {1, basis_vector(1, 2)}});
  EXPECT_TRUE(check_map(id).iso());
  for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_TRUE(same(id.columns[k], basis_vector(k, 2)));
}

TEST(Morphism, WrongScalingBreaksTheRelation) {
  // x -> 2 a0 sends x^2 = 1 - g^2 to 4(e0 - e2), not e0 - e2
  const auto p = FamilyParams::make(4, kMinusOne, CycloNum(1));
  const FDBialgebra a = a_n_d_mu_q(p);
  const FDBialgebra c = c_d_n_mu_q(p);
  const std::map<std::size_t, SparseVec> images{{2, basis_vector(2, 2)}, {1, {{1, CycloNum(2)}}}};
  bool rejected = false;
  try {
    IsoWitness w = extend_from_generators(a, c, images);
    rejected = !check_map(w).iso();
  } catch (const DomainError&) {
    rejected = true;
  }
  EXPECT_TRUE(rejected);

  // with mu divided by 2^2 on the target the same images are a Hopf isomorphism
  const FDBialgebra c4 = c_d_n_mu_q(FamilyParams::make(4, kMinusOne, CycloNum(Rat::parse("1/4"))));
  IsoWitness w4 = extend_from_generators(a, c4, images);
  EXPECT_TRUE(check_map(w4).iso());
}
