#include <gtest/gtest.h>

#include "monohopf/blocks.hpp"

using namespace monohopf;

namespace {

const RootOfUnity kMinusOne(2, 1);

FamilyParams params(long n, long d, long mu, RootOfUnity q) { return FamilyParams::make(n, d, q, CycloNum(mu)); }

SparseVec vec(std::initializer_list<std::pair<std::size_t, CycloNum>> terms) {
  SparseVec v;
  for (const auto& [i, c] : terms) v.push_back({i, c});
  return normalize(v);
}

CycloNum half(long sign) { return CycloNum(Rat::parse(sign > 0 ? "1/2" : "-1/2")); }

Matrix power(const Matrix& m, long e) {
  Matrix out = Matrix::identity(m.rows());
  for (long k = 0; k < e; ++k) out = out * m;
  return out;
}

}  // namespace

TEST(CentralIdempotents, Formula) {
  // n = 4, d = 2: c0 = (1 + g^2)/2, c1 = (1 - g^2)/2; g^2 sits at index 4
  const auto ci = central_idempotents(params(4, 2, 1, kMinusOne));
  ASSERT_EQ(ci.idempotents.size(), 2u);
  EXPECT_TRUE(same(ci.idempotents[0], vec({{0, half(1)}, {4, half(1)}})));
  EXPECT_TRUE(same(ci.idempotents[1], vec({{0, half(1)}, {4, half(-1)}})));

  const auto single = central_idempotents(params(3, 3, 0, RootOfUnity(3, 1)));
  ASSERT_EQ(single.idempotents.size(), 1u);
  EXPECT_TRUE(same(single.idempotents[0], vec({{0, CycloNum(1)}})));

  const auto three = central_idempotents(params(6, 2, 1, kMinusOne));
  ASSERT_EQ(three.idempotents.size(), 3u);
  EXPECT_EQ(three.omega.order(), 3);
  SparseVec sum;
  for (const auto& c : three.idempotents) sum = add(sum, c);
  EXPECT_TRUE(same(sum, vec({{0, CycloNum(1)}})));
  const FDBialgebra& a = three.algebra;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const SparseVec p = a.multiply(three.idempotents[i], three.idempotents[j]);
      EXPECT_TRUE(same(p, i == j ? three.idempotents[i] : SparseVec{}));
    }
  }
}

TEST(Blocks, Extraction) {
  const auto p = params(4, 2, 1, kMinusOne);
  const auto ci = central_idempotents(p);
  EXPECT_EQ(block_extract(ci.algebra, ci.idempotents[0], p.d).algebra.dim(), 4u);

  const auto s = params(2, 2, 0, kMinusOne);
  const auto cs = central_idempotents(s);
  const Block whole = block_extract(cs.algebra, cs.idempotents[0], s.d);
  EXPECT_EQ(whole.algebra.dim(), 4u);

  const auto p6 = params(6, 2, 1, kMinusOne);
  const auto c6 = central_idempotents(p6);
  std::size_t total = 0;
  for (const auto& c : c6.idempotents) {
    const Block b = block_extract(c6.algebra, c, p6.d);
    EXPECT_EQ(b.algebra.dim(), 4u);
    total += b.algebra.dim();
  }
  EXPECT_EQ(total, 12u);
}

TEST(Blocks, BAlgebra) {
  // B(2, 1, -1): basis 1, x, g, gx; x^2 = 1
  const FDBialgebra b = b_algebra(2, CycloNum(1), kMinusOne);
  EXPECT_TRUE(same(b.product(1, 1), vec({{0, CycloNum(1)}})));
  for (long d = 2; d <= 6; ++d) {
    for (long lambda : {0, 1, 3}) {
      EXPECT_TRUE(verify_algebra(b_algebra(d, CycloNum(lambda), RootOfUnity(d, 1))).passed) << d << "," << lambda;
    }
  }
  // B(2, 0, -1) is the truncated cycle KZ_2 / J^2
  EXPECT_TRUE(truncated_cycle_witness(2, kMinusOne).second.iso());
  EXPECT_TRUE(truncated_cycle_witness(4, RootOfUnity(4, 3)).second.iso());
}

TEST(Blocks, MatrixRepresentation) {
  // d = 2, lambda = 1, q = -1: g -> diag(1, -1), x -> [[0, 1], [1, 0]]
  const PhiRepresentation r = matrix_rep_phi(2, CycloNum(1), kMinusOne);
  Matrix g(2, 2);
  g(0, 0) = CycloNum(1);
  g(1, 1) = CycloNum(-1);
  Matrix x(2, 2);
  x(0, 1) = CycloNum(1);
  x(1, 0) = CycloNum(1);
  EXPECT_EQ(r.g, g);
  EXPECT_EQ(r.x, x);
  Matrix minus_gx = g * x;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) minus_gx(i, j) = -minus_gx(i, j);
  }
  EXPECT_EQ(x * g, minus_gx);
  EXPECT_EQ(x * x, Matrix::identity(2));
  EXPECT_TRUE(r.report.iso()) << r.report.summary();  // the four words are independent

  // d = 3, lambda = 1, q = zeta_3: x^3 = I
  const PhiRepresentation r3 = matrix_rep_phi(3, CycloNum(1), RootOfUnity(3, 1));
  EXPECT_EQ(power(r3.x, 3), Matrix::identity(3, 3));
  EXPECT_TRUE(r3.report.iso());

  EXPECT_THROW(matrix_rep_phi(2, CycloNum(0), kMinusOne), DomainError);
}

TEST(Blocks, Lambdas) {
  const BlockReport r = wedderburn_report(params(4, 2, 1, kMinusOne));
  ASSERT_EQ(r.blocks.size(), 2u);
  EXPECT_TRUE(r.blocks[0].lambda.is_zero());
  EXPECT_EQ(r.blocks[0].type, BlockType::truncated_cycle);
  EXPECT_EQ(r.blocks[1].lambda, CycloNum(2));
  EXPECT_EQ(r.blocks[1].type, BlockType::matrix_algebra);

  const BlockReport z = wedderburn_report(params(6, 2, 0, kMinusOne));
  for (const auto& b : z.blocks) EXPECT_TRUE(b.lambda.is_zero());
}

TEST(Blocks, WedderburnReports) {
  const BlockReport r = wedderburn_report(params(4, 2, 1, kMinusOne));
  EXPECT_EQ(r.types(), "TruncatedCycle(2), MatrixAlgebra(2)");
  EXPECT_TRUE(r.all_witnesses_verified());
  EXPECT_EQ(r.total_dimension(), 8u);
  EXPECT_EQ(r.center_dimension, 2u);
  ASSERT_TRUE(r.blocks[0].psi_report);
  EXPECT_TRUE(r.blocks[0].psi_report->iso());
  ASSERT_TRUE(r.blocks[1].phi);
  EXPECT_TRUE(r.blocks[1].phi->report.iso());
  const Quiver q = gabriel_quiver(r);
  EXPECT_EQ(q.vertex_count(), 3u);
  EXPECT_EQ(q.arrows().size(), 2u);

  const BlockReport s = wedderburn_report(params(4, 2, 0, kMinusOne));
  EXPECT_EQ(s.types(), "TruncatedCycle(2), TruncatedCycle(2)");
  const Quiver qs = gabriel_quiver(s);
  EXPECT_EQ(qs.vertex_count(), 4u);
  EXPECT_EQ(qs.arrows().size(), 4u);

  const BlockReport t = wedderburn_report(params(3, 3, 7, RootOfUnity(3, 1)));
  EXPECT_EQ(t.types(), "TruncatedCycle(3)");
  EXPECT_TRUE(t.all_witnesses_verified());

  const BlockReport u = wedderburn_report(params(6, 3, 1, RootOfUnity(3, 2)));
  EXPECT_EQ(u.types(), "TruncatedCycle(3), MatrixAlgebra(3)");
  EXPECT_TRUE(u.all_witnesses_verified());
  EXPECT_EQ(u.total_dimension(), 18u);
}

TEST(Blocks, MatrixAlgebraStructure) {
  const FDBialgebra m = matrix_algebra(3);
  EXPECT_EQ(m.dim(), 9u);
  EXPECT_TRUE(verify_algebra(m).passed);
  EXPECT_EQ(center(m).size(), 1u);
}
