#pragma once

// Block decomposition of A(n,d,mu,q): central idempotents, the blocks c_i A,
// the algebras B(d,lambda,q), the matrix representation phi, the block
// isomorphisms theta_i and the resulting Gabriel quiver.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/hopf_families.hpp"
#include "monohopf/structure.hpp"

namespace monohopf {

struct CentralIdempotents {
  long t = 0;             // n/d - 1
  RootOfUnity omega;      // zeta_(n/d)
  RootOfUnity omega0;     // zeta_n, omega0^d = omega
  FDBialgebra algebra;    // A(n,d,mu,q) over conductor lcm(conductor, n)
  std::vector<SparseVec> idempotents;
};

/// c_i = (d/n) sum_j (omega^i g^d)^j, verified orthogonal, idempotent,
/// central and summing to 1; a failed check throws.
inline CentralIdempotents central_idempotents(const FamilyParams& p) {
  CentralIdempotents out;
  const long m = std::lcm(p.conductor(), p.n);
  out.t = p.n / p.d - 1;
  out.omega = RootOfUnity(p.n / p.d, 1);
  out.omega0 = RootOfUnity(p.n, 1);
  out.algebra = a_n_d_mu_q(p).embedded(m);
  const FDBialgebra& a = out.algebra;
  const Rat scale_factor(p.d, p.n);
  for (long i = 0; i <= out.t; ++i) {
    SparseVec c;
    for (long j = 0; j <= out.t; ++j) {
      const CycloNum coef = out.omega.pow(i * j).value_in(m) * CycloNum(scale_factor);
      c.push_back({static_cast<std::size_t>(((p.d * j) % p.n) * p.d), coef});
    }
    out.idempotents.push_back(normalize(std::move(c)));
  }

  SparseVec total;
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    const SparseVec& ci = out.idempotents[i];
    total = add(total, ci);
    for (std::size_t j = 0; j < out.idempotents.size(); ++j) {
      const SparseVec prod = a.multiply(ci, out.idempotents[j]);
      const SparseVec expect = i == j ? ci : SparseVec{};
      if (!same(prod, expect)) {
        throw DomainError("c" + std::to_string(i) + " * c" + std::to_string(j) + " = " + a.format(prod));
      }
    }
    for (std::size_t b = 0; b < a.dim(); ++b) {
      if (!same(a.multiply(ci, a.basis(b)), a.multiply(a.basis(b), ci))) {
        throw DomainError("c" + std::to_string(i) + " does not commute with " + a.labels()[b]);
      }
    }
  }
  if (!same(total, a.unit())) throw DomainError("idempotents do not sum to 1: " + a.format(total));
  return out;
}

struct Block {
  FDBialgebra algebra;            // algebra part only, unit = c
  std::vector<SparseVec> basis;   // c g^k x^j in the parent, index k*d + j
};

/// cA on the basis {c g^k x^j : k, j < d} of the parent A(n,d,mu,q).
inline Block block_extract(const FDBialgebra& a, const SparseVec& c, long d) {
  Block out;
  std::vector<std::string> labels;
  for (long k = 0; k < d; ++k) {
    for (long j = 0; j < d; ++j) {
      out.basis.push_back(a.multiply(c, a.basis(static_cast<std::size_t>(k * d + j))));
      labels.push_back("c*" + detail::gx_label(k, j));
    }
  }
  const Coordinates coords(out.basis, a.dim(), a.conductor());
  const std::size_t n = out.basis.size();
  out.algebra = FDBialgebra(n, a.conductor(), std::move(labels));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      auto xy = coords.of(a.multiply(out.basis[u], out.basis[v]));
      if (!xy) throw DomainError("block is not closed under multiplication");
      out.algebra.set_product(u, v, *xy);
    }
  }
  auto unit = coords.of(c);
  if (!unit) throw DomainError("idempotent is not in its block");
  out.algebra.set_unit(*unit);
  return out;
}

/// B(d, lambda, q): g^d = 1, x^d = lambda, xg = qgx, basis g^i x^j at i*d + j.
inline FDBialgebra b_algebra(long d, const CycloNum& lambda, RootOfUnity q) {
  if (q.order() != d) throw DomainError("B(d,lambda,q) needs q of order d");
  const long cond = std::lcm(q.primitive_form().conductor(), lambda.conductor());
  const CycloNum lam = lambda.embed(cond);
  std::vector<std::string> labels;
  for (long i = 0; i < d; ++i) {
    for (long j = 0; j < d; ++j) labels.push_back(detail::gx_label(i, j));
  }
  FDBialgebra b(static_cast<std::size_t>(d * d), cond, std::move(labels));
  for (long a = 0; a < d; ++a) {
    for (long bb = 0; bb < d; ++bb) {
      for (long c = 0; c < d; ++c) {
        for (long e = 0; e < d; ++e) {
          const CycloNum coef = q.pow(bb * c).value_in(cond);
          const long gi = (a + c) % d;
          SparseVec v;
          if (bb + e < d) {
            v.push_back({static_cast<std::size_t>(gi * d + bb + e), coef});
          } else if (!lam.is_zero()) {
            v.push_back({static_cast<std::size_t>(gi * d + bb + e - d), coef * lam});
          }
          b.set_product(static_cast<std::size_t>(a * d + bb), static_cast<std::size_t>(c * d + e), std::move(v));
        }
      }
    }
  }
  b.set_unit(basis_vector(0, cond));
  return b;
}

/// M_d(K) on the elementary matrices E_ab, row-major.
inline FDBialgebra matrix_algebra(long d, long conductor = 1) {
  std::vector<std::string> labels;
  for (long a = 0; a < d; ++a) {
    for (long b = 0; b < d; ++b) labels.push_back("E" + std::to_string(a) + "," + std::to_string(b));
  }
  FDBialgebra m(static_cast<std::size_t>(d * d), conductor, std::move(labels));
  SparseVec unit;
  for (long a = 0; a < d; ++a) {
    unit.push_back({static_cast<std::size_t>(a * d + a), CycloNum::one(conductor)});
    for (long b = 0; b < d; ++b) {
      for (long c = 0; c < d; ++c) {
        for (long e = 0; e < d; ++e) {
          SparseVec v;
          if (b == c) v.push_back({static_cast<std::size_t>(a * d + e), CycloNum::one(conductor)});
          m.set_product(static_cast<std::size_t>(a * d + b), static_cast<std::size_t>(c * d + e), std::move(v));
        }
      }
    }
  }
  m.set_unit(std::move(unit));
  return m;
}

struct PhiRepresentation {
  Matrix g;
  Matrix x;
  FDBialgebra matrices;
  IsoWitness witness;  // B(d,lambda,q) -> M_d(K)
  MapReport report;
};

inline SparseVec matrix_as_vector(const Matrix& m) {
  SparseVec v;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) {
      if (!m(a, b).is_zero()) v.push_back({a * m.cols() + b, m(a, b)});
    }
  }
  return v;
}

/// phi(g) = diag(1, q, ..., q^(d-1)); phi(x) has ones above the diagonal and
/// lambda in the lower-left corner.
inline PhiRepresentation matrix_rep_phi(long d, const CycloNum& lambda, RootOfUnity q) {
  if (lambda.is_zero()) throw DomainError("phi needs lambda != 0");
  const FDBialgebra b = b_algebra(d, lambda, q);
  const long cond = b.conductor();
  const auto n = static_cast<std::size_t>(d);
  Matrix g(n, n, cond);
  Matrix x(n, n, cond);
  for (std::size_t a = 0; a < n; ++a) {
    g(a, a) = q.pow(static_cast<long>(a)).value_in(cond);
    if (a + 1 < n) x(a, a + 1) = CycloNum::one(cond);
  }
  x(n - 1, 0) = lambda.embed(cond);
  if (n == 1) x(0, 0) = lambda.embed(cond);
  FDBialgebra md = matrix_algebra(d, cond);
  IsoWitness w = extend_from_generators(b, md, {{n, matrix_as_vector(g)}, {1, matrix_as_vector(x)}});
  MapReport rep = check_map(w);
  return {std::move(g), std::move(x), std::move(md), std::move(w), std::move(rep)};
}

enum class BlockType { truncated_cycle, matrix_algebra };

inline std::string to_string(BlockType t, long d) {
  return (t == BlockType::truncated_cycle ? "TruncatedCycle(" : "MatrixAlgebra(") + std::to_string(d) + ")";
}

struct ThetaMap {
  long index = 0;
  CycloNum lambda;  // mu (1 - omega^-i)
  FDBialgebra b;    // B(d, lambda, q)
  IsoWitness witness;
  MapReport report;
};

struct BlockEntry {
  long index = 0;
  CycloNum lambda;
  BlockType type = BlockType::truncated_cycle;
  Block block;
  ThetaMap theta;
  std::optional<PhiRepresentation> phi;  // matrix blocks
  std::optional<IsoWitness> psi;         // truncated blocks: B(d,0,q) -> KZ_d/J^d
  std::optional<MapReport> psi_report;
};

/// theta_i(g) = omega0^i c_i g, theta_i(x) = c_i x, from B(d, lambda_i, q)
/// onto the extracted block.
inline ThetaMap theta_map(const FamilyParams& p, const CentralIdempotents& ci, long i, const Block& block) {
  const long m = ci.algebra.conductor();
  const CycloNum lambda = p.mu.embed(m) * (CycloNum::one(m) - ci.omega.pow(-i).value_in(m));
  ThetaMap th{i, lambda, b_algebra(p.d, lambda, p.q), {}, {}};
  const auto d = static_cast<std::size_t>(p.d);
  th.witness = extend_from_generators(th.b, block.algebra,
                                      {{d, {{d, ci.omega0.pow(i).value_in(m)}}}, {1, basis_vector(1, m)}});
  th.report = check_map(th.witness);
  return th;
}

/// B(d,0,q) -> KZ_d/J^d: g -> sum_k q^(-k) e_k, x -> sum_k alpha_k. This
/// inverts e_k -> f_(-k), alpha_k -> x f_(-k), where f_a = (1/d) sum_j
/// q^(-aj) g^j are the idempotents of K<g>.
inline std::pair<IsoWitness, MapReport> truncated_cycle_witness(long d, RootOfUnity q) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::pair<IsoWitness, MapReport>> cache;
  const RootOfUnity r = q.primitive_form();
  const std::pair<long, long> key{d, r.exponent()};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const FDBialgebra b = b_algebra(d, CycloNum(0), q);
  const auto pres = MonomialPresentation::truncated(cycle_quiver(static_cast<std::size_t>(d)),
                                                    static_cast<std::size_t>(d));
  const FDBialgebra kz = monomial_algebra(pres);
  const auto basis = monomial_basis(pres);
  const long cond = b.conductor();
  SparseVec g;
  SparseVec x;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Path& path = basis[idx];
    const auto k = static_cast<long>(path.start);
    if (path.length() == 0) g.push_back({idx, q.pow(-k).value_in(cond)});
    if (path.length() == 1) x.push_back({idx, CycloNum::one(cond)});
  }
  IsoWitness w = extend_from_generators(b, kz, {{static_cast<std::size_t>(d), g}, {1, x}});
  MapReport rep = check_map(w);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::make_pair(std::move(w), std::move(rep))).first->second;
}

struct BlockReport {
  FamilyParams params;
  CentralIdempotents idempotents;
  std::vector<BlockEntry> blocks;
  std::size_t center_dimension = 0;

  [[nodiscard]] bool all_witnesses_verified() const {
    for (const auto& b : blocks) {
      if (!b.theta.report.iso()) return false;
      if (b.phi && !b.phi->report.iso()) return false;
      if (b.psi_report && !b.psi_report->iso()) return false;
    }
    return true;
  }
  [[nodiscard]] std::size_t total_dimension() const {
    std::size_t s = 0;
    for (const auto& b : blocks) s += b.block.algebra.dim();
    return s;
  }
  [[nodiscard]] std::string types() const {
    std::string s;
    for (const auto& b : blocks) s += (s.empty() ? "" : ", ") + to_string(b.type, params.d);
    return s;
  }
};

/// The full decomposition A = c_0 A x ... x c_t A with every block
/// identified through verified witnesses.
inline BlockReport wedderburn_report(const FamilyParams& p) {
  BlockReport rep{p, central_idempotents(p), {}, 0};
  const FDBialgebra& a = rep.idempotents.algebra;
  const auto d = static_cast<std::size_t>(p.d);
  rep.center_dimension = center(a, {d, 1}).size();
  std::optional<std::pair<IsoWitness, MapReport>> psi;
  for (long i = 0; i <= rep.idempotents.t; ++i) {
    BlockEntry e;
    e.index = i;
    e.block = block_extract(a, rep.idempotents.idempotents[static_cast<std::size_t>(i)], p.d);
    e.theta = theta_map(p, rep.idempotents, i, e.block);
    e.lambda = e.theta.lambda;
    if (e.lambda.is_zero()) {
      e.type = BlockType::truncated_cycle;
      if (!psi) psi = truncated_cycle_witness(p.d, p.q);
      e.psi = psi->first;
      e.psi_report = psi->second;
    } else {
      e.type = BlockType::matrix_algebra;
      e.phi = matrix_rep_phi(p.d, e.lambda, p.q);
    }
    rep.blocks.push_back(std::move(e));
  }
  return rep;
}

/// One basic d-cycle per truncated block, one isolated vertex per matrix
/// block.
inline Quiver gabriel_quiver(const BlockReport& rep) {
  std::optional<Quiver> q;
  for (const auto& b : rep.blocks) {
    const Quiver piece = b.type == BlockType::truncated_cycle
                             ? cycle_quiver(static_cast<std::size_t>(rep.params.d))
                             : Quiver(1, {});
    q = q ? q->disjoint_union(piece) : piece;
  }
  return *q;
}

}  // namespace monohopf
