#pragma once

// The full verification sweep: one entry per checked claim, each with a
// pass/fail flag and a short account of what was covered. Shared by the
// `sweep` subcommand and the acceptance test.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "monohopf/blocks.hpp"
#include "monohopf/group_data.hpp"
#include "monohopf/hopf_families.hpp"
#include "monohopf/qcombinatorics.hpp"
#include "monohopf/quiver.hpp"
#include "monohopf/structure.hpp"
#include "monohopf/verify.hpp"

namespace monohopf {

struct SweepOptions {
  long max_n = 12;              // family grid: n <= max_n
  long max_existence = 24;      // existence table: n, d <= max_existence
  long max_binomial_d = 12;
  long max_binomial_lm = 24;
  long max_vandermonde = 12;
  std::size_t max_group = 12;   // datum catalogue: |G| <= max_group
  std::size_t max_vertices = 3;
  std::size_t max_arrows = 4;
  std::size_t max_bound = 4;
  int oracle_trials = 48;
  std::uint64_t seed = 0;
  long conductor_bound = 48;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // coverage on success, first failure otherwise
  double seconds = 0;
};

/// Cells of the family grid: n <= max_n, d | n, d >= 2, q of order d,
/// mu in {0, 1}.
inline std::vector<FamilyParams> family_grid(long max_n) {
  std::vector<FamilyParams> out;
  for (long n = 2; n <= max_n; ++n) {
    for (long d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      for (const RootOfUnity& q : primitive_roots(d)) {
        for (long mu : {0L, 1L}) out.push_back(FamilyParams::make(n, d, q, CycloNum(mu)));
      }
    }
  }
  return out;
}

namespace detail {

struct Tally {
  std::size_t checked = 0;
  std::string failure;
  void fail(const std::string& what) {
    if (failure.empty()) failure = what;
  }
  [[nodiscard]] bool ok() const { return failure.empty(); }
};

inline CriterionResult finish(int id, std::string title, const Tally& t, const std::string& coverage) {
  return {id, std::move(title), t.ok(), t.ok() ? coverage : t.failure, 0};
}

/// Canonical arrow list of a quiver up to relabelling the vertices.
inline std::vector<std::pair<std::size_t, std::size_t>> canonical_arrows(
    std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  std::vector<std::size_t> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> best;
  bool first = true;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> a;
    for (const auto& [s, t] : arrows) a.emplace_back(perm[s], perm[t]);
    std::sort(a.begin(), a.end());
    if (first || a < best) best = a;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// Monomial presentations over small quivers (up to vertex relabelling):
/// every bound N in [2, max_bound]; the forbidden sets are all subsets of
/// the paths of length 2..N-1 when there are at most six of them, and
/// otherwise the empty set, each single path and all length-2 paths.
inline std::vector<MonomialPresentation> small_presentations(std::size_t max_vertices, std::size_t max_arrows,
                                                             std::size_t max_bound) {
  std::vector<MonomialPresentation> out;
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < v; ++s) {
      for (std::size_t t = 0; t < v; ++t) pairs.emplace_back(s, t);
    }
    std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
    // multisets of pairs of size <= max_arrows, as non-decreasing index lists
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      std::vector<std::pair<std::size_t, std::size_t>> arrows;
      for (std::size_t k : pick) arrows.push_back(pairs[k]);
      const auto canon = detail::canonical_arrows(v, arrows);
      if (seen.insert(canon).second) {
        std::vector<Arrow> as;
        for (const auto& [s, t] : canon) as.push_back({s, t});
        const Quiver q(v, as);
        for (std::size_t bound = 2; bound <= max_bound; ++bound) {
          std::vector<Path> inner;  // paths of length 2..bound-1
          std::vector<Path> top;    // paths of length bound, always forbidden
          for (std::size_t s = 0; s < v; ++s) {
            std::vector<Path> layer{Path{s, {}}};
            for (std::size_t len = 1; len <= bound; ++len) {
              std::vector<Path> next;
              for (const Path& p : layer) {
                for (std::size_t a : q.outgoing(p.end(q))) {
                  Path e = p;
                  e.arrows.push_back(a);
                  next.push_back(e);
                  if (e.length() == bound) {
                    top.push_back(e);
                  } else if (e.length() >= 2) {
                    inner.push_back(e);
                  }
                }
              }
              layer = std::move(next);
            }
          }
          std::vector<std::vector<Path>> choices;
          if (inner.size() <= 6) {
            for (std::size_t mask = 0; mask < (1U << inner.size()); ++mask) {
              std::vector<Path> f;
              for (std::size_t k = 0; k < inner.size(); ++k) {
                if (mask & (1U << k)) f.push_back(inner[k]);
              }
              choices.push_back(std::move(f));
            }
          } else {
            choices.emplace_back();
            std::vector<Path> len2;
            for (const Path& p : inner) {
              choices.push_back({p});
              if (p.length() == 2) len2.push_back(p);
            }
            choices.push_back(len2);
          }
          for (auto& f : choices) {
            f.insert(f.end(), top.begin(), top.end());
            out.emplace_back(q, std::move(f), bound);
          }
        }
      }
      if (pick.size() == max_arrows) return;
      for (std::size_t k = from; k < pairs.size(); ++k) {
        pick.push_back(k);
        rec(k);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

inline std::string describe_presentation(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::ostringstream os;
  os << "Q(" << q.vertex_count() << " vertices;";
  for (const Arrow& a : q.arrows()) os << " " << a.source << "->" << a.target;
  os << "; N=" << pres.bound() << "; I=<";
  for (std::size_t k = 0; k < pres.forbidden().size(); ++k) os << (k ? ", " : "") << pres.forbidden()[k].label();
  os << ">)";
  return os.str();
}

/// Frobenius test from socles alone: every projective has a simple socle on
/// both sides and the socle vertices of the P_i are a permutation.
inline bool frobenius_by_socles(const MonomialPresentation& pres) {
  const SocleDimensions s = socle_dimensions(pres);
  const Quiver& q = pres.quiver();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (s.left[v] != 1 || s.right[v] != 1) return false;
  }
  std::vector<bool> hit(q.vertex_count(), false);
  for (const Path& p : monomial_basis(pres)) {
    bool extends = false;
    for (std::size_t a : q.outgoing(p.end(q))) {
      Path e = p;
      e.arrows.push_back(a);
      extends = extends || !pres.in_ideal(e);
    }
    if (extends) continue;
    if (hit[p.end(q)]) return false;
    hit[p.end(q)] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------

inline CriterionResult criterion_axioms(const SweepOptions& o) {
  detail::Tally t;
  for (const FamilyParams& p : family_grid(o.max_n)) {
    FDBialgebra c = c_d_n_mu_q(p);
    FDBialgebra a = a_n_d_mu_q(p);
    for (auto* alg : {&c, &a}) {
      const VerificationSummary s = verify_all(*alg);
      ++t.checked;
      if (!s.all_passed()) {
        for (const auto& r : s.reports()) {
          if (!r->passed || !r->applicable) t.fail(p.str(alg == &c ? "C" : "A") + ": " + r->summary());
        }
      }
    }
  }
  return detail::finish(1, "axiom matrix (associativity, coassociativity, bialgebra, antipode)", t,
                        std::to_string(t.checked) + " algebras, n <= " + std::to_string(o.max_n));
}

inline CriterionResult criterion_family_iso(const SweepOptions& o) {
  detail::Tally t;
  for (const FamilyParams& p : family_grid(o.max_n)) {
    const FamilyIso f = family_iso(p);
    ++t.checked;
    if (!f.report.iso()) t.fail(p.str() + ": " + f.report.summary());
  }
  return detail::finish(2, "A(n,d,mu,q) ~ C_d(n,mu,q) via g^i x^j -> (j!_q) p_i^j", t,
                        std::to_string(t.checked) + " witnesses verified");
}

inline CriterionResult criterion_existence(const SweepOptions& o) {
  detail::Tally t;
  for (long n = 1; n <= o.max_existence; ++n) {
    for (long d = 2; d <= o.max_existence; ++d) {
      const ExistenceReport r = admits_hopf(n, d);
      ++t.checked;
      if (r.admits != (n % d == 0)) t.fail("admits_hopf(" + std::to_string(n) + "," + std::to_string(d) + ")");
      if (!r.witness_consistent()) {
        t.fail("binomial pattern at (n,d) = (" + std::to_string(n) + "," + std::to_string(d) + ")");
      }
      const bool any = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                   [](const BinomialWitness& w) { return w.pattern_holds; });
      if (any != r.admits) t.fail("witness/verdict mismatch at (" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
  }
  return detail::finish(3, "Hopf structure on C_d(n) exists iff d | n", t,
                        std::to_string(t.checked) + " pairs, n, d <= " + std::to_string(o.max_existence));
}

inline CriterionResult criterion_binomial_floor(const SweepOptions& o) {
  detail::Tally t;
  for (long d = 2; d <= o.max_binomial_d; ++d) {
    for (const RootOfUnity& q : primitive_roots(d)) {
      const GaussianBinomialTable table(2 * o.max_binomial_lm, q.value());
      for (long l = 0; l <= o.max_binomial_lm; ++l) {
        for (long m = 0; m <= o.max_binomial_lm; ++m) {
          ++t.checked;
          if (table.at(l + m, l).is_zero() != binomial_vanishes(l, m, d)) {
            t.fail("q = " + q.str() + ", l = " + std::to_string(l) + ", m = " + std::to_string(m));
          }
        }
      }
    }
  }
  return detail::finish(4, "(l+m choose l)_q = 0 iff the floor criterion", t,
                        std::to_string(t.checked) + " evaluations, 2 <= d <= " + std::to_string(o.max_binomial_d));
}

inline CriterionResult criterion_vandermonde(const SweepOptions& o) {
  detail::Tally t;
  std::set<std::pair<long, long>> roots;
  for (long c = 1; c <= o.max_vandermonde; ++c) {
    for (long e = 0; e < c; ++e) {
      const RootOfUnity r = RootOfUnity(c, e).primitive_form();
      roots.insert({r.conductor(), r.exponent()});
    }
  }
  for (const auto& [c, e] : roots) {
    const CycloNum q = RootOfUnity(c, e).value();
    for (long n0 = 1; n0 <= o.max_vandermonde; ++n0) {
      for (long k = 1; k < n0; ++k) {
        for (long l = 0; l <= n0; ++l) {
          ++t.checked;
          if (!q_vandermonde_check(n0, l, k, q)) {
            t.fail("q = " + RootOfUnity(c, e).str() + ", N0 = " + std::to_string(n0) + ", k = " + std::to_string(k) +
                   ", l = " + std::to_string(l));
          }
        }
      }
    }
  }
  return detail::finish(5, "q-Vandermonde identity", t,
                        std::to_string(t.checked) + " identities over " + std::to_string(roots.size()) + " roots");
}

namespace detail {

/// Decompositions of the family grid, computed once per grid size.
inline const std::vector<BlockReport>& block_reports(long max_n) {
  static std::map<long, std::vector<BlockReport>> cache;
  auto it = cache.find(max_n);
  if (it != cache.end()) return it->second;
  std::vector<BlockReport> out;
  for (const FamilyParams& p : family_grid(max_n)) out.push_back(wedderburn_report(p));
  return cache.emplace(max_n, std::move(out)).first->second;
}

}  // namespace detail

inline CriterionResult criterion_blocks(const SweepOptions& o) {
  detail::Tally t;
  for (const BlockReport& r : detail::block_reports(o.max_n)) {
    const FamilyParams& p = r.params;
    ++t.checked;
    const auto blocks = static_cast<std::size_t>(p.n / p.d);
    const std::string where = p.str() + ": ";
    if (r.blocks.size() != blocks) t.fail(where + "block count " + std::to_string(r.blocks.size()));
    if (r.center_dimension != blocks) t.fail(where + "center dimension " + std::to_string(r.center_dimension));
    if (r.total_dimension() != static_cast<std::size_t>(p.n * p.d)) t.fail(where + "block dimensions do not add up");
    std::size_t truncated = 0;
    for (const auto& b : r.blocks) truncated += b.type == BlockType::truncated_cycle ? 1 : 0;
    const std::size_t want = p.mu.is_zero() ? blocks : 1;
    if (truncated != want) t.fail(where + "types " + r.types());
    if (!r.all_witnesses_verified()) t.fail(where + "a block witness failed");
  }
  return detail::finish(6, "central idempotents, block types and block witnesses", t,
                        std::to_string(t.checked) + " decompositions");
}

inline CriterionResult criterion_gabriel(const SweepOptions& o) {
  detail::Tally t;
  for (const BlockReport& r : detail::block_reports(o.max_n)) {
    const FamilyParams& p = r.params;
    const Quiver q = gabriel_quiver(r);
    ++t.checked;
    const auto blocks = static_cast<std::size_t>(p.n / p.d);
    const auto d = static_cast<std::size_t>(p.d);
    const std::string where = p.str() + ": ";
    const std::size_t cycles = p.mu.is_zero() ? blocks : 1;
    const std::size_t points = blocks - cycles;
    if (q.vertex_count() != cycles * d + points || q.arrows().size() != cycles * d) {
      t.fail(where + "quiver has " + std::to_string(q.vertex_count()) + " vertices, " +
             std::to_string(q.arrows().size()) + " arrows");
      continue;
    }
    const auto verdicts = frobenius_classify(MonomialPresentation::truncated(q, d));
    std::size_t seen_cycles = 0;
    std::size_t seen_points = 0;
    for (const auto& v : verdicts) {
      if (const auto* c = std::get_if<TruncatedCycle>(&v.verdict)) {
        seen_cycles += c->n == d && c->d == d ? 1 : 0;
      } else if (std::holds_alternative<PointAlgebra>(v.verdict)) {
        ++seen_points;
      } else {
        t.fail(where + "component classified " + describe(v.verdict));
      }
    }
    if (seen_cycles != cycles || seen_points != points) t.fail(where + "re-classification does not match the shape");
  }
  return detail::finish(7, "Gabriel quivers and their Frobenius re-classification", t,
                        std::to_string(t.checked) + " quivers");
}

inline CriterionResult criterion_round_trip(const SweepOptions& o) {
  detail::Tally t;
  for (const CatalogueEntry& e : datum_catalogue(o.max_group)) {
    ++t.checked;
    const std::string where = e.group + " " + e.datum.str() + ": ";
    try {
      FDBialgebra A = build_A(e.datum);
      if (A.dim() != e.datum.group.order() * static_cast<std::size_t>(e.datum.d())) t.fail(where + "dimension");
      if (!verify_all(A).all_passed()) t.fail(where + "A(alpha) fails an axiom");
      const InducedDatum ind = induced_datum(A);
      if (ind.g_candidates != 1) t.fail(where + "g not unique");
      const DatumIso iso = datum_iso(ind.datum, e.datum, o.conductor_bound);
      if (!iso.isomorphic()) {
        t.fail(where + "induced datum " + ind.datum.str() + " " + iso.str());
      } else if (!datum_iso_witness(ind.datum, e.datum, iso).second.iso()) {
        t.fail(where + "induced Hopf map fails");
      }
      const CoalgebraShape shape = coalgebra_shape(e.datum);
      if (!shape.ok(e.datum.order_g())) {
        t.fail(where + "coalgebra shape: " + std::to_string(shape.components) + " components, identity " +
               shape.identity_report.summary());
      }
    } catch (const std::exception& ex) {
      t.fail(where + ex.what());
    }
  }
  return detail::finish(8, "induced datum of A(alpha) is alpha; coalgebra shape", t,
                        std::to_string(t.checked) + " data, |G| <= " + std::to_string(o.max_group));
}

inline CriterionResult criterion_classification(const SweepOptions& o) {
  detail::Tally t;
  auto expect = [&](const FamilyParams& a, const FamilyParams& b, IsoKind kind, const char* what) {
    const Classification c = classify_pair(a, b, o.conductor_bound);
    ++t.checked;
    if (c.kind != kind) t.fail(a.str() + " vs " + b.str() + ": " + c.str() + ", expected " + what);
    if (c.kind == IsoKind::isomorphic && (!c.witness_report || !c.witness_report->iso())) {
      t.fail(a.str() + " vs " + b.str() + ": positive verdict without a verified witness");
    }
    return c;
  };
  const RootOfUnity minus(2, 1);
  const Classification two = expect(FamilyParams::make(4, minus, CycloNum(1)), FamilyParams::make(4, minus, CycloNum(4)),
                                    IsoKind::isomorphic, "isomorphic");
  if (!two.delta || !(*two.delta == CycloNum(2))) t.fail("delta for (4,2,1,-1) vs (4,2,4,-1) is not 2");
  expect(FamilyParams::make(4, minus, CycloNum(0)), FamilyParams::make(4, minus, CycloNum(1)), IsoKind::not_isomorphic,
         "not-isomorphic");
  const std::vector<CycloNum> mus{CycloNum(0), CycloNum(1), CycloNum(2), CycloNum(-3), CycloNum::root(4, 1)};
  for (long n = 2; n <= o.max_n; ++n) {
    for (const RootOfUnity& q : primitive_roots(n)) {
      for (const auto& m1 : mus) {
        for (const auto& m2 : mus) {
          expect(FamilyParams::make(n, q, m1), FamilyParams::make(n, q, m2), IsoKind::isomorphic, "isomorphic (d = n)");
        }
      }
    }
    for (long d = 2; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto roots = primitive_roots(d);
      for (const auto& q1 : roots) {
        for (const auto& q2 : roots) {
          if (q1 == q2) continue;
          for (long mu : {0L, 1L}) {
            expect(FamilyParams::make(n, q1, CycloNum(mu)), FamilyParams::make(n, q2, CycloNum(mu)),
                   IsoKind::not_isomorphic, "not-isomorphic (q differs)");
          }
        }
      }
    }
  }
  return detail::finish(9, "classification of A(n,d,mu,q) up to isomorphism", t,
                        std::to_string(t.checked) + " pairs");
}

inline CriterionResult criterion_splitting(const SweepOptions& o) {
  detail::Tally t;
  std::size_t trivial = 0;
  for (const CatalogueEntry& e : datum_catalogue(o.max_group)) {
    ++t.checked;
    const std::string where = e.group + " " + e.datum.str() + ": ";
    try {
      if (!is_trivial_datum(e.datum).trivial) continue;
      ++trivial;
      if (!tensor_split_check(e.datum).report.iso()) t.fail(where + "splitting witness fails");
    } catch (const std::exception& ex) {
      t.fail(where + ex.what());
    }
  }
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  const GroupDatum nt{z4, 2, abelian_character(z4, {RootOfUnity(4, 1)}), CycloNum(0)};
  if (is_trivial_datum(nt).trivial) t.fail("(Z4, 2, z4, 0) reported trivial");
  try {
    (void)tensor_split_check(nt);
    t.fail("(Z4, 2, z4, 0) was split");
  } catch (const DomainError&) {
  }
  return detail::finish(10, "trivial data split as A(o(g),d,mu,chi(g)) (x) K[N]", t,
                        std::to_string(trivial) + " of " + std::to_string(t.checked) +
                            " data split with verified witnesses; (Z4, 2, z4, 0) nontrivial");
}

inline CriterionResult criterion_antipode_variants(const SweepOptions&) {
  detail::Tally t;
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const GroupDatum sweedler{z2, 1, abelian_character(z2, {RootOfUnity(2, 1)}), CycloNum(0)};
  const AxiomReport good = verify_antipode(build_A(sweedler, XAntipode::minus_ginv_x));
  const AxiomReport literal = verify_antipode(build_A(sweedler, XAntipode::plus_ginv_x));
  if (!good.passed) t.fail("S(x) = -g^-1 x fails: " + good.summary());
  if (literal.passed) t.fail("S(x) = +g^-1 x passes");
  if (!literal.passed && literal.witness_labels != "x") {
    t.fail("S(x) = +g^-1 x fails away from x: " + literal.summary());
  }
  return detail::finish(11, "antipode of A(alpha): -g^-1 x passes, +g^-1 x fails", t,
                        "literal form: " + literal.summary());
}

inline CriterionResult criterion_frobenius(const SweepOptions& o) {
  detail::Tally t;
  std::size_t positives = 0;
  std::uint64_t seed = o.seed;
  for (const MonomialPresentation& pres : small_presentations(o.max_vertices, o.max_arrows, o.max_bound)) {
    ++t.checked;
    const auto verdicts = frobenius_classify(pres);
    const bool frob = std::none_of(verdicts.begin(), verdicts.end(), [](const ComponentVerdict& v) {
      return std::holds_alternative<NotFrobenius>(v.verdict);
    });
    const std::string where = describe_presentation(pres) + ": ";
    if (frob != frobenius_by_socles(pres)) t.fail(where + "classifier and socle test disagree");
    const OracleResult oracle = frobenius_oracle(monomial_algebra(pres), o.oracle_trials, seed++);
    if (frob) {
      ++positives;
      if (oracle.verdict != OracleVerdict::frobenius) t.fail(where + "Frobenius but no form certified");
    } else if (oracle.verdict == OracleVerdict::frobenius) {
      t.fail(where + "oracle certified a form on a non-Frobenius algebra");
    }
  }
  return detail::finish(12, "Frobenius classifier vs socles vs bilinear-form oracle", t,
                        std::to_string(t.checked) + " presentations, " + std::to_string(positives) +
                            " Frobenius (all certified)");
}

using CriterionFn = CriterionResult (*)(const SweepOptions&);

inline const std::vector<CriterionFn>& all_criteria() {
  static const std::vector<CriterionFn> fns{
      criterion_axioms,         criterion_family_iso,   criterion_existence, criterion_binomial_floor,
      criterion_vandermonde,    criterion_blocks,
      criterion_gabriel,        criterion_round_trip,   criterion_classification,
      criterion_splitting,      criterion_antipode_variants,      criterion_frobenius};
  return fns;
}

inline CriterionResult run_timed(int id, CriterionFn fn, const SweepOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fn(o);
  } catch (const std::exception& e) {
    r.id = id;
    r.title = "criterion " + std::to_string(id);
    r.detail = std::string("exception: ") + e.what();
    r.passed = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace monohopf
