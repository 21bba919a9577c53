#pragma once

// Command-line front end. run() is the whole program minus main(), so the
// tests can drive it with string streams.
//
// Exit codes: 0 success / everything checked passed, 1 a check failed,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monohopf/acceptance.hpp"
#include "monohopf/blocks.hpp"
#include "monohopf/group_data.hpp"
#include "monohopf/hopf_families.hpp"
#include "monohopf/serialize.hpp"
#include "monohopf/structure.hpp"
#include "monohopf/verify.hpp"

namespace monohopf::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

inline const char* usage_text() {
  return R"(usage: monohopf <command> [arguments] [options]

commands:
  construct FAMILY              emit structure constants as JSON
  verify FILE                   run the algebra, coalgebra, bialgebra and antipode suites
  decompose FAMILY [--json]     block decomposition of A(n,d,mu,q) with verified witnesses
  classify FAMILY FAMILY        isomorphism test for two members of A(n,d,mu,q)
  classify DATUM DATUM          isomorphism test for two group data (JSON files)
  link-quiver FILE              group-likes, skew-primitive arrows and coalgebra components
  frobenius FILE                Frobenius test for a presentation (or any algebra file)
  group-data validate|build|induce|classify|split|shape FILE...
  export FILE                   re-emit a structure file in canonical form
  sweep                         run the whole verification sweep and print a pass table

families:
  A n d mu q | A(n,d,mu,qExp,qCond)     A(n,d,mu,q): g^n = 1, x^d = mu(1 - g^d), xg = q gx
  C n d mu q | C(n,d,mu,qExp,qCond)     C_d(n,mu,q) on the truncated cycle path coalgebra
  B d lambda q                          B(d,lambda,q) (algebra only)
  M d                                   d x d matrices (algebra only)
  datum FILE                            A(alpha) for a group-datum file
  presentation FILE                     monomial algebra KQ/I
numbers: 3, -1/2, z4 (= zeta_4), -z8^3, 2*z3^2

options:
  -o, --output FILE      write to FILE instead of stdout ("-" is stdout)
  --seed N               seed for the randomized Frobenius oracle (default 0)
  --trials N             oracle trials (default 48)
  --conductor-bound N    largest conductor searched for d-th roots in classify (default 48)
  --max-n N              sweep: family grid bound (default 12)
  --max-group N          sweep: largest group order in the datum catalogue (default 12)
  --only LIST            sweep: comma-separated criterion numbers
  --antipode standard|printed             antipode formula for C
  --x-antipode minus-ginv-x|minus-x-ginv|plus-ginv-x   antipode of x for A and datum
  --json                 decompose: emit JSON
  --timings              sweep: report timings on stderr
  "-" as FILE reads stdin
)";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> positional;
  std::string output = "-";
  std::uint64_t seed = 0;
  int trials = 48;
  long conductor_bound = 48;
  long max_n = 12;
  std::size_t max_group = 12;
  std::set<int> only;
  PathAntipode path_antipode = PathAntipode::standard;
  XAntipode x_antipode = XAntipode::minus_ginv_x;
  bool json = false;
  bool timings = false;
  bool help = false;
};

namespace detail {

inline long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected an integer, got \"" + s + "\"");
}

/// Flags start with "--" (or are -o / -h); anything else, including "-1"
/// and "-", is positional.
inline Options parse(const std::vector<std::string>& args) {
  Options o;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool flag = a.rfind("--", 0) == 0 || a == "-o" || a == "-h";
    if (!flag) {
      o.positional.push_back(a);
      continue;
    }
    auto value = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError(a + " needs a value");
      return args[++i];
    };
    if (a == "-h" || a == "--help") {
      o.help = true;
    } else if (a == "-o" || a == "--output") {
      o.output = value();
    } else if (a == "--seed") {
      o.seed = static_cast<std::uint64_t>(parse_long(value(), a));
    } else if (a == "--trials") {
      o.trials = static_cast<int>(parse_long(value(), a));
    } else if (a == "--conductor-bound") {
      o.conductor_bound = parse_long(value(), a);
    } else if (a == "--max-n") {
      o.max_n = parse_long(value(), a);
    } else if (a == "--max-group") {
      o.max_group = static_cast<std::size_t>(parse_long(value(), a));
    } else if (a == "--only") {
      std::stringstream ss(value());
      std::string item;
      while (std::getline(ss, item, ',')) o.only.insert(static_cast<int>(parse_long(item, a)));
    } else if (a == "--antipode") {
      const std::string& v = value();
      if (v == "standard") {
        o.path_antipode = PathAntipode::standard;
      } else if (v == "printed") {
        o.path_antipode = PathAntipode::printed;
      } else {
        throw UsageError("--antipode must be standard or printed");
      }
    } else if (a == "--x-antipode") {
      const std::string& v = value();
      if (v == "minus-ginv-x") {
        o.x_antipode = XAntipode::minus_ginv_x;
      } else if (v == "minus-x-ginv") {
        o.x_antipode = XAntipode::minus_x_ginv;
      } else if (v == "plus-ginv-x") {
        o.x_antipode = XAntipode::plus_ginv_x;
      } else {
        throw UsageError("--x-antipode must be minus-ginv-x, minus-x-ginv or plus-ginv-x");
      }
    } else if (a == "--json") {
      o.json = true;
    } else if (a == "--timings") {
      o.timings = true;
    } else {
      throw UsageError("unknown option " + a);
    }
  }
  if (o.conductor_bound < 1 || o.max_n < 2 || o.trials < 1) throw UsageError("option values must be positive");
  return o;
}

/// r | z<N> | z<N>^k | r*z<N>^k, with an optional leading minus.
inline CycloNum parse_number(std::string s) {
  const std::string orig = s;
  if (s.empty()) throw UsageError("empty number");
  Rat coef(1);
  if (s[0] == '-' && s.size() > 1 && s[1] == 'z') {
    coef = Rat(-1);
    s = s.substr(1);
  }
  const auto star = s.find('*');
  std::string root = s;
  if (star != std::string::npos) {
    try {
      coef = coef * Rat::parse(s.substr(0, star));
    } catch (const std::exception&) {
      throw UsageError("bad number \"" + orig + "\"");
    }
    root = s.substr(star + 1);
  } else if (s[0] != 'z') {
    try {
      return CycloNum(Rat::parse(s));
    } catch (const std::exception&) {
      throw UsageError("bad number \"" + orig + "\"");
    }
  }
  if (root.empty() || root[0] != 'z') throw UsageError("bad number \"" + orig + "\"");
  const auto caret = root.find('^');
  const long cond = parse_long(root.substr(1, caret == std::string::npos ? std::string::npos : caret - 1), orig);
  const long k = caret == std::string::npos ? 1 : parse_long(root.substr(caret + 1), orig);
  if (cond < 1) throw UsageError("bad number \"" + orig + "\"");
  return RootOfUnity(cond, k).value().scaled(coef);
}

inline RootOfUnity parse_root(const std::string& s) {
  auto r = RootOfUnity::recognize(parse_number(s));
  if (!r) throw UsageError("q = " + s + " is not a root of unity");
  return *r;
}

/// "A(4,2,1,1,2)" -> {"A", "4", "2", "1", "z2^1"}
inline std::optional<std::vector<std::string>> split_compact(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return std::nullopt;
  std::vector<std::string> parts{s.substr(0, open)};
  std::stringstream ss(s.substr(open + 1, s.size() - open - 2));
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6) throw UsageError(s + ": expected " + parts[0] + "(n,d,mu,qExp,qCond)");
  parts[4] = "z" + parts[5] + "^" + parts[4];
  parts.pop_back();
  return parts;
}

struct Family {
  char kind = 'A';
  FamilyParams params;
};

/// Consumes a family spec from the front of `args`.
inline Family parse_family(std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing family (A n d mu q)");
  std::vector<std::string> parts;
  if (auto c = split_compact(args.front())) {
    parts = *c;
    args.erase(args.begin());
  } else {
    if (args.size() < 5) throw UsageError("family needs 5 tokens: A|C n d mu q");
    parts.assign(args.begin(), args.begin() + 5);
    args.erase(args.begin(), args.begin() + 5);
  }
  if (parts[0] != "A" && parts[0] != "C") throw UsageError("unknown family " + parts[0] + " (expected A or C)");
  Family f;
  f.kind = parts[0][0];
  try {
    f.params = FamilyParams::make(parse_long(parts[1], "n"), parse_long(parts[2], "d"), parse_root(parts[4]),
                                  parse_number(parts[3]));
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return f;
}

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw InputError(path + ": cannot open");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline json read_json(const std::string& path, std::istream& in) {
  try {
    return json::parse(slurp(path, in));
  } catch (const json::parse_error& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": malformed JSON: " + e.what());
  }
}

inline std::string where(const std::string& path) { return path == "-" ? "<stdin>" : path; }

inline FDBialgebra read_bialgebra(const std::string& path, std::istream& in) {
  const json j = read_json(path, in);
  try {
    return bialgebra_from_json(j);
  } catch (const InputError& e) {
    throw InputError(where(path) + ": " + e.what());
  } catch (const DomainError& e) {
    throw InputError(where(path) + ": " + e.what());
  }
}

inline GroupDatum read_datum(const std::string& path, std::istream& in) {
  const json j = read_json(path, in);
  try {
    return datum_from_json(j);
  } catch (const InputError& e) {
    throw InputError(where(path) + ": " + e.what());
  }
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw InputError(o.output + ": cannot write");
  f << text;
}

inline std::string dump(const json& j) { return j.dump() + "\n"; }

inline void require_args(const std::vector<std::string>& args, std::size_t n, const char* what) {
  if (args.size() != n) throw UsageError(std::string("usage: monohopf ") + what);
}

// -- subcommands --------------------------------------------------------------

inline int cmd_construct(std::vector<std::string> args, const Options& o, std::istream& in, std::ostream& out) {
  if (args.empty()) throw UsageError("usage: monohopf construct FAMILY");
  const std::string kind = args.front();
  FDBialgebra a;
  if (kind == "B") {
    require_args(args, 4, "construct B d lambda q");
    try {
      a = b_algebra(parse_long(args[1], "d"), parse_number(args[2]), parse_root(args[3]));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  } else if (kind == "M") {
    require_args(args, 2, "construct M d");
    const long d = parse_long(args[1], "d");
    if (d < 1) throw UsageError("d must be positive");
    a = matrix_algebra(d);
  } else if (kind == "datum") {
    require_args(args, 2, "construct datum FILE");
    try {
      a = build_A(read_datum(args[1], in), o.x_antipode);
    } catch (const DomainError& e) {
      throw InputError(where(args[1]) + ": " + e.what());
    }
  } else if (kind == "presentation") {
    require_args(args, 2, "construct presentation FILE");
    const json j = read_json(args[1], in);
    try {
      a = monomial_algebra(presentation_from_json(j));
    } catch (const InputError& e) {
      throw InputError(where(args[1]) + ": " + e.what());
    }
  } else {
    const Family f = parse_family(args);
    if (!args.empty()) throw UsageError("unexpected argument " + args.front());
    a = f.kind == 'A' ? a_n_d_mu_q(f.params, o.x_antipode) : c_d_n_mu_q(f.params, o.path_antipode);
  }
  emit(o, dump(to_json(a)), out);
  return kOk;
}

inline int cmd_verify(std::vector<std::string> args, const Options&, std::istream& in, std::ostream& out) {
  require_args(args, 1, "verify FILE");
  FDBialgebra a = read_bialgebra(args[0], in);
  const VerificationSummary s = verify_all(a);
  bool ok = true;
  out << "dim " << a.dim() << ", conductor " << a.conductor() << "\n";
  for (const AxiomReport* r : s.reports()) {
    out << r->summary() << "\n";
    ok = ok && r->passed;
  }
  out << (ok ? "all applicable suites pass\n" : "verification FAILED\n");
  return ok ? kOk : kFailed;
}

inline json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json witness_json(const IsoWitness& w) {
  json cols = json::array();
  for (std::size_t k = 0; k < w.columns.size(); ++k) {
    json col = json::array();
    for (const Term& t : w.columns[k]) col.push_back({t.index, to_json(t.coef)});
    cols.push_back({{"source", w.source->labels()[k]}, {"image", std::move(col)}});
  }
  return {{"source_dim", w.source->dim()}, {"target_dim", w.target->dim()}, {"target_labels", w.target->labels()},
          {"columns", std::move(cols)}};
}

inline json quiver_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source, a.target});
  return {{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}};
}

inline int cmd_decompose(std::vector<std::string> args, const Options& o, std::istream&, std::ostream& out) {
  const Family f = parse_family(args);
  if (!args.empty()) throw UsageError("unexpected argument " + args.front());
  if (f.kind != 'A') throw UsageError("decompose takes an A family");
  const BlockReport r = wedderburn_report(f.params);
  const Quiver q = gabriel_quiver(r);
  const bool ok = r.all_witnesses_verified();
  std::ostringstream os;
  if (o.json) {
    json j;
    j["family"] = f.params.str();
    j["center_dimension"] = r.center_dimension;
    json idem = json::array();
    const FDBialgebra& a = r.idempotents.algebra;
    for (const auto& c : r.idempotents.idempotents) idem.push_back(a.format(c));
    j["idempotents"] = std::move(idem);
    json blocks = json::array();
    for (const auto& b : r.blocks) {
      json e{{"index", b.index},
             {"lambda", to_json(b.lambda)},
             {"type", to_string(b.type, f.params.d)},
             {"theta", witness_json(b.theta.witness)},
             {"theta_report", b.theta.report.summary()}};
      if (b.phi) {
        e["phi"] = {{"g", matrix_json(b.phi->g)}, {"x", matrix_json(b.phi->x)}, {"report", b.phi->report.summary()}};
      }
      if (b.psi) e["psi"] = {{"map", witness_json(*b.psi)}, {"report", b.psi_report->summary()}};
      blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    j["gabriel_quiver"] = quiver_json(q);
    j["verified"] = ok;
    os << dump(j);
  } else {
    os << "blocks: " << r.types() << "\n";
    os << "family: " << f.params.str() << ", center dimension " << r.center_dimension << "\n";
    for (const auto& b : r.blocks) {
      os << "block " << b.index << ": lambda = " << b.lambda.str() << ", " << to_string(b.type, f.params.d)
         << ", c = " << r.idempotents.algebra.format(r.idempotents.idempotents[static_cast<std::size_t>(b.index)])
         << "\n  theta: " << b.theta.report.summary() << "\n";
      if (b.phi) os << "  phi:   " << b.phi->report.summary() << "\n";
      if (b.psi_report) os << "  psi:   " << b.psi_report->summary() << "\n";
    }
    os << "gabriel quiver: " << q.vertex_count() << " vertices, arrows";
    for (const Arrow& a : q.arrows()) os << " " << a.source << "->" << a.target;
    os << "\n";
  }
  emit(o, os.str(), out);
  return ok ? kOk : kFailed;
}

inline int cmd_classify(std::vector<std::string> args, const Options& o, std::istream& in, std::ostream& out) {
  if (args.size() == 2) {
    const GroupDatum a = read_datum(args[0], in);
    const GroupDatum b = read_datum(args[1], in);
    DatumIso iso;
    try {
      iso = datum_iso(a, b, o.conductor_bound);
    } catch (const DomainError& e) {
      throw InputError(e.what());
    }
    out << iso.str() << "\n";
    if (!iso.isomorphic()) return kOk;
    out << "f:";
    for (std::size_t h = 0; h < iso.f.size(); ++h) out << " " << a.group.labels()[h] << "->" << b.group.labels()[iso.f[h]];
    const auto w = datum_iso_witness(a, b, iso);
    out << "\nA(alpha) -> A(beta), h -> f(h), x -> delta x': " << w.second.summary() << "\n";
    return w.second.iso() ? kOk : kFailed;
  }
  const Family f1 = parse_family(args);
  const Family f2 = parse_family(args);
  if (!args.empty()) throw UsageError("unexpected argument " + args.front());
  const Classification c = classify_pair(f1.params, f2.params, o.conductor_bound);
  out << f1.params.str() << " vs " << f2.params.str() << ": " << c.str() << "\n";
  if (c.witness_report) out << "witness x -> x/delta: " << c.witness_report->summary() << "\n";
  return c.kind == IsoKind::isomorphic && (!c.witness_report || !c.witness_report->iso()) ? kFailed : kOk;
}

inline int cmd_link_quiver(std::vector<std::string> args, const Options&, std::istream& in, std::ostream& out) {
  require_args(args, 1, "link-quiver FILE");
  const FDBialgebra a = read_bialgebra(args[0], in);
  if (!a.has_coalgebra()) throw InputError(where(args[0]) + ": no coalgebra structure");
  const GroupLikes gl = group_likes(a, grouplike_candidates(a));
  if (gl.problem) out << "note: " << *gl.problem << "\n";
  const LinkQuiver lq = link_quiver(a, gl.elements);
  out << "group-likes (" << lq.vertices.size() << "):";
  for (const auto& l : lq.labels) out << " " << l;
  out << "\narrows (" << lq.arrow_count() << "):\n";
  for (const auto& [xy, m] : lq.multiplicity) {
    out << "  " << lq.labels[xy.first] << " -> " << lq.labels[xy.second] << (m > 1 ? " x" + std::to_string(m) : "")
        << "\n";
  }
  const auto comps = coalgebra_components(lq);
  out << "components (" << comps.size() << "):";
  for (const auto& c : comps) {
    out << " {";
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? ", " : "") << lq.labels[c[k]];
    out << "}";
  }
  out << "\n";
  return kOk;
}

inline int cmd_frobenius(std::vector<std::string> args, const Options& o, std::istream& in, std::ostream& out) {
  require_args(args, 1, "frobenius FILE");
  const json j = read_json(args[0], in);
  if (j.contains("vertices")) {
    MonomialPresentation pres = [&] {
      try {
        return presentation_from_json(j);
      } catch (const InputError& e) {
        throw InputError(where(args[0]) + ": " + e.what());
      }
    }();
    const auto verdicts = frobenius_classify(pres);
    bool frob = true;
    for (const auto& v : verdicts) {
      out << "component {";
      for (std::size_t k = 0; k < v.vertices.size(); ++k) out << (k ? ", " : "") << v.vertices[k];
      out << "}: " << describe(v.verdict) << "\n";
      frob = frob && !std::holds_alternative<NotFrobenius>(v.verdict);
    }
    const SocleDimensions s = socle_dimensions(pres);
    out << "socle dimensions (left):";
    for (auto x : s.left) out << " " << x;
    out << "\nsocle dimensions (right):";
    for (auto x : s.right) out << " " << x;
    const OracleResult r = frobenius_oracle(monomial_algebra(pres), o.trials, o.seed);
    out << "\nclassifier: " << (frob ? "Frobenius" : "not Frobenius") << "\noracle: " << to_string(r.verdict)
        << " after " << r.trials_used << " trials (seed " << o.seed << ")\n";
    const bool agree = frob ? r.verdict == OracleVerdict::frobenius : r.verdict != OracleVerdict::frobenius;
    if (!agree) out << "DISAGREEMENT between classifier and oracle\n";
    return agree ? kOk : kFailed;
  }
  const FDBialgebra a = [&] {
    try {
      return bialgebra_from_json(j);
    } catch (const InputError& e) {
      throw InputError(where(args[0]) + ": " + e.what());
    }
  }();
  if (!a.has_algebra()) throw InputError(where(args[0]) + ": no multiplication");
  const OracleResult r = frobenius_oracle(a, o.trials, o.seed);
  out << "oracle: " << to_string(r.verdict) << " after " << r.trials_used << " trials (seed " << o.seed << ")\n";
  return kOk;
}

inline int cmd_group_data(std::vector<std::string> args, const Options& o, std::istream& in, std::ostream& out) {
  if (args.empty()) throw UsageError("usage: monohopf group-data validate|build|induce|classify|split|shape FILE");
  const std::string sub = args.front();
  args.erase(args.begin());
  if (sub == "classify") return cmd_classify(args, o, in, out);
  require_args(args, 1, ("group-data " + sub + " FILE").c_str());
  if (sub == "induce") {
    const FDBialgebra a = read_bialgebra(args[0], in);
    InducedDatum ind;
    try {
      ind = induced_datum(a);
    } catch (const DomainError& e) {
      throw InputError(where(args[0]) + ": " + e.what());
    }
    emit(o, dump(to_json(ind.datum)), out);
    return kOk;
  }
  const GroupDatum d = read_datum(args[0], in);
  if (sub == "validate") {
    const DatumReport r = validate_datum(d);
    for (const auto& v : r.violations) out << "violation: " << v << "\n";
    out << (r.valid() ? "valid" : "invalid") << " (d = " << r.d << ", o(g) = " << r.order_g << ")\n";
    return r.valid() ? kOk : kFailed;
  }
  const DatumReport r = validate_datum(d);
  if (!r.valid()) throw InputError(where(args[0]) + ": invalid datum: " + r.violations.front());
  if (sub == "build") {
    FDBialgebra a = build_A(d, o.x_antipode);
    emit(o, dump(to_json(a)), out);
    return kOk;
  }
  if (sub == "split") {
    const Triviality t = is_trivial_datum(d);
    if (!t.trivial) {
      out << "nontrivial: no subgroup N with G = <g> x N and chi|N = 1 (" << t.subgroups_examined
          << " subgroups examined); no splitting\n";
      return kFailed;
    }
    const TensorSplit s = tensor_split_check(d);
    out << "trivial: N = {";
    for (std::size_t k = 0; k < s.complement.size(); ++k) out << (k ? ", " : "") << d.group.labels()[s.complement[k]];
    out << "}\nA(alpha) = " << s.params.str() << " (x) K[N]: " << s.report.summary() << "\n";
    return s.report.iso() ? kOk : kFailed;
  }
  if (sub == "shape") {
    const CoalgebraShape s = coalgebra_shape(d);
    out << s.components << " components (expected " << s.expected_components << "), group-likes per component:";
    for (auto k : s.grouplikes_per_component) out << " " << k;
    out << "\nidentity component = <g>: " << (s.identity_component_cyclic ? "yes" : "no")
        << "\nidentity component -> C_d(o(g)): " << s.identity_report.summary() << "\n";
    return s.ok(d.order_g()) ? kOk : kFailed;
  }
  throw UsageError("unknown group-data subcommand " + sub);
}

inline int cmd_export(std::vector<std::string> args, const Options& o, std::istream& in, std::ostream& out) {
  require_args(args, 1, "export FILE");
  emit(o, dump(to_json(read_bialgebra(args[0], in))), out);
  return kOk;
}

inline int cmd_sweep(std::vector<std::string> args, const Options& o, std::istream&, std::ostream& out,
                     std::ostream& err) {
  if (!args.empty()) throw UsageError("sweep takes no positional arguments");
  SweepOptions so;
  so.max_n = o.max_n;
  so.max_group = o.max_group;
  so.seed = o.seed;
  so.conductor_bound = o.conductor_bound;
  so.oracle_trials = o.trials;
  const auto& fns = all_criteria();
  bool ok = true;
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!o.only.empty() && o.only.count(id) == 0) continue;
    const CriterionResult r = run_timed(id, fns[k], so);
    ok = ok && r.passed;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " -- " << r.detail << std::endl;
    if (o.timings) err << "criterion " << r.id << ": " << r.seconds << " s\n";
  }
  return ok ? kOk : kFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (argv.empty()) throw UsageError("missing command");
    const std::string cmd = argv.front();
    Options o = detail::parse({argv.begin() + 1, argv.end()});
    if (cmd == "-h" || cmd == "--help" || cmd == "help" || o.help) {
      out << usage_text();
      return kOk;
    }
    auto& args = o.positional;
    if (cmd == "construct") return detail::cmd_construct(args, o, in, out);
    if (cmd == "verify") return detail::cmd_verify(args, o, in, out);
    if (cmd == "decompose") return detail::cmd_decompose(args, o, in, out);
    if (cmd == "classify") return detail::cmd_classify(args, o, in, out);
    if (cmd == "link-quiver") return detail::cmd_link_quiver(args, o, in, out);
    if (cmd == "frobenius") return detail::cmd_frobenius(args, o, in, out);
    if (cmd == "group-data") return detail::cmd_group_data(args, o, in, out);
    if (cmd == "export") return detail::cmd_export(args, o, in, out);
    if (cmd == "sweep") return detail::cmd_sweep(args, o, in, out, err);
    throw UsageError("unknown command " + cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n(monohopf --help for usage)\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace monohopf::cli
