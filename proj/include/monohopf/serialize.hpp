#pragma once

// JSON interchange: cyclotomic numbers, structure constants, monomial
// presentations and group data. Readers throw InputError naming the
// offending location.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "monohopf/group_data.hpp"
#include "monohopf/quiver.hpp"

namespace monohopf {

using json = nlohmann::json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::size_t index_at(const json& j, const std::string& where, std::size_t limit) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= limit) bad(where, "index " + std::to_string(v) + " out of range (< " + std::to_string(limit) + ")");
  return v;
}

inline const json& array_at(const json& j, const std::string& where, std::size_t size = 0) {
  if (!j.is_array()) bad(where, "expected an array");
  if (size != 0 && j.size() != size) bad(where, "expected " + std::to_string(size) + " entries");
  return j;
}

}  // namespace detail

// -- CycloNum -----------------------------------------------------------------

inline json to_json(const CycloNum& c) {
  json coeffs = json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(r.str());
  return {{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

inline CycloNum cyclo_from_json(const json& j, const std::string& where = "number") {
  const json& n = detail::field(j, "conductor", where);
  if (!n.is_number_integer() || n.get<long>() < 1) detail::bad(where + ".conductor", "expected a positive integer");
  const long cond = n.get<long>();
  const json& cs = detail::field(j, "coeffs", where);
  const auto phi = static_cast<std::size_t>(euler_phi(cond));
  detail::array_at(cs, where + ".coeffs");
  if (cs.size() != phi) {
    detail::bad(where + ".coeffs", "expected exactly phi(" + std::to_string(cond) + ") = " + std::to_string(phi) +
                                       " entries, got " + std::to_string(cs.size()));
  }
  std::vector<Rat> v;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const std::string w = where + ".coeffs[" + std::to_string(k) + "]";
    try {
      if (cs[k].is_string()) {
        v.push_back(Rat::parse(cs[k].get<std::string>()));
      } else if (cs[k].is_number_integer()) {
        v.push_back(Rat(cs[k].get<long long>()));
      } else {
        detail::bad(w, "expected a rational string \"p/q\"");
      }
    } catch (const DomainError& e) {
      detail::bad(w, e.what());
    }
  }
  return CycloNum(cond, v);
}

// -- structure constants ------------------------------------------------------

inline json to_json(const FDBialgebra& a) {
  json j;
  j["dim"] = a.dim();
  j["conductor"] = a.conductor();
  j["labels"] = a.labels();
  if (a.has_algebra()) {
    json mult = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        for (const Term& t : a.product(i, k)) mult.push_back({i, k, t.index, to_json(t.coef)});
      }
    }
    j["mult"] = std::move(mult);
    json unit = json::array();
    for (const Term& t : a.unit()) unit.push_back({t.index, to_json(t.coef)});
    j["unit"] = std::move(unit);
  }
  if (a.has_coalgebra()) {
    json comult = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (const Term2& t : a.coproduct(i)) comult.push_back({i, t.left, t.right, to_json(t.coef)});
    }
    j["comult"] = std::move(comult);
    json counit = json::array();
    for (const CycloNum& c : a.counit()) counit.push_back(to_json(c));
    j["counit"] = std::move(counit);
  }
  if (a.has_antipode()) {
    json s = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (const Term& t : a.antipode(i)) s.push_back({i, t.index, to_json(t.coef)});
    }
    j["antipode"] = std::move(s);
  }
  return j;
}

inline FDBialgebra bialgebra_from_json(const json& j) {
  using detail::bad;
  const std::size_t dim = detail::index_at(detail::field(j, "dim", "$"), "$.dim", 1U << 20);
  if (dim == 0) bad("$.dim", "dimension must be positive");
  const json& cj = detail::field(j, "conductor", "$");
  if (!cj.is_number_integer() || cj.get<long>() < 1) bad("$.conductor", "expected a positive integer");
  const long cond = cj.get<long>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& lj = detail::array_at(j["labels"], "$.labels", dim);
    for (std::size_t k = 0; k < dim; ++k) {
      if (!lj[k].is_string()) bad("$.labels[" + std::to_string(k) + "]", "expected a string");
      labels.push_back(lj[k].get<std::string>());
    }
  }
  FDBialgebra a(dim, cond, std::move(labels));
  auto num = [&](const json& v, const std::string& where) {
    CycloNum c = cyclo_from_json(v, where);
    if (cond % c.conductor() != 0) {
      bad(where, "conductor " + std::to_string(c.conductor()) + " does not divide " + std::to_string(cond));
    }
    return c.embed(cond);
  };

  if (j.contains("mult") != j.contains("unit")) bad("$", "\"mult\" and \"unit\" must appear together");
  if (j.contains("mult")) {
    std::vector<SparseVec> table(dim * dim);
    const json& mj = detail::array_at(j["mult"], "$.mult");
    for (std::size_t r = 0; r < mj.size(); ++r) {
      const std::string w = "$.mult[" + std::to_string(r) + "]";
      detail::array_at(mj[r], w, 4);
      const std::size_t i = detail::index_at(mj[r][0], w + "[0]", dim);
      const std::size_t k = detail::index_at(mj[r][1], w + "[1]", dim);
      const std::size_t l = detail::index_at(mj[r][2], w + "[2]", dim);
      table[i * dim + k].push_back({l, num(mj[r][3], w + "[3]")});
    }
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) a.set_product(i, k, std::move(table[i * dim + k]));
    }
    SparseVec unit;
    const json& uj = detail::array_at(j["unit"], "$.unit");
    for (std::size_t r = 0; r < uj.size(); ++r) {
      const std::string w = "$.unit[" + std::to_string(r) + "]";
      detail::array_at(uj[r], w, 2);
      unit.push_back({detail::index_at(uj[r][0], w + "[0]", dim), num(uj[r][1], w + "[1]")});
    }
    a.set_unit(std::move(unit));
  }
  if (j.contains("comult") != j.contains("counit")) bad("$", "\"comult\" and \"counit\" must appear together");
  if (j.contains("comult")) {
    std::vector<SparseTensor> co(dim);
    const json& dj = detail::array_at(j["comult"], "$.comult");
    for (std::size_t r = 0; r < dj.size(); ++r) {
      const std::string w = "$.comult[" + std::to_string(r) + "]";
      detail::array_at(dj[r], w, 4);
      const std::size_t i = detail::index_at(dj[r][0], w + "[0]", dim);
      co[i].push_back({detail::index_at(dj[r][1], w + "[1]", dim), detail::index_at(dj[r][2], w + "[2]", dim),
                       num(dj[r][3], w + "[3]")});
    }
    for (std::size_t i = 0; i < dim; ++i) a.set_coproduct(i, std::move(co[i]));
    std::vector<CycloNum> eps;
    const json& ej = detail::array_at(j["counit"], "$.counit", dim);
    for (std::size_t k = 0; k < dim; ++k) eps.push_back(num(ej[k], "$.counit[" + std::to_string(k) + "]"));
    a.set_counit(std::move(eps));
  }
  if (j.contains("antipode")) {
    std::vector<SparseVec> s(dim);
    const json& sj = detail::array_at(j["antipode"], "$.antipode");
    for (std::size_t r = 0; r < sj.size(); ++r) {
      const std::string w = "$.antipode[" + std::to_string(r) + "]";
      detail::array_at(sj[r], w, 3);
      const std::size_t i = detail::index_at(sj[r][0], w + "[0]", dim);
      s[i].push_back({detail::index_at(sj[r][1], w + "[1]", dim), num(sj[r][2], w + "[2]")});
    }
    for (std::size_t i = 0; i < dim; ++i) a.set_antipode(i, std::move(s[i]));
  }
  return a;
}

// -- presentations ------------------------------------------------------------

inline json to_json(const MonomialPresentation& p) {
  const Quiver& q = p.quiver();
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) arrows.push_back({a.source, a.target});
  json forbidden = json::array();
  for (const Path& f : p.forbidden()) forbidden.push_back(f.arrows);
  return {{"vertices", q.vertex_count()}, {"arrows", std::move(arrows)}, {"forbidden", std::move(forbidden)},
          {"bound", p.bound()}};
}

inline MonomialPresentation presentation_from_json(const json& j) {
  using detail::bad;
  const std::size_t n = detail::index_at(detail::field(j, "vertices", "$"), "$.vertices", 1U << 16);
  std::vector<Arrow> arrows;
  const json& aj = detail::array_at(detail::field(j, "arrows", "$"), "$.arrows");
  for (std::size_t k = 0; k < aj.size(); ++k) {
    const std::string w = "$.arrows[" + std::to_string(k) + "]";
    detail::array_at(aj[k], w, 2);
    arrows.push_back({detail::index_at(aj[k][0], w + "[0]", n), detail::index_at(aj[k][1], w + "[1]", n)});
  }
  const std::size_t bound = detail::index_at(detail::field(j, "bound", "$"), "$.bound", 1U << 16);
  std::vector<Path> forbidden;
  if (j.contains("forbidden")) {
    const json& fj = detail::array_at(j["forbidden"], "$.forbidden");
    for (std::size_t k = 0; k < fj.size(); ++k) {
      const std::string w = "$.forbidden[" + std::to_string(k) + "]";
      detail::array_at(fj[k], w);
      if (fj[k].empty()) bad(w, "a forbidden path needs at least one arrow");
      Path p;
      for (std::size_t r = 0; r < fj[k].size(); ++r) {
        p.arrows.push_back(detail::index_at(fj[k][r], w + "[" + std::to_string(r) + "]", arrows.size()));
      }
      p.start = arrows[p.arrows.front()].source;
      forbidden.push_back(std::move(p));
    }
  }
  try {
    return MonomialPresentation(Quiver(n, std::move(arrows)), std::move(forbidden), bound);
  } catch (const DomainError& e) {
    bad("$", e.what());
  }
}

// -- group data ---------------------------------------------------------------

inline json to_json(const GroupDatum& a) {
  json chi = json::array();
  for (const RootOfUnity& c : a.chi) chi.push_back(to_json(c.value()));
  return {{"cayley", a.group.table()}, {"g", a.g}, {"chi", std::move(chi)}, {"mu", to_json(a.mu)},
          {"labels", a.group.labels()}};
}

inline GroupDatum datum_from_json(const json& j) {
  using detail::bad;
  const json& cj = detail::array_at(detail::field(j, "cayley", "$"), "$.cayley");
  const std::size_t n = cj.size();
  if (n == 0) bad("$.cayley", "empty table");
  CayleyTable table(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string w = "$.cayley[" + std::to_string(r) + "]";
    detail::array_at(cj[r], w, n);
    for (std::size_t c = 0; c < n; ++c) table[r].push_back(detail::index_at(cj[r][c], w + "[" + std::to_string(c) + "]", n));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& lj = detail::array_at(j["labels"], "$.labels", n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!lj[k].is_string()) bad("$.labels[" + std::to_string(k) + "]", "expected a string");
      labels.push_back(lj[k].get<std::string>());
    }
  }
  GroupDatum a;
  try {
    a.group = FiniteGroup(std::move(table), std::move(labels));
  } catch (const DomainError& e) {
    bad("$.cayley", e.what());
  }
  a.g = detail::index_at(detail::field(j, "g", "$"), "$.g", n);
  const json& xj = detail::array_at(detail::field(j, "chi", "$"), "$.chi", n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string w = "$.chi[" + std::to_string(k) + "]";
    auto root = RootOfUnity::recognize(cyclo_from_json(xj[k], w));
    if (!root) bad(w, "not a root of unity");
    a.chi.push_back(*root);
  }
  a.mu = cyclo_from_json(detail::field(j, "mu", "$"), "$.mu");
  return a;
}

}  // namespace monohopf
