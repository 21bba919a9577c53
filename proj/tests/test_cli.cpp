#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "monohopf/cli.hpp"

using namespace monohopf;

namespace {

const RootOfUnity kMinusOne(2, 1);

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("monohopf_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Serialize, BialgebraRoundTrip) {
  const FDBialgebra a = a_n_d_mu_q(FamilyParams::make(6, RootOfUnity(3, 1), CycloNum(Rat::parse("-2/3"))));
  const json j = to_json(a);
  const FDBialgebra b = bialgebra_from_json(j);
  EXPECT_TRUE(same_structure(a, b));
  EXPECT_EQ(a.labels(), b.labels());
  EXPECT_EQ(to_json(b), j);
  EXPECT_EQ(bialgebra_from_json(json::parse(j.dump())).dim(), a.dim());
}

TEST(Serialize, AlgebraOnly) {
  const FDBialgebra m = matrix_algebra(2);
  const FDBialgebra b = bialgebra_from_json(to_json(m));
  EXPECT_TRUE(same_structure(m, b));
  EXPECT_FALSE(b.has_coalgebra());
}

TEST(Serialize, CycloNum) {
  const CycloNum z = RootOfUnity(12, 5).value().scaled(Rat::parse("7/3"));
  EXPECT_EQ(cyclo_from_json(to_json(z), "$"), z);
  const json bad = {{"conductor", 4}, {"coeffs", {"1"}}};
  EXPECT_THROW(cyclo_from_json(bad, "$.x"), InputError);
}

TEST(Serialize, ErrorsNameTheLocation) {
  json j = to_json(a_n_d_mu_q(FamilyParams::make(2, kMinusOne, CycloNum(0))));
  j["mult"][3][2] = 99;
  try {
    bialgebra_from_json(j);
    FAIL() << "accepted an out-of-range index";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("$.mult[3][2]"), std::string::npos) << e.what();
  }
  json k = to_json(a_n_d_mu_q(FamilyParams::make(2, kMinusOne, CycloNum(0))));
  k.erase("dim");
  EXPECT_THROW(bialgebra_from_json(k), InputError);
}

TEST(Serialize, DatumAndPresentation) {
  const FiniteGroup G = FiniteGroup::abelian({2, 4});
  const GroupDatum a{G, 2, abelian_character(G, {RootOfUnity(1, 0), RootOfUnity(4, 1)}), CycloNum(0)};
  const GroupDatum b = datum_from_json(to_json(a));
  EXPECT_EQ(b.group.table(), a.group.table());
  EXPECT_EQ(b.group.labels(), a.group.labels());
  EXPECT_EQ(b.g, a.g);
  EXPECT_EQ(b.chi, a.chi);
  EXPECT_EQ(b.mu, a.mu);

  const MonomialPresentation p = MonomialPresentation::truncated(cycle_quiver(3), 2);
  const MonomialPresentation q = presentation_from_json(to_json(p));
  EXPECT_EQ(q.forbidden(), p.forbidden());
  EXPECT_EQ(q.bound(), p.bound());
  EXPECT_EQ(q.quiver().arrows(), p.quiver().arrows());
}

TEST(Cli, ConstructThenVerify) {
  const Outcome c = run({"construct", "A", "2", "2", "0", "-1"});
  ASSERT_EQ(c.code, 0) << c.err;
  const Outcome v = run({"verify", "-"}, c.out);
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("antipode: pass"), std::string::npos);

  const Outcome compact = run({"construct", "A(2,2,0,1,2)"});
  EXPECT_EQ(compact.out, c.out);
}

TEST(Cli, VerifyReportsCorruption) {
  json j = json::parse(run({"construct", "A", "4", "2", "1", "-1"}).out);
  j["mult"][5][3]["coeffs"][0] = "3/1";
  const Outcome v = run({"verify", temp_file("corrupt.json", j.dump())});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("FAIL"), std::string::npos);
  EXPECT_NE(v.out.find(" at ("), std::string::npos);
}

TEST(Cli, PrintedPathAntipodeFails) {
  const Outcome c = run({"construct", "C", "4", "2", "1", "-1", "--antipode", "printed"});
  ASSERT_EQ(c.code, 0);
  const Outcome v = run({"verify", "-"}, c.out);
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("antipode: FAIL"), std::string::npos);
}

TEST(Cli, Decompose) {
  const Outcome r = run({"decompose", "A", "4", "2", "1", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "blocks: TruncatedCycle(2), MatrixAlgebra(2)");

  const Outcome j = run({"decompose", "A", "4", "2", "1", "-1", "--json"});
  ASSERT_EQ(j.code, 0);
  const json parsed = json::parse(j.out);
  EXPECT_EQ(parsed["blocks"].size(), 2u);
  EXPECT_EQ(parsed["blocks"][1]["type"], "MatrixAlgebra(2)");
  EXPECT_TRUE(parsed["verified"].get<bool>());
}

TEST(Cli, Classify) {
  const Outcome r = run({"classify", "A", "4", "2", "1", "-1", "A", "4", "2", "4", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("isomorphic(delta=2)"), std::string::npos) << r.out;
  const Outcome n = run({"classify", "A", "4", "2", "0", "-1", "A", "4", "2", "1", "-1"});
  EXPECT_NE(n.out.find("not-isomorphic"), std::string::npos);
  const Outcome e = run({"classify", "A", "4", "2", "1", "-1", "A", "4", "2", "13", "-1", "--conductor-bound", "8"});
  EXPECT_NE(e.out.find("isomorphic-over-extension"), std::string::npos);
}

TEST(Cli, GroupData) {
  const Outcome c = run({"construct", "A", "6", "3", "1", "z3"});
  const Outcome ind = run({"group-data", "induce", "-"}, c.out);
  ASSERT_EQ(ind.code, 0) << ind.err;
  const std::string datum = temp_file("datum.json", ind.out);
  EXPECT_EQ(run({"group-data", "validate", datum}).code, 0);
  EXPECT_EQ(run({"group-data", "split", datum}).code, 0);
  EXPECT_EQ(run({"group-data", "shape", datum}).code, 0);
  EXPECT_EQ(run({"group-data", "classify", datum, datum}).code, 0);
  const Outcome b = run({"group-data", "build", datum});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(run({"verify", "-"}, b.out).code, 0);

  const FiniteGroup G = FiniteGroup::cyclic(4);
  const GroupDatum z4{G, 2, abelian_character(G, {RootOfUnity(4, 1)}), CycloNum(0)};
  const Outcome s = run({"group-data", "split", temp_file("z4.json", to_json(z4).dump())});
  EXPECT_EQ(s.code, 1);
  EXPECT_NE(s.out.find("nontrivial"), std::string::npos);

  GroupDatum invalid = z4;
  invalid.mu = CycloNum(1);
  EXPECT_EQ(run({"group-data", "validate", temp_file("bad.json", to_json(invalid).dump())}).code, 1);
}

TEST(Cli, LinkQuiverAndFrobenius) {
  const Outcome c = run({"construct", "C", "4", "2", "0", "-1"});
  const Outcome l = run({"link-quiver", "-"}, c.out);
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("arrows (4)"), std::string::npos);
  EXPECT_NE(l.out.find("components (1)"), std::string::npos);

  const std::string pres = R"({"vertices": 2, "arrows": [[0,1],[1,0]], "forbidden": [[0,1],[1,0]], "bound": 2})";
  const Outcome f = run({"frobenius", "-"}, pres);
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("TruncatedCycle(2, 2)"), std::string::npos) << f.out;
  EXPECT_NE(f.out.find("oracle: frobenius"), std::string::npos);

  const Outcome a2 = run({"frobenius", "-", "--seed", "5"}, R"({"vertices": 2, "arrows": [[0,1]], "bound": 2})");
  EXPECT_EQ(a2.code, 0);
  EXPECT_NE(a2.out.find("not Frobenius"), std::string::npos);
  EXPECT_NE(a2.out.find("inconclusive"), std::string::npos);
}

TEST(Cli, ExportIsCanonical) {
  const Outcome c = run({"construct", "C", "6", "3", "1", "z3^2"});
  const Outcome e = run({"export", "-"}, c.out);
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, c.out);
  const Outcome pretty = run({"export", "-"}, json::parse(c.out).dump(4));
  EXPECT_EQ(pretty.out, c.out);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct", "A", "4", "3", "1", "-1"}).code, 2);  // -1 has order 2
  EXPECT_EQ(run({"construct", "A", "6", "4", "1", "z4"}).code, 2);  // 4 does not divide 6
  EXPECT_EQ(run({"construct", "A", "4", "2", "x", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "-", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "/nonexistent/file.json"}).code, 2);

  const Outcome m = run({"verify", "-"}, "{\"mult\": [");
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.err.find("malformed JSON"), std::string::npos);

  const Outcome bad = run({"verify", "-"}, R"({"dim": 2, "conductor": 1, "mult": [[0, 0, 5, {"conductor": 1, "coeffs": ["1"]}]],
                                                 "unit": [[0, {"conductor": 1, "coeffs": ["1"]}]]})");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("$.mult[0][2]"), std::string::npos) << bad.err;

  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SweepIsDeterministic) {
  const std::vector<std::string> args{"sweep", "--only", "3,4,11", "--max-n", "6", "--seed", "3"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("[PASS] 4."), std::string::npos);
}
