#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "expression.hpp"
#include "tcs/group.hpp"
#include "tcs/invariants.hpp"
#include "tcs/io.hpp"
#include "tcs/products.hpp"
#include "tcs/spaces.hpp"

namespace fs = std::filesystem;
using namespace tcs;
using namespace tcs::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "tcs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tcs-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

// Runs the installed binary through the shell; returns the exit status.
int run_binary(const std::string& args, const std::string& stdout_file) {
  const std::string cmd = std::string("'") + TCS_BINARY + "' " + args + " > '" + stdout_file + "' 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Parse, NestedCalls) {
  auto e = parse("Omega(K(Z/2,2))");
  EXPECT_EQ(e.head, "Omega");
  ASSERT_EQ(e.args.size(), 1u);
  EXPECT_EQ(e.args[0].head, "K");
  EXPECT_EQ(e.args[0].args[0].head, "Z/2");
  EXPECT_EQ(e.args[0].args[1].head, "2");
  EXPECT_NO_THROW(elaborate(e));

  auto h = parse(" Hom( B(Z/2) ,\n B(Z/2) ) ");
  EXPECT_EQ(h.head, "Hom");
  EXPECT_EQ(h.text(), "Hom(B(Z/2),B(Z/2))");
  EXPECT_EQ(h.args[1].line, 2);
  EXPECT_EQ(h.args[1].column, 2);
}

TEST(Parse, QuotedAtoms) {
  auto e = parse("Nerve(\"my groupoid.json\")");
  EXPECT_TRUE(e.args[0].quoted);
  EXPECT_EQ(e.args[0].head, "my groupoid.json");
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  try {
    parse("Prod(Fin(2),\n  Fin(3)");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 9);
  }
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("Fin(2) Fin(3)"), SyntaxError);
  EXPECT_THROW(parse("Fin(2,)"), SyntaxError);
  EXPECT_THROW(parse("\"open"), SyntaxError);
}

TEST(Elaborate, ArityAndSorts) {
  EXPECT_THROW(elaborate(parse("Fin(2,3)")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Fin(x)")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Prod(Fin(2))")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Frob(2)")), SyntaxError);
  EXPECT_THROW(elaborate(parse("B(Q/8)")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Fst(Fin(2))")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Pullback(Fin(1),Fin(1))")), SyntaxError);
  EXPECT_THROW(elaborate(parse("Id(Fin(1))")), SyntaxError);
  EXPECT_NO_THROW(elaborate(parse("Prod(Fin(1),Fin(2),Fin(3))")));
  EXPECT_NO_THROW(elaborate(parse("PointedHom(B(Z/2),0,B(Z/2),0)")));
  EXPECT_NO_THROW(elaborate(parse("Omega(B(Z/2))")));
}

TEST(Elaborate, EilenbergMacLaneNeedsAbelianAboveOne) {
  EXPECT_THROW(elaborate(parse("K(S_3,2)")), NonAbelian);
  EXPECT_NO_THROW(elaborate(parse("K(S_3,1)")));
  EXPECT_NO_THROW(elaborate(parse("K(Z/2xZ/2,2)")));
}

TEST(Evaluate, FinTwo) {
  Evaluator ev;
  auto x = evaluate("Fin(2)", ev);
  EXPECT_EQ(x.data().size(0), 2u);
  EXPECT_EQ(pi0(x).count(), 2u);
  ASSERT_EQ(ev.log().size(), 1u);
  EXPECT_EQ(ev.log()[0].expression, "Fin(2)");
  EXPECT_EQ(ev.log()[0].sizes[0], 2u);
}

TEST(Evaluate, ProductOfClassifyingSpacesHasCyclicFundamentalGroup) {
  Evaluator ev;
  auto x = evaluate("Prod(B(Z/2),B(Z/3))", ev);
  auto g = pi_n(x, 0, 1).group();
  // Oracle: Z/2 x Z/3 is abelian of order 6 with an element of order 6.
  ASSERT_EQ(g.size(), 6);
  EXPECT_TRUE(g.is_abelian());
  bool cyclic = false;
  for (int a = 0; a < g.size(); ++a) {
    int order = 1;
    for (int p = a; p != g.identity(); p = g.multiply(p, a)) ++order;
    cyclic = cyclic || order == 6;
  }
  EXPECT_TRUE(cyclic);
  EXPECT_EQ(ev.log().size(), 3u);
}

TEST(Evaluate, SymmetricUniverseOfTwoHasThreeComponents) {
  Evaluator ev;
  EXPECT_EQ(pi0(evaluate("SymUniverse(2)", ev)).count(), 3u);
}

TEST(Evaluate, MapConstructors) {
  Evaluator ev;
  // homotopy fibre of the evaluation Hom(2, 3) -> 3 over a point: 3 maps
  auto f = evaluate("Pullback(Ev(Hom(Fin(2),Fin(3)),0),Point(Fin(3),1))", ev);
  EXPECT_EQ(pi0(f).count(), 3u);
  auto loops = evaluate("Pullback(Point(B(Z/3)),Point(B(Z/3)))", ev);
  EXPECT_EQ(pi0(loops).count(), 3u);
  auto pi = evaluate("Pi(Fst(Prod(Fin(2),Fin(3))),Terminal(Fin(2)))", ev);
  EXPECT_EQ(pi0(pi).count(), 9u);
  EXPECT_EQ(pi0(evaluate("Pullback(Inl(Sum(Fin(1),Fin(1))),Inr(Sum(Fin(1),Fin(1))))", ev)).count(),
            0u);
}

TEST(Evaluate, EngineErrorsNameTheSubexpression) {
  Evaluator ev;
  try {
    evaluate("Omega(Prod(Fin(2),Fin(2)),9)", ev);
    FAIL() << "expected an evaluation error";
  } catch (const EvaluationError& e) {
    EXPECT_NE(std::string(e.what()).find("Omega(Prod(Fin(2),Fin(2)),9)"), std::string::npos);
  }
}

TEST(Commands, CardOfBS3) {
  auto r = run_args({"card", "B(S_3)"});
  EXPECT_EQ(r.code, 0);
  // Oracle: one component with pi_1 of order 6.
  EXPECT_EQ(r.out, "1/6\n");
}

TEST_F(CliFiles, EquivalenceWithWitness) {
  const auto w = path("w.json");
  auto r = run_args({"equiv", "Omega(K(Z/2,2))", "B(Z/2)", "-o", w});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  ASSERT_TRUE(fs::exists(w));
  auto j = read_json(w);
  auto source = complex_from_json(j["source"]).data;
  auto target = complex_from_json(j["target"]).data;
  auto f = map_from_json(j["map"], source, target);
  EXPECT_EQ(f.check(), "");
  EXPECT_TRUE(is_equivalence(f).equivalent);
}

TEST_F(CliFiles, NonIsomorphicGroupsGiveExitOne) {
  auto r = run_args({"equiv", "B(Z/4)", "Prod(B(Z/2),B(Z/2))", "-o", path("w.json")});
  EXPECT_EQ(r.code, 1) << r.out << r.err;
  EXPECT_FALSE(fs::exists(path("w.json")));
}

TEST_F(CliFiles, BuildThenPiMatchesInProcess) {
  const auto f = path("x.json");
  ASSERT_EQ(run_args({"build", "Prod(B(Z/2),B(Z/3))", "-o", f}).code, 0);
  auto from_file = run_args({"pi", "-n", "1", f});
  auto from_expr = run_args({"pi", "-n", "1", "Prod(B(Z/2),B(Z/3))"});
  ASSERT_EQ(from_file.code, 0);
  Evaluator ev;
  const auto expected = group_table_text(pi_n(evaluate("Prod(B(Z/2),B(Z/3))", ev), 0, 1));
  EXPECT_EQ(from_file.out, expected);
  EXPECT_EQ(from_expr.out, expected);
  EXPECT_EQ(load_kan_complex(f).data(), product(classifying_space(*builtin_group("Z/2")),
                                                classifying_space(*builtin_group("Z/3")))
                                            .data());
}

TEST_F(CliFiles, BuildIsDeterministic) {
  auto a = run_args({"build", "Hom(B(Z/2),B(Z/2))"});
  auto b = run_args({"build", "Hom(B(Z/2),B(Z/2))"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST_F(CliFiles, HomWritesTheMappingComplex) {
  const auto h = path("h.json");
  ASSERT_EQ(run_args({"hom", "B(Z/2)", "B(Z/2)", "-o", h}).code, 0);
  auto r = run_args({"pi", "-n", "0", h});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("pi_0 has 2 element(s)", 0), 0u) << r.out;
}

TEST_F(CliFiles, FileArgumentsForGroupsAndActions) {
  write_json(path("g.json"), group_to_json(*builtin_group("Z/3")));
  write_json(path("swap.json"), nlohmann::json{{"group", "Z/2"},
                                               {"space", nlohmann::json{{"discrete", 2}}},
                                               {"vertices", {{0, 1}, {1, 0}}}});
  auto r = run_args({"card", "B(" + path("g.json") + ")"});
  EXPECT_EQ(r.out, "1/3\n") << r.err;
  r = run_args({"card", "Quotient(" + path("swap.json") + ")"});
  EXPECT_EQ(r.out, "1\n") << r.err;
  r = run_args({"pi", "-n", "0", "Quotient(" + path("swap.json") + ")"});
  EXPECT_EQ(r.out.rfind("pi_0 has 1 element(s)", 0), 0u) << r.out;
}

TEST(Commands, ErrorsExitTwo) {
  EXPECT_EQ(run_args({}).code, 2);
  EXPECT_EQ(run_args({"frobnicate"}).code, 2);
  EXPECT_EQ(run_args({"pi", "Fin(2)"}).code, 2);  // missing -n
  EXPECT_EQ(run_args({"card", "Prod(Fin(2)"}).code, 2);
  EXPECT_EQ(run_args({"card", "K(S_3,2)"}).code, 2);
  EXPECT_EQ(run_args({"--format", "xml", "card", "Fin(1)"}).code, 2);
  EXPECT_EQ(run_args({"pi", "-n", "1", "--basepoint", "7", "Fin(2)"}).code, 2);
  auto capped = run_args({"--cap", "3", "card", "B(S_3)"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("inconclusive"), std::string::npos);
  EXPECT_EQ(run_args({"--help"}).code, 0);
}

TEST(Commands, MachineFormat) {
  auto r = run_args({"--format", "machine", "pi", "-n", "1", "B(Z/2)"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["group"], "Z/2");
  r = run_args({"--format", "machine", "card", "K(Z/2,2)"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["cardinality"], "2");
}

TEST(Commands, LawsSuite) {
  auto r = run_args({"laws", "--seed", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed, 0 inconclusive"), std::string::npos);
  EXPECT_EQ(r.out, run_args({"laws", "--seed", "2"}).out);
  auto capped = run_args({"laws", "--seed", "2", "--cap", "1"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_EQ(capped.out.find(" FAIL"), std::string::npos);
}

TEST_F(CliFiles, BinaryExitCodesAndEnvironment) {
  const auto out = path("out.txt");
  EXPECT_EQ(run_binary("card 'B(S_3)'", out), 0);
  EXPECT_EQ(slurp(out), "1/6\n");
  EXPECT_EQ(run_binary("equiv 'B(Z/4)' 'Prod(B(Z/2),B(Z/2))' -o " + path("w.json"), out), 1);
  EXPECT_EQ(run_binary("equiv 'Omega(K(Z/2,2))' 'B(Z/2)' -o " + path("w.json"), out), 0);
  EXPECT_TRUE(fs::exists(path("w.json")));
  EXPECT_EQ(run_binary("card 'K(S_3,2)'", out), 2);
  EXPECT_EQ(run_binary("--bogus", out), 2);
  ::setenv("TCS_SIMPLEX_CAP", "3", 1);
  EXPECT_EQ(run_binary("card 'B(S_3)'", out), 2);
  EXPECT_EQ(run_binary("--cap 100000 card 'B(S_3)'", out), 0);
  ::unsetenv("TCS_SIMPLEX_CAP");
}
