#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "opengames/dsl/cli.hpp"
#include "opengames/dsl/document.hpp"
#include "opengames/dsl/sexpr.hpp"

namespace og::dsl {
namespace {

std::string market_entry_path() { return std::string(OG_DATA_DIR) + "/market_entry.og"; }

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "og");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {code, out.str(), err.str()};
}

TEST(Reader, AtomsListsAndComments) {
  auto forms = read_sexprs("; comment\n(set X (F A)) ; trailing\n(a (b c))");
  ASSERT_EQ(forms.size(), 2u);
  EXPECT_TRUE(forms[0].head_is("set"));
  EXPECT_EQ(forms[0].items[2].items.size(), 2u);
  EXPECT_EQ(forms[1].span.line, 3u);
  EXPECT_EQ(forms[1].to_string(), "(a (b c))");
}

TEST(Reader, ErrorsCarrySpans) {
  try {
    read_sexprs("(set X\n  (F A)");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_NE(std::string(e.what()).find("opened at 1:1"), std::string::npos);
  }
  try {
    read_sexprs("(a)\n  )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 2u);
    EXPECT_EQ(e.span().column, 3u);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Document, SetDeclaration) {
  Document d = parse_document("(set X (F A))");
  ASSERT_EQ(d.sets.count("X"), 1u);
  EXPECT_EQ(d.sets.at("X"), FiniteSet::of_atoms({"F", "A"}));
}

TEST(Document, SumsProductsAndTuples) {
  Document d = parse_document("(set E (sum 1 1)) (set P (prod E E)) (set T ((a b) (in2 *)))");
  EXPECT_EQ(d.sets.at("E").size(), 2u);
  EXPECT_EQ(d.sets.at("P").size(), 4u);
  EXPECT_EQ(d.sets.at("T")[1], Value::tagged(1, Value::unit()));
}

TEST(Document, UndeclaredNameInAnExpression) {
  try {
    parse_document("(set X (F A))\n(game D (decision 1 X))\n(expr E (seq D\n   Missing))");
    FAIL() << "expected a name error";
  } catch (const NameError& e) {
    EXPECT_EQ(e.span().line, 4u);
    EXPECT_EQ(e.span().column, 4u);
  }
}

TEST(Document, DuplicateNames) {
  EXPECT_THROW(parse_document("(set X (F A)) (set X (B))"), NameError);
}

TEST(Document, IllTypedExpression) {
  try {
    parse_document("(set X (F A))\n(game D (decision 1 X))\n(expr E (seq D D))");
    FAIL() << "expected a type error";
  } catch (const TypeError& e) {
    EXPECT_EQ(e.span().line, 3u);
    EXPECT_EQ(e.span().column, 9u);
  }
}

TEST(Document, PayoffTablesMustBeTotal) {
  const char* head = "(set X (F A)) (payoff U ((X) -> (real 1)) ";
  EXPECT_THROW(parse_document(std::string(head) + "(((F) (1))))"), TypeError);
  EXPECT_THROW(parse_document(std::string(head) + "(((F) (1)) ((F) (2)) ((A) (0))))"), TypeError);
  EXPECT_THROW(parse_document(std::string(head) + "(((F) (1)) ((Z) (2))))"), TypeError);
  EXPECT_THROW(parse_document(std::string(head) + "(((F) (1 2)) ((A) (2))))"), TypeError);
  EXPECT_THROW(parse_document(std::string(head) + "(((F) (x)) ((A) (2))))"), ParseError);
  EXPECT_NO_THROW(parse_document(std::string(head) + "(((F) (1/2)) ((A) (-2))))"));
}

TEST(Document, UnknownDeclaration) {
  try {
    parse_document("(sett X (F A))");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Document, MarketEntryFileEvaluatesToTheEntryGame) {
  Document d = parse_document(read(market_entry_path()));
  const OpenGame& h = d.games.at("H").eval();
  EXPECT_EQ(h.src(), unit_diset());
  EXPECT_EQ(h.dst().forward, coproduct_set(unit_set(), unit_set()));
  EXPECT_EQ(h.strategies().size(), 8u);
  const OpenGame& g = d.games.at("G").eval();
  EXPECT_EQ(g.strategies().size(), 4u);
  EXPECT_EQ(d.extensives.count("Tree"), 1u);
  EXPECT_EQ(d.label_of(Value::tagged(1, Value::unit())), std::optional<std::string>("C"));
}

TEST(Document, RoundTrip) {
  Document d = parse_document(read(market_entry_path()));
  std::string printed = print_document(d);
  Document again = parse_document(printed);
  EXPECT_EQ(d, again);
  EXPECT_EQ(print_document(again), printed);
}

TEST(Document, ClassicalDeclarations) {
  Document d = parse_document(
      "(set S (C D))\n"
      "(payoff PD ((S S) -> (real 2)) (((C C) (2 2)) ((C D) (0 3)) ((D C) (3 0)) ((D D) (1 1))))\n"
      "(normal-form N (S S) PD)\n(sequential Q (S S) PD)\n(continuation K PD)");
  EXPECT_EQ(d.normal_forms.count("N"), 1u);
  EXPECT_EQ(d.sequentials.count("Q"), 1u);
  EXPECT_EQ(d.continuations.at("K"), "PD");
  EXPECT_THROW(parse_document("(set S (C D)) (payoff P ((S) -> (real 1)) (((C) (1)) ((D) (0))))"
                              "(normal-form N (S S) P)"),
               TypeError);
}

TEST(Cli, SeparableMarketEntryListsOneProfile) {
  CliRun r = cli({"solve", "--input", market_entry_path(), "--mode", "separable"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["results"]["count"], 1);
  EXPECT_EQ(j["results"]["profiles"][0]["display"], "(C, A, A)");
  for (const char* key : {"command", "input", "seed", "bounds", "results", "witnesses", "elapsed_ms"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["elapsed_ms"].is_null());
}

TEST(Cli, StatesInTextFormat) {
  CliRun r = cli({"solve", "--input", market_entry_path(), "--format", "text"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "H (states, continuation trivial)\n3 profiles\n(Q, F, F)\n(Q, A, F)\n(C, A, A)\n");
}

TEST(Cli, ClassicalModes) {
  CliRun spe = cli({"solve", "--input", market_entry_path(), "--mode", "spe", "--format", "text"});
  ASSERT_EQ(spe.code, 0) << spe.err;
  EXPECT_EQ(spe.out, "Tree (spe)\n1 profile\n(fn(C, A), A)\n");
  CliRun nash = cli({"solve", "--input", market_entry_path(), "--mode", "nash", "--game", "Subgame",
                     "--format", "text"});
  ASSERT_EQ(nash.code, 0) << nash.err;
  EXPECT_EQ(nash.out, "Subgame (nash)\n1 profile\n(A, A)\n");
}

TEST(Cli, NamedContinuation) {
  std::string doc =
      "(set S (C D))\n"
      "(payoff PD ((S S) -> (real 2)) (((C C) (2 2)) ((C D) (0 3)) ((D C) (3 0)) ((D D) (1 1))))\n"
      "(game D1 (decision 1 S)) (game D2 (decision 1 S))\n"
      "(expr T (tensor D1 D2))\n(continuation K PD)\n";
  CliRun r = cli({"solve", "--input", "-", "--continuation", "K", "--format", "text"}, doc);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "T (states, continuation K)\n1 profile\n(D, D)\n");
}

TEST(Cli, NoEquilibriaIsNotAnError) {
  std::string doc =
      "(set S (H T))\n"
      "(payoff MP ((S S) -> (real 2)) (((H H) (1 -1)) ((H T) (-1 1)) ((T H) (-1 1)) ((T T) (1 -1))))\n"
      "(normal-form N (S S) MP)\n";
  CliRun r = cli({"solve", "--input", "-", "--mode", "nash"}, doc);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["results"]["count"], 0);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  CliRun none = cli({"solve"});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("Usage"), std::string::npos);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"solve", "--input", "-"}, "(set X (F A)").code, 2);
  EXPECT_EQ(cli({"solve", "--input", "-"}, "(expr E (seq A B))").code, 2);
  EXPECT_EQ(cli({"solve", "--input", "/nonexistent/file.og"}).code, 2);
  EXPECT_EQ(cli({"solve", "--input", market_entry_path(), "--mode", "bogus"}).code, 2);
  EXPECT_EQ(cli({"solve", "--input", market_entry_path(), "--continuation", "nope"}).code, 2);
}

TEST(Cli, DomainErrorsExitOne) {
  CliRun r = cli({"solve", "--input", market_entry_path(), "--game", "DE"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("trivial continuation"), std::string::npos);
  CliRun b = cli({"solve", "--input", market_entry_path(), "--max-table", "2"});
  EXPECT_EQ(b.code, 1);
}

TEST(Cli, ReportsAreDeterministic) {
  auto a = cli({"solve", "--input", market_entry_path(), "--mode", "separable"});
  auto b = cli({"solve", "--input", market_entry_path(), "--mode", "separable"});
  EXPECT_EQ(a.out, b.out);
  auto l1 = cli({"laws", "--seed", "3", "--trials", "3"});
  auto l2 = cli({"laws", "--seed", "3", "--trials", "3"});
  EXPECT_EQ(l1.code, 0);
  EXPECT_EQ(l1.out, l2.out);
}

TEST(Cli, TimingIsOptIn) {
  auto r = cli({"example", "--timing"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["elapsed_ms"].is_number());
}

TEST(Cli, ExampleReportsTheMediator) {
  auto r = cli({"example"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  auto med = j["results"]["mediator"]["source_update"];
  ASSERT_EQ(med.size(), 2u);
  EXPECT_EQ(med[0]["history"], "Q");
  EXPECT_EQ(med[0]["update"][0], "0");
  EXPECT_EQ(med[1]["history"], "C");
  EXPECT_EQ(med[1]["update"][0], "3");
  EXPECT_EQ(j["results"]["mediator"]["valid"], true);
}

TEST(Cli, PrintRoundTrips) {
  auto r = cli({"print", "--input", market_entry_path()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_document(r.out), parse_document(read(market_entry_path())));
}

}  // namespace
}  // namespace og::dsl
