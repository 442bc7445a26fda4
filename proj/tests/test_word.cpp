#include <doctest.h>

#include "hgg/error.hpp"
#include "hgg/word.hpp"
#include "test_support.hpp"

using namespace hgg;
using testing::E;
using testing::I6;
using testing::printed;

namespace {

std::map<std::string, RationalMatrix> env_of(const char* label) {
  return {{"a", printed(label, "a")}, {"b", printed(label, "b")}, {"c", printed(label, "c")}};
}

}  // namespace

TEST_CASE("grammar round trip") {
  const char* text =
      "let w1 = comm(a, b^-1);\n"
      "let w2 = a^3 c a^-3;\n"
      "let w3 = (w1 w2)^-15570 inv(c);\n"
      "return w3^77849, comm(w1, inv(w2 c))\n";
  WordProgram p = parse_program(text);
  CHECK(p.bindings.size() == 3);
  CHECK(p.results.size() == 2);
  CHECK(p.to_string() == text);
  CHECK(parse_program(p.to_string()) == p);
  CHECK(parse_program("let   x=a  b ;return   x") == parse_program("let x = a b;\nreturn x"));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("let w1 = a b;\nreturn w1 ^");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_program("return comm(a)"), ParseError);
  CHECK_THROWS_AS(parse_program("let a1 = a;\nlet a1 = b;\nreturn a1"), ParseError);
  CHECK_THROWS_AS(parse_program("let inv = a;\nreturn inv"), ParseError);
  CHECK_THROWS_AS(parse_program("let w = a"), ParseError);
  CHECK_THROWS_AS(parse_program("return a, b, c"), ParseError);
  CHECK_THROWS_AS(parse_program("let w = a;\nreturn x").check_names({"a", "b", "c"}), ParseError);
}

TEST_CASE("evaluation") {
  auto env = env_of("C-1");
  auto q1 = evaluate_program(parse_program("return b a^-1"), env, CommutatorConvention::ProductFirst);
  REQUIRE(q1.size() == 1);
  CHECK(q1[0] == I6() + E(1, 6, 3));
  CHECK(q1[0] == printed("C-1", "q1"));

  auto c59 = evaluate_program(parse_program("return c"), env_of("C-59"), CommutatorConvention::ProductFirst);
  CHECK(c59[0] == I6() - E(1, 6, 3));

  CHECK(evaluate_program(parse_program("return ()"), env, CommutatorConvention::ProductFirst)[0] == I6());
  CHECK(evaluate_program(parse_program("return inv(a) a"), env, CommutatorConvention::ProductFirst)[0] == I6());
  CHECK_THROWS_AS(evaluate_program(parse_program("return z"), env, CommutatorConvention::ProductFirst), UnboundName);

  env["s"] = RationalMatrix(6);
  CHECK_THROWS_AS(evaluate_program(parse_program("return s^-1"), env, CommutatorConvention::ProductFirst), Singular);
}

TEST_CASE("bindings are cached and reused") {
  auto env = env_of("C-59");
  const char* text = "let w = comm(a, b);\nlet u = w w^-1 w;\nreturn u, w";
  auto r = evaluate_program(parse_program(text), env, CommutatorConvention::ProductFirst);
  CHECK(r[0] == r[1]);
  CHECK(r[1] == commutator(env["a"], env["b"], CommutatorConvention::ProductFirst));
}

TEST_CASE("C-59 word list gives the printed q2 under x y x^-1 y^-1") {
  Certificate cert = load_fixture("C-59");
  auto env = env_of("C-59");
  env["q1"] = env["b"] * inverse(env["a"]);
  auto r = evaluate_program(cert.program, env, CommutatorConvention::ProductFirst);
  CHECK(r[1] == I6() + E(1, 5, -1080) + E(2, 6, 540));
  auto other = evaluate_program(cert.program, env, CommutatorConvention::InverseFirst);
  CHECK(other[1] != r[1]);
}
