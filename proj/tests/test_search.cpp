#include <doctest.h>

#include "hgg/hyperbolic.hpp"
#include "hgg/rootgroups.hpp"
#include "hgg/search.hpp"
#include "test_support.hpp"

using namespace hgg;
using testing::E;
using testing::I6;
using testing::printed;

namespace {

struct Gens {
  RationalMatrix a, b, c;
  Rational l1, l2;
};

Gens printed_gens(const char* label) {
  auto l = verify_antidiagonal(printed(label, "X"), printed(label, "Omega1"));
  REQUIRE(l);
  return {printed(label, "a"), printed(label, "b"), printed(label, "c"), (*l)[0], (*l)[1]};
}

}  // namespace

TEST_CASE("highest root found at small depth") {
  Gens c1 = printed_gens("C-1");
  SearchBudget budget;
  SearchOutcome out = search_certificates(c1.a, c1.b, c1.c, c1.l1, c1.l2, budget);
  REQUIRE(out.highest);
  CHECK(out.highest->value == I6() + E(1, 6, 3));
  CHECK(out.highest->parameter == 3);

  Gens c59 = printed_gens("C-59");
  budget.max_depth = 1;
  out = search_certificates(c59.a, c59.b, c59.c, c59.l1, c59.l2, budget);
  REQUIRE(out.highest);
  CHECK(out.highest->text == "c");
  CHECK(out.highest->value == I6() - E(1, 6, 3));
}

TEST_CASE("zero node budget finds nothing") {
  Gens c1 = printed_gens("C-1");
  SearchBudget budget;
  budget.max_nodes = 0;
  SearchOutcome out = search_certificates(c1.a, c1.b, c1.c, c1.l1, c1.l2, budget);
  CHECK_FALSE(out.highest);
  CHECK_FALSE(out.certificate("x", {}, {}, std::nullopt, CommutatorConvention::ProductFirst));
}

TEST_CASE("results do not depend on the worker count") {
  Gens g = printed_gens("C-42");
  SearchBudget one, four;
  one.max_depth = four.max_depth = 2;
  four.jobs = 4;
  auto a = unipotent_census(g.a, g.b, g.c, 2, one);
  auto b = unipotent_census(g.a, g.b, g.c, 2, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].value == b[i].value);
  }
  auto s1 = search_certificates(g.a, g.b, g.c, g.l1, g.l2, one);
  auto s4 = search_certificates(g.a, g.b, g.c, g.l1, g.l2, four);
  CHECK(s1.nodes == s4.nodes);
  CHECK(bool(s1.highest) == bool(s4.highest));
}

TEST_CASE("a larger budget keeps earlier hits") {
  Gens g = printed_gens("C-1");
  SearchBudget small, big;
  small.max_depth = 1;
  big.max_depth = 2;
  auto s = search_certificates(g.a, g.b, g.c, g.l1, g.l2, small);
  auto l = search_certificates(g.a, g.b, g.c, g.l1, g.l2, big);
  REQUIRE(s.highest);
  REQUIRE(l.highest);
  CHECK_FALSE(canonical_less(s.highest->text, l.highest->text));
}

TEST_CASE("hits re-verify through the certifier") {
  for (const char* label : {"C-1", "C-10", "C-59"}) {
    CAPTURE(label);
    Certificate fixture = load_fixture(label);
    Gens g = printed_gens(label);
    SearchOutcome out = search_certificates(g.a, g.b, g.c, g.l1, g.l2, SearchBudget{});
    auto probe = out.probe_certificate(label, fixture.alpha, fixture.beta, fixture.basis_matrix,
                                       CommutatorConvention::ProductFirst);
    REQUIRE(probe);
    VerificationReport rep = verify_certificate(*probe);
    CHECK(rep.passed(Stage::HighestRoot));
    CHECK(rep.q1 == out.highest->value);
  }
}

TEST_CASE("unipotent census") {
  Gens c1 = printed_gens("C-1");
  auto census = unipotent_census(c1.a, c1.b, c1.c, 1);
  bool c_lowest = false;
  for (const auto& e : census) c_lowest |= e.word == "c" && e.classification == "t1^-2";
  CHECK(c_lowest);

  auto trivial = unipotent_census(I6(), I6(), I6(), 2);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].value == I6());
  CHECK(trivial[0].classification == "identity");

  Gens c10 = printed_gens("C-10");
  bool q1_highest = false;
  for (const auto& e : unipotent_census(c10.a, c10.b, c10.c, 2))
    q1_highest |= e.classification == "t1^2" && e.value == printed("C-10", "q1");
  CHECK(q1_highest);
}
