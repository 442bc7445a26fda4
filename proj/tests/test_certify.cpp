#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hgg/certify.hpp"
#include "hgg/error.hpp"
#include "test_support.hpp"

using namespace hgg;
using testing::E;
using testing::I6;
using testing::printed;

TEST_CASE("fixtures verify") {
  struct Row {
    const char* label;
    Rational y, x, ratio;
  };
  const Row rows[] = {
      {"C-1", 3, 52488, Rational(-1, 2)},
      {"C-42", Rational(Integer("104727556800")), Rational(Integer("17454592800")), Rational(1, 4)},
      {"C-59", -3, -1080, Rational(-1, 2)},
  };
  for (const auto& r : rows) {
    CAPTURE(r.label);
    VerificationReport rep = verify_certificate(load_fixture(r.label));
    CHECK(rep.certified());
    CHECK(rep.y == r.y);
    CHECK(rep.x == r.x);
    CHECK(rep.lambda_ratio() == r.ratio);
    CHECK(rep.q1 == printed(r.label, "q1"));
    CHECK(rep.q2 == printed(r.label, "q2"));
    CHECK(rep.conclusion().rfind("ArithmeticCertified", 0) == 0);
  }
}

TEST_CASE("C-10 as printed: q1 verifies, the q2 word list does not") {
  VerificationReport rep = verify_certificate(load_fixture("C-10"));
  CHECK(rep.passed(Stage::HighestRoot));
  CHECK(rep.y == Rational(3));
  CHECK(rep.lambda_ratio() == 1);
  CHECK(rep.failed == Stage::SecondHighestRoot);

  VerificationReport alt = verify_certificate(load_fixture("C-10-alt"));
  CHECK(alt.certified());
  CHECK(alt.x == Rational(-54));
  CHECK(*alt.q2 == I6() + E(1, 5, -54) + E(2, 6, -54));
}

TEST_CASE("builtin fixtures") {
  auto fx = builtin_fixtures();
  CHECK(fx.size() == 4);
  const Certificate& c42 = fx[2];
  CHECK(c42.label == "C-42");
  CHECK(c42.program.bindings.size() == 20);
  CHECK(c42.program.bindings[17].name == "w18");
  CHECK(c42.program.bindings[18].expr->to_string() == "inv(w15^8 w18)");
  const Certificate& c59 = fx[3];
  bool has_q1_c = false;
  for (const auto& b : c59.program.bindings) has_q1_c |= b.name == "q1" && b.expr->to_string() == "c";
  CHECK(has_q1_c);
  CHECK_THROWS_AS(load_fixture("C-2"), UnknownLabel);
}

TEST_CASE("save and load round trip") {
  auto dir = std::filesystem::temp_directory_path() / "hgg_certify_test";
  std::filesystem::create_directories(dir);
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Certificate cert = load_fixture(name);
    std::string text = save_certificate(cert);
    CHECK(parse_certificate(text) == cert);
    CHECK(save_certificate(parse_certificate(text)) == text);
    auto path = dir / (name + ".cert");
    save_certificate(cert, path);
    CHECK(load_certificate(path) == cert);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("malformed certificates") {
  CHECK_THROWS_AS(parse_certificate(""), ParseError);
  std::string base = save_certificate(load_fixture("C-59"));
  std::string undefined = base;
  undefined.replace(undefined.find("return q1"), 9, "return zz");
  try {
    parse_certificate(undefined);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() > 0);
  }
  std::string bad_alpha = base;
  bad_alpha.replace(bad_alpha.find("alpha: "), 7, "alpha: 2/0,");
  CHECK_THROWS_AS(parse_certificate(bad_alpha), ParseError);
}

TEST_CASE("pipeline failures are reported, not thrown") {
  Certificate c1 = load_fixture("C-1");
  Certificate swapped = c1;
  swapped.program.results[1] = WordExpr::atom("a");
  VerificationReport rep = verify_certificate(swapped);
  CHECK(rep.failed == Stage::SecondHighestRoot);
  CHECK(rep.conclusion().rfind("Failed(q2-second-highest-root)", 0) == 0);

  Certificate minimal;
  minimal.label = "minimal";
  minimal.alpha = c1.alpha;
  minimal.beta = c1.beta;
  minimal.program = parse_program("return comm(a, b), c");
  VerificationReport m = verify_certificate(minimal);
  CHECK_FALSE(m.certified());
  CHECK(m.passed(Stage::BasisAntidiagonal));

  Certificate not_closed = c1;
  not_closed.beta = ParameterVector::parse("1/6,1/3,1/3,2/3,2/3,1/2");
  CHECK(verify_certificate(not_closed).failed == Stage::PairValid);

  for (const auto& name : {"C-1", "C-42", "C-59"}) {
    CAPTURE(name);
    Certificate cert = load_fixture(name);
    cert.program.bindings.pop_back();
    VerificationReport r;
    CHECK_NOTHROW(r = verify_certificate(cert));
    CHECK_FALSE(r.certified());
  }
}

TEST_CASE("verification is deterministic") {
  Certificate cert = load_fixture("C-42");
  CHECK(verify_certificate(cert).to_string() == verify_certificate(cert).to_string());
  CHECK(verify_certificate(cert).to_tsv() == verify_certificate(cert).to_tsv());
}

TEST_CASE("without an explicit basis the constructed one is used") {
  Certificate cert;
  cert.label = "C-59";
  cert.alpha = ParameterVector::parse(testing::find_case("C-59").alpha);
  cert.beta = ParameterVector::parse(testing::find_case("C-59").beta);
  cert.program = parse_program("return c, c");
  VerificationReport rep = verify_certificate(cert);
  CHECK(rep.passed(Stage::BasisAntidiagonal));
  CHECK(rep.omega2 == transpose(rep.X) * rep.omega * rep.X);
}
