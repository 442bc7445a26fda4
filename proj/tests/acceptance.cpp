// Acceptance runner: one PASS/FAIL line per criterion, with the evidence
// indented below it. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "hgg/catalog.hpp"
#include "hgg/certify.hpp"
#include "hgg/hyperbolic.hpp"
#include "hgg/rootgroups.hpp"
#include "hgg/search.hpp"
#include "properties.hpp"
#include "test_support.hpp"

using namespace hgg;
using testing::printed;
using Clock = std::chrono::steady_clock;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    notes_.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
  }
  void info(const std::string& what) { notes_.push_back("  info " + what); }
  void time_limit(double seconds) { limit_ = seconds; }

  bool report() {
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    if (limit_ > 0) check(secs < limit_, "runtime " + fmt(secs) + " s (limit " + fmt(limit_) + " s)");
    std::cout << (ok_ ? "PASS " : "FAIL ") << title_ << '\n';
    for (const auto& n : notes_) std::cout << n << '\n';
    std::cout.flush();
    return ok_;
  }

 private:
  static std::string fmt(double s) {
    std::ostringstream o;
    o.precision(3);
    o << s;
    return o.str();
  }
  std::string title_;
  Clock::time_point start_;
  double limit_ = 0;
  bool ok_ = true;
  std::vector<std::string> notes_;
};

std::string q(const Rational& r) { return to_string(r); }

bool fixture_exactness() {
  Criterion cr("1 fixture exactness: A, B, C, form, basis, generators and q1, q2 against the printed matrices");
  cr.time_limit(10);
  for (const auto& k : testing::kCases) {
    const std::string L = k.label;
    auto c = testing::companions(k);
    RationalMatrix C = inverse(c.A) * c.B;
    cr.check(c.A == printed(L, "A") && c.B == printed(L, "B") && C == printed(L, "C"), L + " A, B, C");

    RationalMatrix W = form_via_orbit(c.A, c.B).matrix, P = printed(L, "Omega1");
    bool plus = W == P, minus = W == Rational(-1) * P;
    cr.check(plus || minus, L + " canonical form equals the printed one" + (minus ? " up to sign" : ""));

    RationalMatrix X = printed(L, "X");
    RationalMatrix W2 = transpose(X) * (minus ? Rational(-1) * W : W) * X;
    auto lambdas = verify_antidiagonal(X, P);
    cr.check(W2 == printed(L, "Omega2") && lambdas.has_value(),
             L + " X^t form X = printed anti-diagonal form, lambda = (" +
                 (lambdas ? q((*lambdas)[0]) + ", " + q((*lambdas)[1]) + ", " + q((*lambdas)[2]) : "none") + ")");

    ConjugatedGenerators g = conjugate_generators(c.A, c.B, X);
    cr.check(g.a == printed(L, "a") && g.b == printed(L, "b") && g.c == printed(L, "c"), L + " a, b, c");

    VerificationReport rep = verify_certificate(load_fixture(L));
    bool q1 = rep.q1 && *rep.q1 == printed(L, "q1");
    bool q2 = rep.q2 && *rep.q2 == printed(L, "q2");
    cr.check(q1, L + " program yields the printed q1");
    cr.check(q2, L + " program yields the printed q2" +
                     (q2 || !rep.q2 ? std::string() : "; got (1,5)=" + q(rep.q2->at1(1, 5)) +
                                                          ", (2,6)=" + q(rep.q2->at1(2, 6)) + ", " +
                                                          classify_root_support(*rep.q2)));
  }
  return cr.report();
}

bool root_group_extraction() {
  Criterion cr("2 root-group extraction: (y, x) and lambda ratios from verify_certificate");
  struct Row {
    const char* label;
    const char* y;
    const char* x;
    Rational ratio;
  };
  const Row rows[] = {
      {"C-1", "3", "52488", Rational(-1, 2)},
      {"C-10", "3", "-198", 1},
      {"C-42", "104727556800", "17454592800", Rational(1, 4)},
      {"C-59", "-3", "-1080", Rational(-1, 2)},
  };
  for (const auto& r : rows) {
    VerificationReport rep = verify_certificate(load_fixture(r.label));
    std::string got = "y=" + (rep.y ? q(*rep.y) : "none") + ", x=" + (rep.x ? q(*rep.x) : "none") +
                      ", ratio=" + q(rep.lambda_ratio());
    bool ok = rep.certified() && rep.y && q(*rep.y) == r.y && rep.x && q(*rep.x) == r.x && rep.lambda_ratio() == r.ratio;
    cr.check(ok, std::string(r.label) + " expected y=" + r.y + ", x=" + r.x + ", ratio=" + q(r.ratio) + "; got " +
                     got + "; " + rep.conclusion());
  }
  VerificationReport alt = verify_certificate(load_fixture("C-10-alt"));
  cr.info("C-10 alternative certificate (q2 = w3^18 comm(w3, w4^-1)): " + alt.conclusion());
  return cr.report();
}

bool form_cross_validation(const Catalog& cat) {
  Criterion cr("3 form cross-validation on every catalog entry, plus random words");
  cr.time_limit(120);
  std::size_t agree = 0, invariant = 0;
  for (const auto& e : cat.entries) {
    RationalMatrix A = companion(e.f), B = companion(e.g);
    SymplecticForm o = form_via_orbit(A, B), s = form_via_linear_solve(A, B);
    agree += forms_agree(o, s);
    invariant += preserves(A, o.matrix) && preserves(B, o.matrix);
  }
  cr.check(agree == cat.entries.size(), "orbit and linear-solve forms agree on " + std::to_string(agree) + "/" +
                                            std::to_string(cat.entries.size()) + " entries");
  cr.check(invariant == cat.entries.size(),
           "A^t W A = W = B^t W B on " + std::to_string(invariant) + "/" + std::to_string(cat.entries.size()));

  std::mt19937_64 rng(2024);
  const std::size_t sample = 24, stride = cat.entries.size() / sample;
  std::size_t words = 0, good = 0;
  for (std::size_t i = 0; i < sample; ++i) {
    const auto& e = cat.entries[i * stride];
    RationalMatrix A = companion(e.f), B = companion(e.g);
    RationalMatrix W = form_via_orbit(A, B).matrix;
    std::vector<RationalMatrix> gens{A, inverse(A), B, inverse(B)};
    for (int w = 0; w < 100; ++w, ++words) good += preserves(testing::random_word(rng, gens, 8), W);
  }
  cr.check(good == words, std::to_string(good) + "/" + std::to_string(words) + " random words of length <= 8 on " +
                              std::to_string(sample) + " entries preserve the form");
  return cr.report();
}

bool catalog_counts(const Catalog& cat, double enumeration_seconds) {
  Criterion cr("4 catalog counts: 458 classes, 211 with |lead| <= 2, all 15 table rows with printed v");
  cr.check(enumeration_seconds < 300, "enumeration took " + std::to_string(enumeration_seconds) + " s (limit 300 s)");
  CatalogSummary s = counts(cat);
  cr.info("raw ordered pairs " + std::to_string(s.raw_pairs) + ", deduplicated classes " + std::to_string(s.classes));
  cr.check(s.classes == 458, "classes = " + std::to_string(s.classes));
  cr.check(s.sv_count == 211, "|lead| <= 2 count = " + std::to_string(s.sv_count));
  std::size_t matched = 0;
  for (const auto& r : s.rows) {
    matched += r.v_matches();
    if (!r.v_matches())
      cr.check(false, r.label + (r.found ? " v=" + to_string(r.computed_v) + " printed " + to_string(r.printed_v)
                                         : " not found"));
  }
  cr.check(s.rows.size() == 15 && matched == 15, std::to_string(matched) + "/15 table rows with identical v");
  for (const auto& d : s.discrepancies) cr.info(d);
  return cr.report();
}

bool search_sanity() {
  Criterion cr("5 search sanity: depth 2 finds a highest-root element for each fixture");
  for (const auto& k : testing::kCases) {
    const std::string L = k.label;
    Certificate fx = load_fixture(L);
    auto lambdas = verify_antidiagonal(*fx.basis_matrix, printed(L, "Omega1"));
    RationalMatrix a = printed(L, "a"), b = printed(L, "b"), c = printed(L, "c");
    SearchBudget one, many;
    many.jobs = 4;
    SearchOutcome r1 = search_certificates(a, b, c, (*lambdas)[0], (*lambdas)[1], one);
    SearchOutcome rN = search_certificates(a, b, c, (*lambdas)[0], (*lambdas)[1], many);

    std::string found = r1.highest ? r1.highest->text + " (y=" + q(r1.highest->parameter) + ")" : "nothing";
    cr.check(bool(r1.highest), L + " highest-root hit: " + found + " after " + std::to_string(r1.nodes) + " words");
    if (r1.highest) {
      auto probe = r1.probe_certificate(L, fx.alpha, fx.beta, fx.basis_matrix, fx.convention);
      VerificationReport rep = verify_certificate(*probe);
      cr.check(rep.passed(Stage::HighestRoot), L + " hit re-verifies through the certifier");
    }
    bool same = r1.nodes == rN.nodes && bool(r1.highest) == bool(rN.highest) && bool(r1.second) == bool(rN.second) &&
                (!r1.highest || r1.highest->text == rN.highest->text) &&
                (!r1.second || r1.second->text == rN.second->text);
    cr.check(same, L + " identical results with 1 and 4 workers");
    if (!r1.highest) {
      auto cA = testing::companions(k);
      SymplecticForm W = form_via_orbit(cA.A, cA.B);
      HyperbolicBasis hb = hyperbolic_basis(W, difference_vector(cA.A, cA.B));
      ConjugatedGenerators g = conjugate_generators(cA.A, cA.B, hb.X);
      SearchOutcome adapted = search_certificates(g.a, g.b, g.c, hb.lambdas[0], hb.lambdas[1], one);
      cr.info(L + " c has root type " + classify_root_support(c) + " in this basis; with eps_1 along v the search finds " +
              (adapted.highest ? adapted.highest->text + " (y=" + q(adapted.highest->parameter) + ")" : "nothing"));
    }
  }
  return cr.report();
}

bool property_suites(const Catalog& cat) {
  Criterion cr("6 property suites: round trip, interlacing symmetry, root-group closure, Z consistency");
  cr.time_limit(60);
  for (auto [name, r] : {std::pair{"params <-> poly round trip", properties::params_poly_round_trip(cat)},
                         std::pair{"interlacing symmetry", properties::interlacing_symmetry()},
                         std::pair{"root-group closure", properties::root_group_closure()},
                         std::pair{"Z consistency", properties::z_consistency()}})
    cr.check(r.ok, std::string(name) + ": " + r.detail);
  return cr.report();
}

}  // namespace

int main() {
  int failed = 0;
  auto run = [&](auto&& f) {
    try {
      failed += !f();
    } catch (const std::exception& e) {
      std::cout << "FAIL (exception) " << e.what() << '\n';
      ++failed;
    }
  };
  run(fixture_exactness);
  run(root_group_extraction);
  Catalog cat;
  auto t0 = Clock::now();
  try {
    cat = enumerate_pairs(6);
  } catch (const std::exception& e) {
    std::cout << "catalog enumeration failed: " << e.what() << '\n';
  }
  double enum_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  run([&] { return form_cross_validation(cat); });
  run([&] { return catalog_counts(cat, enum_secs); });
  run(search_sanity);
  run([&] { return property_suites(cat); });
  std::cout << (failed ? std::to_string(failed) + " of 6 criteria failed\n" : "all 6 criteria passed\n");
  return failed ? 1 : 0;
}
