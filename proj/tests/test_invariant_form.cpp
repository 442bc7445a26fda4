#include <doctest.h>

#include "hgg/error.hpp"
#include "hgg/invariant_form.hpp"
#include "test_support.hpp"

using namespace hgg;
using testing::I6;
using testing::printed;

TEST_CASE("form_via_orbit on the worked cases") {
  auto c1 = testing::companions(testing::find_case("C-1"));
  SymplecticForm o = form_via_orbit(c1.A, c1.B);
  CHECK(o.basis == BasisTag::Standard);
  CHECK(o.matrix.row(0) == RationalVector{0, 2, 1, 3, -4, -5});
  CHECK(o.matrix == printed("C-1", "Omega1"));

  auto c10 = testing::companions(testing::find_case("C-10"));
  CHECK(form_via_orbit(c10.A, c10.B).matrix.row(0) == RationalVector{0, 1, 2, 2, 1, -1});

  // The Gram matrix on the B-orbit basis, before any rescaling.
  RationalVector v = difference_vector(c1.A, c1.B);
  RationalMatrix gram = orbit_gram(c1.B, v);
  CHECK(gram.row(0) == RationalVector{0, -3, 0, 9, -9, -6});
  CHECK(gram == printed("C-1", "Omega_orbit"));
}

TEST_CASE("printed Z converts the orbit Gram matrix to the standard basis") {
  RationalMatrix Z = printed("C-1", "Z");
  CHECK(Rational(27) * transpose(Z) * printed("C-1", "Omega_orbit") * Z == printed("C-1", "Omega1"));
  // Z is the inverse of the column matrix Y = [v | Bv | ... | B^5 v].
  auto c1 = testing::companions(testing::find_case("C-1"));
  std::vector<RationalVector> cols{difference_vector(c1.A, c1.B)};
  for (int i = 1; i < 6; ++i) cols.push_back(c1.B * cols.back());
  CHECK(inverse(RationalMatrix::from_columns(cols)) == Z);
}

TEST_CASE("form_via_linear_solve") {
  auto c42 = testing::companions(testing::find_case("C-42"));
  SymplecticForm s = form_via_linear_solve(c42.A, c42.B);
  CHECK(s.matrix.row(0) == RationalVector{0, 0, 1, 1, 0, 1});
  CHECK(s.matrix == Rational(-1) * printed("C-42", "Omega1"));

  auto c59 = testing::companions(testing::find_case("C-59"));
  CHECK(forms_agree(form_via_linear_solve(c59.A, c59.B), SymplecticForm{printed("C-59", "Omega1")}));

  CHECK_THROWS_AS(form_via_linear_solve(I6(), I6()), SolutionSpaceNotLine);
}

TEST_CASE("forms_agree") {
  auto c1 = testing::companions(testing::find_case("C-1"));
  SymplecticForm o = form_via_orbit(c1.A, c1.B), s = form_via_linear_solve(c1.A, c1.B);
  CHECK(forms_agree(o, s));
  CHECK(forms_agree(o, SymplecticForm{Rational(-1) * o.matrix}));
  auto c10 = testing::companions(testing::find_case("C-10"));
  CHECK_FALSE(forms_agree(o, form_via_orbit(c10.A, c10.B)));
}

TEST_CASE("orbit of A as a cross-check") {
  for (const auto& k : testing::kCases) {
    CAPTURE(k.label);
    auto c = testing::companions(k);
    CHECK(forms_agree(form_via_orbit(c.A, c.B), form_via_orbit(c.A, c.B, c.A)));
  }
}

TEST_CASE("structure of the canonical form") {
  for (const auto& k : testing::kCases) {
    CAPTURE(k.label);
    auto c = testing::companions(k);
    RationalMatrix W = form_via_orbit(c.A, c.B).matrix;
    CHECK(transpose(W) == Rational(-1) * W);
    CHECK(determinant(W) != 0);
    CHECK(W.is_integral());
    CHECK(preserves(c.A, W));
    CHECK(preserves(c.B, W));
    CHECK(canonicalize(Rational(-7, 2) * W) == W);
    // v is orthogonal to e1..e5 and pairs nontrivially with e6.
    RationalVector Wv = transpose(W) * difference_vector(c.A, c.B);
    for (int i = 0; i < 5; ++i) CHECK(Wv[i] == 0);
    CHECK(Wv[5] != 0);
  }
}
