#pragma once

// Roots of Sp6 for the diagonal torus diag(t1, t2, t3, 1/t3, 1/t2, 1/t1) in
// the hyperbolic basis, and membership in the two root groups that matter
// for the arithmeticity criterion.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hgg/invariant_form.hpp"
#include "hgg/matrix.hpp"

namespace hgg {

/// Exponents of (t1, t2, t3).
using Character = std::array<int, 3>;

struct Root {
  Character weight;
  /// 1-based (row, column) positions of the root space.
  std::vector<std::pair<int, int>> positions;
  std::string name() const;
};

struct RootDatum {
  std::vector<Root> positive_roots;  // 9, highest first
  Root highest;                      // t1^2
  Root second_highest;               // t1 t2
  std::array<Rational, 3> lambdas;

  /// Positive and negative roots together (18).
  std::vector<Root> all_roots() const;
};

RootDatum sp6_root_datum(const std::array<Rational, 3>& lambdas = {1, 1, 1});

/// "t1^2", "t1t3^-1", "t1^-2" and so on.
std::string character_name(const Character& w);

/// Weight of the matrix unit E_rs (1-based).
Character entry_weight(int row, int column);

/// y iff M = I + y E_16 with y != 0.
std::optional<Rational> in_highest_root_group(const RationalMatrix& M);

/// x iff M = I + x E_15 + (lambda1/lambda2) x E_26 with x != 0.
std::optional<Rational> in_second_highest_root_group(const RationalMatrix& M, const Rational& lambda1,
                                                     const Rational& lambda2);

bool preserves_form(const RationalMatrix& M, const SymplecticForm& omega);

/// "identity", the name of the single root whose root space contains the
/// support of M - I, or "other unipotent" / "not unipotent".
std::string classify_root_support(const RationalMatrix& M);

}  // namespace hgg
