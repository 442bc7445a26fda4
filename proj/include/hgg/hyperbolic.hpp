#pragma once

#include <array>
#include <optional>

#include "hgg/invariant_form.hpp"
#include "hgg/matrix.hpp"

namespace hgg {

/// Columns of X are eps_1, eps_2, eps_3, eps_3*, eps_2*, eps_1*; X^t Omega X
/// has lambda_i at (i, 7-i) and -lambda_i at (7-i, i).
struct HyperbolicBasis {
  RationalMatrix X;
  std::array<Rational, 3> lambdas;
};

/// Greedy pairing on the standard basis with symplectic projection, then
/// primitive integer columns. Throws Degenerate for a singular form.
HyperbolicBasis hyperbolic_basis(const SymplecticForm& omega);

/// Same, with `first` placed ahead of the standard vectors so that eps_1 is
/// a multiple of it. With first = v (the f - g vector) the transvection c
/// lands in the highest root group.
HyperbolicBasis hyperbolic_basis(const SymplecticForm& omega, const RationalVector& first);

/// The lambdas iff X^t Omega X has exactly the anti-diagonal shape.
std::optional<std::array<Rational, 3>> verify_antidiagonal(const RationalMatrix& X, const RationalMatrix& omega);

/// Anti-diagonal matrix with entries lambda_1..3 top-right and their negatives.
RationalMatrix antidiagonal_form(const std::array<Rational, 3>& lambdas);

struct ConjugatedGenerators {
  RationalMatrix a, b, c;
};

/// a = X^-1 A X, b = X^-1 B X, c = a^-1 b. When `omega2` is given, both
/// must preserve it (InvarianceFailed otherwise). Throws Singular.
ConjugatedGenerators conjugate_generators(const RationalMatrix& A, const RationalMatrix& B, const RationalMatrix& X,
                                          const RationalMatrix* omega2 = nullptr);

}  // namespace hgg
