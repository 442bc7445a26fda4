#pragma once

// The symplectic form preserved by the group generated by two companion
// matrices, computed from the B-orbit of v and, independently, by solving
// for a banded skew matrix.

#include <string>

#include "hgg/matrix.hpp"

namespace hgg {

enum class BasisTag { Standard, OrbitBasis, HyperbolicBasis };

std::string to_string(BasisTag tag);

struct SymplecticForm {
  RationalMatrix matrix;
  BasisTag basis = BasisTag::Standard;

  friend bool operator==(const SymplecticForm& a, const SymplecticForm& b) {
    return a.basis == b.basis && a.matrix == b.matrix;
  }
};

/// v = (A^-1 B - I) e_n.
RationalVector difference_vector(const RationalMatrix& A, const RationalMatrix& B);

/// Gram matrix of the form on {v, Mv, ..., M^{n-1}v}, normalised by
/// form(v, e_n) = 1. Entry (i, j), i < j, is the e_n-coefficient of M^{j-i} v.
RationalMatrix orbit_gram(const RationalMatrix& M, const RationalVector& v);

/// Primitive integer multiple whose first nonzero entry in row 1 is positive.
RationalMatrix canonicalize(const RationalMatrix& omega);

/// Uses the orbit of v under `orbit_generator` (B by default).
/// Throws OrbitDegenerate or InvarianceFailed.
SymplecticForm form_via_orbit(const RationalMatrix& A, const RationalMatrix& B);
SymplecticForm form_via_orbit(const RationalMatrix& A, const RationalMatrix& B,
                              const RationalMatrix& orbit_generator);

/// Banded skew ansatz with entries w_1..w_{n-1} along the superdiagonals.
/// Throws SolutionSpaceNotLine unless the invariant forms make up a line.
SymplecticForm form_via_linear_solve(const RationalMatrix& A, const RationalMatrix& B);

/// Omega1 = q Omega2 for some nonzero rational q, in the same basis.
bool forms_agree(const SymplecticForm& omega1, const SymplecticForm& omega2);

/// M^t Omega M == Omega.
bool preserves(const RationalMatrix& M, const RationalMatrix& omega);

}  // namespace hgg
