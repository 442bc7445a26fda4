#include "hgg/invariant_form.hpp"

#include "hgg/error.hpp"

namespace hgg {

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::Standard: return "standard";
    case BasisTag::OrbitBasis: return "orbit";
    case BasisTag::HyperbolicBasis: return "hyperbolic";
  }
  return "?";
}

RationalVector difference_vector(const RationalMatrix& A, const RationalMatrix& B) {
  RationalMatrix C = inverse(A) * B;
  RationalVector v = C.column(C.size() - 1);
  v.back() -= 1;
  return v;
}

RationalMatrix orbit_gram(const RationalMatrix& M, const RationalVector& v) {
  const std::size_t n = M.size();
  // w_k = e_n-coefficient of M^k v; form(M^i v, M^j v) = form(v, M^{j-i} v).
  std::vector<Rational> w(n, Rational(0));
  RationalVector x = v;
  for (std::size_t k = 1; k < n; ++k) {
    x = M * x;
    w[k] = x[n - 1];
  }
  RationalMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = w[j - i];
      g(j, i) = -w[j - i];
    }
  return g;
}

RationalMatrix canonicalize(const RationalMatrix& omega) {
  const std::size_t n = omega.size();
  Integer den = 1, num = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& x = omega(r, c);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
  if (num == 0) return omega;
  Rational scale = make_rational(den, num);
  for (std::size_t r = 0; r < n; ++r) {
    bool found = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (omega(r, c) == 0) continue;
      if (omega(r, c) < 0) scale = -scale;
      found = true;
      break;
    }
    if (found) break;
  }
  return scale * omega;
}

bool preserves(const RationalMatrix& M, const RationalMatrix& omega) {
  return transpose(M) * omega * M == omega;
}

SymplecticForm form_via_orbit(const RationalMatrix& A, const RationalMatrix& B) {
  return form_via_orbit(A, B, B);
}

SymplecticForm form_via_orbit(const RationalMatrix& A, const RationalMatrix& B,
                              const RationalMatrix& orbit_generator) {
  const std::size_t n = A.size();
  RationalVector v = difference_vector(A, B);
  std::vector<RationalVector> cols{v};
  for (std::size_t k = 1; k < n; ++k) cols.push_back(orbit_generator * cols.back());
  RationalMatrix Y = RationalMatrix::from_columns(cols);
  if (determinant(Y) == 0) throw OrbitDegenerate("orbit of v does not span");
  RationalMatrix Yinv = inverse(Y);
  RationalMatrix omega = canonicalize(transpose(Yinv) * orbit_gram(orbit_generator, v) * Yinv);
  if (!preserves(A, omega) || !preserves(B, omega))
    throw InvarianceFailed("orbit form is not preserved by both generators");
  return {omega, BasisTag::Standard};
}

namespace {

// Skew matrix with value 1 on the k-th superdiagonal.
RationalMatrix band(std::size_t n, std::size_t k) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i + k < n; ++i) {
    m(i, i + k) = 1;
    m(i + k, i) = -1;
  }
  return m;
}

}  // namespace

SymplecticForm form_via_linear_solve(const RationalMatrix& A, const RationalMatrix& B) {
  const std::size_t n = A.size();
  const std::size_t unknowns = n - 1;
  // Column k of the system is the defect g^t M_k g - M_k for each generator.
  std::vector<RationalMatrix> defects_A, defects_B;
  for (std::size_t k = 1; k <= unknowns; ++k) {
    RationalMatrix m = band(n, k);
    defects_A.push_back(transpose(A) * m * A - m);
    defects_B.push_back(transpose(B) * m * B - m);
  }
  std::vector<RationalVector> rows;
  for (const auto* defects : {&defects_A, &defects_B})
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        RationalVector eq(unknowns);
        bool nonzero = false;
        for (std::size_t k = 0; k < unknowns; ++k) {
          eq[k] = (*defects)[k](r, c);
          nonzero = nonzero || eq[k] != 0;
        }
        if (nonzero) rows.push_back(std::move(eq));
      }
  auto kernel = null_space(rows, unknowns);
  if (kernel.size() != 1)
    throw SolutionSpaceNotLine("invariant banded forms have dimension " + std::to_string(kernel.size()));
  RationalMatrix omega(n);
  for (std::size_t k = 0; k < unknowns; ++k) omega = omega + kernel[0][k] * band(n, k + 1);
  return {canonicalize(omega), BasisTag::Standard};
}

bool forms_agree(const SymplecticForm& omega1, const SymplecticForm& omega2) {
  if (omega1.basis != omega2.basis) return false;
  const auto& x = omega1.matrix;
  const auto& y = omega2.matrix;
  if (x.size() != y.size()) return false;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x(r, c) == 0 && y(r, c) == 0) continue;
      if (x(r, c) == 0 || y(r, c) == 0) return false;
      return x == (x(r, c) / y(r, c)) * y;
    }
  return x.is_zero() && y.is_zero();
}

}  // namespace hgg
