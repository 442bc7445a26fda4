#include "hgg/hyperbolic.hpp"

#include "hgg/error.hpp"

namespace hgg {

namespace {

Rational pairing(const RationalMatrix& omega, const RationalVector& x, const RationalVector& y) {
  RationalVector oy = omega * y;
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * oy[i];
  return s;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RationalVector primitive(const RationalVector& v) {
  Integer den = 1, num = 0;
  for (const auto& x : v) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
  }
  Rational s = make_rational(den, num);
  RationalVector out = v;
  for (auto& x : out) x *= s;
  return out;
}

// Pairs off the pool greedily; vectors that project to zero are dropped, so
// the pool may be a spanning set rather than a basis.
HyperbolicBasis greedy(const RationalMatrix& omega, std::vector<RationalVector> pool) {
  const std::size_t n = omega.size();
  std::vector<RationalVector> eps, duals;
  while (!pool.empty()) {
    std::size_t ui = pool.size(), wi = pool.size();
    for (std::size_t i = 0; i < pool.size() && ui == pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j)
        if (j != i && pairing(omega, pool[i], pool[j]) != 0) {
          ui = i;
          wi = j;
          break;
        }
    if (ui == pool.size()) throw Degenerate("no hyperbolic pair left in the complement");
    RationalVector u = pool[ui], w = pool[wi];
    Rational lambda = pairing(omega, u, w);
    std::vector<RationalVector> rest;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (k == ui || k == wi) continue;
      const RationalVector& z = pool[k];
      Rational zw = pairing(omega, z, w) / lambda;
      Rational zu = pairing(omega, z, u) / lambda;
      RationalVector p = z;
      for (std::size_t i = 0; i < n; ++i) p[i] += zu * w[i] - zw * u[i];
      if (!is_zero_vector(p)) rest.push_back(std::move(p));
    }
    eps.push_back(primitive(u));
    duals.push_back(primitive(w));
    pool = std::move(rest);
  }
  if (eps.size() != 3) throw Degenerate("could not complete a hyperbolic basis");

  std::vector<RationalVector> cols{eps[0], eps[1], eps[2], duals[2], duals[1], duals[0]};
  HyperbolicBasis out{RationalMatrix::from_columns(cols), {}};
  auto lambdas = verify_antidiagonal(out.X, omega);
  if (!lambdas) throw Degenerate("greedy construction did not anti-diagonalize the form");
  out.lambdas = *lambdas;
  return out;
}

std::vector<RationalVector> standard_pool(const RationalMatrix& omega, const RationalVector* first) {
  const std::size_t n = omega.size();
  if (n != 6) throw InvalidArgument("hyperbolic basis is implemented for dimension 6");
  if (determinant(omega) == 0) throw Degenerate("form is singular");
  std::vector<RationalVector> pool;
  if (first) {
    if (first->size() != n || is_zero_vector(*first)) throw InvalidArgument("leading vector must be nonzero of size 6");
    pool.push_back(*first);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    pool.push_back(e);
  }
  return pool;
}

}  // namespace

HyperbolicBasis hyperbolic_basis(const SymplecticForm& form) {
  return greedy(form.matrix, standard_pool(form.matrix, nullptr));
}

HyperbolicBasis hyperbolic_basis(const SymplecticForm& form, const RationalVector& first) {
  return greedy(form.matrix, standard_pool(form.matrix, &first));
}

std::optional<std::array<Rational, 3>> verify_antidiagonal(const RationalMatrix& X, const RationalMatrix& omega) {
  if (X.size() != 6 || omega.size() != 6) return std::nullopt;
  if (determinant(X) == 0) return std::nullopt;
  RationalMatrix g = transpose(X) * omega * X;
  std::array<Rational, 3> lambdas;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) {
      if (r + c == 5) continue;
      if (g(r, c) != 0) return std::nullopt;
    }
  for (std::size_t i = 0; i < 3; ++i) {
    lambdas[i] = g(i, 5 - i);
    if (lambdas[i] == 0 || g(5 - i, i) != -lambdas[i]) return std::nullopt;
  }
  return lambdas;
}

RationalMatrix antidiagonal_form(const std::array<Rational, 3>& lambdas) {
  RationalMatrix m(6);
  for (std::size_t i = 0; i < 3; ++i) {
    m(i, 5 - i) = lambdas[i];
    m(5 - i, i) = -lambdas[i];
  }
  return m;
}

ConjugatedGenerators conjugate_generators(const RationalMatrix& A, const RationalMatrix& B, const RationalMatrix& X,
                                          const RationalMatrix* omega2) {
  RationalMatrix Xinv = inverse(X);
  ConjugatedGenerators g{Xinv * A * X, Xinv * B * X, {}};
  g.c = inverse(g.a) * g.b;
  if (omega2 && (!preserves(g.a, *omega2) || !preserves(g.b, *omega2)))
    throw InvarianceFailed("conjugated generators do not preserve the hyperbolic form");
  return g;
}

}  // namespace hgg
