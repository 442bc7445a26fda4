#pragma once

// Hypergeometric parameters, integer polynomials built from cyclotomic
// factors, and the closure classification of a pair (f, g).

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hgg/number.hpp"

namespace hgg {

/// Sorted multiset of rationals in [0, 1).
class ParameterVector {
 public:
  ParameterVector() = default;
  /// Throws InvalidArgument if an entry lies outside [0, 1).
  explicit ParameterVector(std::vector<Rational> entries);

  /// Comma separated reduced fractions, e.g. "0,0,1/2,1/2".
  static ParameterVector parse(std::string_view text);

  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::size_t degree() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Translates every entry by r modulo 1.
  ParameterVector shifted(const Rational& r) const;

  std::string to_string() const;

  friend bool operator==(const ParameterVector& a, const ParameterVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const ParameterVector& a, const ParameterVector& b) { return !(a == b); }
  /// Lexicographic on the sorted entries.
  friend bool operator<(const ParameterVector& a, const ParameterVector& b);

 private:
  std::vector<Rational> entries_;
};

/// Polynomial with exact integer coefficients, stored low to high with no
/// trailing zeros. The zero polynomial has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(std::size_t power, const Integer& coefficient = 1);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
  Integer constant_term() const { return coeff(0); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// f(-x).
  IntPolynomial negated_argument() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  /// Coefficients low to high, comma separated: "1,-2,-1,4,-1,-2,1".
  std::string coefficient_list() const;
  /// Human readable: "x^6 - 2*x^5 - x^4 + 4*x^3 - x^2 - 2*x + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Exact division by a monic divisor. Returns {quotient, remainder}.
std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& f, const IntPolynomial& divisor);

/// Product of cyclotomic polynomials, stored as d -> multiplicity.
struct CycloProduct {
  std::map<unsigned, unsigned> factors;

  std::size_t degree() const;
  unsigned multiplicity(unsigned d) const;
  IntPolynomial expand() const;
  /// "Phi1^2*Phi3" style.
  std::string to_string() const;

  friend bool operator==(const CycloProduct& a, const CycloProduct& b) { return a.factors == b.factors; }
};

struct CyclotomicPolynomial {
  IntPolynomial poly;
  CycloProduct factorization;
};

unsigned euler_phi(unsigned n);

/// Phi_d. Precondition d >= 1.
IntPolynomial cyclotomic_poly(unsigned d);

/// Product over parameters of (x - exp(2 pi i q)). Throws NotGaloisClosed
/// when an orbit k/d (gcd(k, d) = 1) is incomplete or has unequal multiplicities.
CyclotomicPolynomial params_to_poly(const ParameterVector& p);

/// Inverse of params_to_poly. Throws NotCyclotomicProduct.
ParameterVector poly_to_params(const IntPolynomial& f);
CycloProduct cyclotomic_factorization(const IntPolynomial& f);

/// x^n f(1/x) = +-f(x).
bool is_self_reciprocal(const IntPolynomial& f);

/// False iff f and g are both polynomials in x^k for some k >= 2.
bool is_primitive_pair(const IntPolynomial& f, const IntPolynomial& g);

/// gcd over the rationals has positive degree.
bool have_common_root(const IntPolynomial& f, const IntPolynomial& g);

/// Strict alternation of the merged sorted parameters. Throws SharedEntry
/// when the vectors intersect.
bool roots_interlace(const ParameterVector& alpha, const ParameterVector& beta);

enum class ClosureClass { Finite, Symplectic, Orthogonal, Other };

std::string to_string(ClosureClass c);

/// Throws InvalidPair when (f, g) is not a valid hypergeometric pair.
ClosureClass zariski_closure_class(const IntPolynomial& f, const IntPolynomial& g);

struct DifferenceData {
  Integer leading_coeff;
  /// (a_1 - b_1, ..., a_{n-1} - b_{n-1}, 0).
  std::vector<Integer> v;
};

/// Throws ZeroDifference when f == g, InvalidArgument on unequal degrees.
DifferenceData difference_leading_data(const IntPolynomial& f, const IntPolynomial& g);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const std::vector<Integer>& v);

std::string to_string(const std::vector<Integer>& v);

}  // namespace hgg
