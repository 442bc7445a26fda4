#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hgg/cyclotomic.hpp"
#include "hgg/number.hpp"

namespace hgg {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major. Value type; all
/// arithmetic is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  /// Rows of equal length n; throws InvalidArgument otherwise.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix unit E_ij with 1-based indices, scaled.
  static RationalMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& scale = 1);
  /// Matrix whose columns are the given vectors.
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t size() const noexcept { return n_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  /// 1-based element access, matching the E_ij notation.
  const Rational& at1(std::size_t r, std::size_t c) const { return (*this)(r - 1, c - 1); }

  RationalVector column(std::size_t c) const;
  RationalVector row(std::size_t r) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_integral() const;
  /// Largest bit size over the entries.
  std::size_t max_entry_bits() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  /// Canonical text: rows separated by ';', entries by ','. Used as a hash key.
  std::string key() const;
  /// Multi-line, one row per line, entries separated by single spaces.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// Rows separated by ';' or newlines, entries by spaces or commas. Must be
/// square. Throws ParseError.
RationalMatrix parse_matrix(std::string_view text);

RationalMatrix transpose(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Throws Singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Binary exponentiation; negative exponents go through the inverse.
RationalMatrix power(const RationalMatrix& m, const Integer& exponent);
RationalMatrix power(const RationalMatrix& m, long exponent);

enum class CommutatorConvention {
  ProductFirst,  ///< [x, y] = x y x^-1 y^-1
  InverseFirst,  ///< [x, y] = x^-1 y^-1 x y
};

/// Tags "xyx'y'" and "x'y'xy".
std::string to_string(CommutatorConvention c);
std::optional<CommutatorConvention> parse_convention(std::string_view text);

/// Throws Singular if either argument is not invertible.
RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y, CommutatorConvention convention);

/// Companion matrix of a monic f with f(0) = +-1: e_i -> e_{i+1}, last
/// column -c_0 .. -c_{n-1}. Throws NotMonic / InvalidArgument.
RationalMatrix companion(const IntPolynomial& f);

/// Characteristic polynomial det(xI - M) via Faddeev-LeVerrier; coefficients low to high.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// (M - I)^n == 0.
bool is_unipotent(const RationalMatrix& m);

/// Reduced row echelon basis of the right null space of an r x c matrix
/// given as rows.
std::vector<RationalVector> null_space(std::vector<RationalVector> rows, std::size_t cols);

}  // namespace hgg
