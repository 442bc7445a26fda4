#include "hgg/matrix.hpp"

#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), data_(n * n, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InvalidArgument("RationalMatrix: rows must have length " + std::to_string(n_));
    for (const auto& x : r) {
      data_.push_back(x);
      data_.back().canonicalize();
    }
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size())
      throw InvalidArgument("RationalMatrix: row " + std::to_string(r + 1) + " has wrong length");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::unit(std::size_t n, std::size_t i, std::size_t j, const Rational& scale) {
  RationalMatrix m(n);
  m(i - 1, j - 1) = scale;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
  RationalMatrix m(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != cols.size()) throw InvalidArgument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < cols.size(); ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
}

bool RationalMatrix::is_identity() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool RationalMatrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

std::size_t RationalMatrix::max_entry_bits() const {
  std::size_t bits = 0;
  for (const auto& x : data_) bits = std::max(bits, bit_size(x));
  return bits;
}

namespace {

void check_same(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw InvalidArgument("matrix dimension mismatch");
}

}  // namespace

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  check_same(a, b);
  const std::size_t n = a.n_;
  RationalMatrix out(n);
  Rational t;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a.data_[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b.data_[k * n + j];
        if (bkj == 0) continue;
        mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        out.data_[i * n + j] += t;
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  check_same(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  check_same(a, b);
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (v.size() != a.n_) throw InvalidArgument("matrix-vector dimension mismatch");
  RationalVector out(a.n_, Rational(0));
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) out[i] += a.data_[i * a.n_ + k] * v[k];
  return out;
}

std::string RationalMatrix::key() const {
  std::string s;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) s += (i % n_ == 0) ? ';' : ',';
    s += hgg::to_string(data_[i]);
  }
  return s;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) os << ' ';
      os << hgg::to_string((*this)(r, c));
    }
    os << '\n';
  }
  return os.str();
}

RationalMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row;
  std::string token;
  auto flush_token = [&] {
    if (!token.empty()) row.push_back(parse_rational(token));
    token.clear();
  };
  auto flush_row = [&] {
    flush_token();
    if (!row.empty()) rows.push_back(std::move(row));
    row.clear();
  };
  for (char ch : text) {
    if (ch == ';' || ch == '\n') {
      flush_row();
    } else if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
      flush_token();
    } else {
      token += ch;
    }
  }
  flush_row();
  if (rows.empty()) throw ParseError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size())
      throw ParseError("matrix is not square: " + std::to_string(rows.size()) + " rows, a row of " +
                       std::to_string(r.size()));
  return RationalMatrix::from_rows(rows);
}

RationalMatrix transpose(const RationalMatrix& m) {
  RationalMatrix t(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) t(c, r) = m(r, c);
  return t;
}

Rational determinant(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Singular("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix power(const RationalMatrix& m, const Integer& exponent) {
  RationalMatrix base = exponent < 0 ? inverse(m) : m;
  Integer e = abs(exponent);
  RationalMatrix result = RationalMatrix::identity(m.size());
  if (base.is_identity()) return result;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

RationalMatrix power(const RationalMatrix& m, long exponent) { return power(m, Integer(exponent)); }

std::string to_string(CommutatorConvention c) {
  return c == CommutatorConvention::ProductFirst ? "xyx'y'" : "x'y'xy";
}

std::optional<CommutatorConvention> parse_convention(std::string_view text) {
  if (text == "xyx'y'") return CommutatorConvention::ProductFirst;
  if (text == "x'y'xy") return CommutatorConvention::InverseFirst;
  return std::nullopt;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y, CommutatorConvention convention) {
  check_same(x, y);
  RationalMatrix xi = inverse(x);
  RationalMatrix yi = inverse(y);
  if (convention == CommutatorConvention::ProductFirst) return x * y * xi * yi;
  return xi * yi * x * y;
}

RationalMatrix companion(const IntPolynomial& f) {
  if (f.degree() < 1) throw InvalidArgument("companion: degree must be at least 1");
  if (!f.is_monic()) throw NotMonic("companion: polynomial must be monic");
  if (abs(f.constant_term()) != 1) throw InvalidArgument("companion: f(0) must be +1 or -1");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  RationalMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -f.coeff(i);
  return m;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  const std::size_t n = m.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RationalMatrix mk(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    RationalMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

bool is_unipotent(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix nil = m - RationalMatrix::identity(n);
  RationalMatrix acc = nil;
  for (std::size_t k = 1; k < n; ++k) {
    if (acc.is_zero()) return true;
    acc = acc * nil;
  }
  return acc.is_zero();
}

std::vector<RationalVector> null_space(std::vector<RationalVector> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Rational p = rows[rank][col];
    for (auto& x : rows[rank]) x /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  std::vector<RationalVector> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hgg
