#include "hgg/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hgg/error.hpp"

namespace hgg {

// ---------------------------------------------------------------------------
// ParameterVector

ParameterVector::ParameterVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& q : entries_) {
    q.canonicalize();
    if (q < 0 || q >= 1) throw InvalidArgument("parameter " + hgg::to_string(q) + " not in [0,1)");
  }
  std::sort(entries_.begin(), entries_.end());
}

ParameterVector ParameterVector::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return ParameterVector(std::move(out));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

ParameterVector ParameterVector::shifted(const Rational& r) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) {
    Rational s = q + r;
    // reduce into [0, 1)
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    s -= fl;
    out.push_back(s);
  }
  return ParameterVector(std::move(out));
}

std::string ParameterVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += hgg::to_string(entries_[i]);
  }
  return s;
}

bool operator<(const ParameterVector& a, const ParameterVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, const Integer& coefficient) {
  std::vector<Integer> c(power + 1, Integer(0));
  c[power] = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::negated_argument() const {
  auto c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::coefficient_list() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ',';
    s += hgg::to_string(coeffs_[i]);
  }
  return s;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& f, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) throw NotMonic("divisor must be monic");
  auto rem = f.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dn = d.size() - 1;
  if (rem.size() < d.size()) return {IntPolynomial{}, f};
  std::vector<Integer> quot(rem.size() - dn, Integer(0));
  for (std::size_t k = rem.size(); k-- > dn;) {
    Integer lead = rem[k];
    if (lead == 0) continue;
    quot[k - dn] = lead;
    for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= lead * d[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

// ---------------------------------------------------------------------------
// cyclotomic construction

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_poly(unsigned d) {
  if (d == 0) throw InvalidArgument("cyclotomic_poly: d must be positive");
  // x^d - 1 divided by Phi_k for every proper divisor k of d.
  IntPolynomial p = IntPolynomial::monomial(d) - IntPolynomial{1};
  for (unsigned k = 1; k < d; ++k) {
    if (d % k) continue;
    auto [q, r] = divmod_monic(p, cyclotomic_poly(k));
    p = std::move(q);
  }
  return p;
}

std::size_t CycloProduct::degree() const {
  std::size_t n = 0;
  for (auto [d, m] : factors) n += static_cast<std::size_t>(euler_phi(d)) * m;
  return n;
}

unsigned CycloProduct::multiplicity(unsigned d) const {
  auto it = factors.find(d);
  return it == factors.end() ? 0 : it->second;
}

IntPolynomial CycloProduct::expand() const {
  IntPolynomial p{1};
  for (auto [d, m] : factors) {
    IntPolynomial phi = cyclotomic_poly(d);
    for (unsigned i = 0; i < m; ++i) p = p * phi;
  }
  return p;
}

std::string CycloProduct::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto [d, m] : factors) {
    if (!s.empty()) s += '*';
    s += "Phi" + std::to_string(d);
    if (m > 1) s += '^' + std::to_string(m);
  }
  return s;
}

CyclotomicPolynomial params_to_poly(const ParameterVector& p) {
  if (p.empty()) throw InvalidArgument("params_to_poly: empty parameter vector");
  std::map<unsigned, std::map<unsigned, unsigned>> by_den;  // d -> k -> count
  for (const auto& q : p.entries()) {
    if (!q.get_den().fits_uint_p()) throw NotGaloisClosed("denominator too large");
    unsigned d = static_cast<unsigned>(q.get_den().get_ui());
    unsigned k = static_cast<unsigned>(q.get_num().get_ui());
    ++by_den[d][k];
  }
  CycloProduct prod;
  for (const auto& [d, counts] : by_den) {
    unsigned m = counts.begin()->second;
    for (unsigned k = 0; k < d; ++k) {
      if (std::gcd(k, d) != 1) continue;
      auto it = counts.find(k);
      if (it == counts.end() || it->second != m)
        throw NotGaloisClosed("orbit of denominator " + std::to_string(d) + " is incomplete or unbalanced");
    }
    prod.factors[d] = m;
  }
  return {prod.expand(), prod};
}

CycloProduct cyclotomic_factorization(const IntPolynomial& f) {
  if (!f.is_monic()) throw NotCyclotomicProduct("polynomial is not monic");
  const unsigned n = static_cast<unsigned>(f.degree());
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2.
  const unsigned bound = 2 * n * n + 2;
  CycloProduct prod;
  IntPolynomial rest = f;
  for (unsigned d = 1; d <= bound && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<unsigned>(rest.degree())) continue;
    IntPolynomial phi = cyclotomic_poly(d);
    for (;;) {
      auto [q, r] = divmod_monic(rest, phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++prod.factors[d];
    }
  }
  if (rest != IntPolynomial{1}) throw NotCyclotomicProduct("non-cyclotomic factor " + rest.to_string());
  return prod;
}

ParameterVector poly_to_params(const IntPolynomial& f) {
  CycloProduct prod = cyclotomic_factorization(f);
  std::vector<Rational> entries;
  for (auto [d, m] : prod.factors)
    for (unsigned k = 0; k < d; ++k)
      if (std::gcd(k, d) == 1)
        for (unsigned i = 0; i < m; ++i) entries.push_back(make_rational(k, d));
  return ParameterVector(std::move(entries));
}

// ---------------------------------------------------------------------------
// predicates

bool is_self_reciprocal(const IntPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("is_self_reciprocal: zero polynomial");
  const auto& c = f.coefficients();
  const std::size_t n = c.size();
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != c[n - 1 - i]) plus = false;
    if (c[i] != -c[n - 1 - i]) minus = false;
  }
  return plus || minus;
}

bool is_primitive_pair(const IntPolynomial& f, const IntPolynomial& g) {
  // gcd of all exponents carrying a nonzero coefficient in either polynomial
  unsigned long k = 0;
  auto scan = [&k](const IntPolynomial& p) {
    const auto& c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) k = std::gcd(k, static_cast<unsigned long>(i));
  };
  scan(f);
  scan(g);
  return k <= 1;
}

namespace {

using QPoly = std::vector<Rational>;  // low to high, trimmed

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const IntPolynomial& f) {
  QPoly p;
  for (const auto& c : f.coefficients()) p.emplace_back(c);
  return p;
}

QPoly qmod(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

bool have_common_root(const IntPolynomial& f, const IntPolynomial& g) {
  QPoly a = to_qpoly(f), b = to_qpoly(g);
  // gcd(0, h) = h
  if (a.empty()) return b.empty() || b.size() > 1;
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() > 1;
}

bool roots_interlace(const ParameterVector& alpha, const ParameterVector& beta) {
  if (alpha.degree() != beta.degree()) throw InvalidArgument("roots_interlace: unequal degrees");
  struct Tagged {
    Rational value;
    int side;
  };
  std::vector<Tagged> merged;
  for (const auto& q : alpha.entries()) merged.push_back({q, 0});
  for (const auto& q : beta.entries()) merged.push_back({q, 1});
  std::stable_sort(merged.begin(), merged.end(), [](const Tagged& x, const Tagged& y) { return x.value < y.value; });
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    if (merged[i].value == merged[i + 1].value && merged[i].side != merged[i + 1].side)
      throw SharedEntry("parameter " + hgg::to_string(merged[i].value) + " occurs in both vectors");
  for (std::size_t i = 0; i + 1 < merged.size(); ++i)
    if (merged[i].side == merged[i + 1].side) return false;
  return true;
}

std::string to_string(ClosureClass c) {
  switch (c) {
    case ClosureClass::Finite: return "Finite";
    case ClosureClass::Symplectic: return "Symplectic";
    case ClosureClass::Orthogonal: return "Orthogonal";
    case ClosureClass::Other: return "Other";
  }
  return "?";
}

ClosureClass zariski_closure_class(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.degree() != g.degree() || f.degree() < 1) throw InvalidPair("degrees differ");
  if (!f.is_monic() || !g.is_monic()) throw InvalidPair("polynomials must be monic");
  if (!is_self_reciprocal(f) || !is_self_reciprocal(g)) throw InvalidPair("not self-reciprocal");
  if (!is_primitive_pair(f, g)) throw InvalidPair("not a primitive pair");
  if (have_common_root(f, g)) throw InvalidPair("f and g share a root");
  ParameterVector alpha, beta;
  try {
    alpha = poly_to_params(f);
    beta = poly_to_params(g);
  } catch (const NotCyclotomicProduct& e) {
    throw InvalidPair(std::string("not a cyclotomic pair: ") + e.what());
  }
  if (roots_interlace(alpha, beta)) return ClosureClass::Finite;
  if (f.degree() % 2 == 0 && f.constant_term() == 1 && g.constant_term() == 1) return ClosureClass::Symplectic;
  if (f.constant_term() == -g.constant_term()) return ClosureClass::Orthogonal;
  return ClosureClass::Other;
}

DifferenceData difference_leading_data(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.degree() != g.degree()) throw InvalidArgument("difference_leading_data: unequal degrees");
  IntPolynomial diff = f - g;
  if (diff.is_zero()) throw ZeroDifference("f equals g");
  DifferenceData out;
  out.leading_coeff = diff.leading();
  const int n = f.degree();
  for (int i = 1; i < n; ++i) out.v.push_back(diff.coeff(static_cast<std::size_t>(i)));
  out.v.emplace_back(0);
  return out;
}

Integer content(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const std::vector<Integer>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += hgg::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace hgg
