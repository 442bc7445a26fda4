#include "hgg/number.hpp"

#include <cctype>

#include "hgg/error.hpp"

namespace hgg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!valid_integer_text(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

std::size_t bit_size(const Rational& q) {
  std::size_t n = mpz_sizeinbase(q.get_num_mpz_t(), 2);
  std::size_t d = mpz_sizeinbase(q.get_den_mpz_t(), 2);
  return n > d ? n : d;
}

}  // namespace hgg
