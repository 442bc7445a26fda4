#include "hgg/word.hpp"

#include <cctype>
#include <set>

#include "hgg/error.hpp"

namespace hgg {

WordPtr WordExpr::atom(std::string name) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::Atom;
  e->name = std::move(name);
  return e;
}

WordPtr WordExpr::power(WordPtr base, Integer exponent) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::Power;
  e->exponent = std::move(exponent);
  e->args = {std::move(base)};
  return e;
}

WordPtr WordExpr::inverse(WordPtr x) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::Inverse;
  e->args = {std::move(x)};
  return e;
}

WordPtr WordExpr::product(std::vector<WordPtr> factors) {
  if (factors.size() == 1) return factors.front();
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::Product;
  e->args = std::move(factors);
  return e;
}

WordPtr WordExpr::commutator(WordPtr x, WordPtr y) {
  auto e = std::make_shared<WordExpr>();
  e->kind = Kind::Commutator;
  e->args = {std::move(x), std::move(y)};
  return e;
}

std::string WordExpr::to_string() const {
  switch (kind) {
    case Kind::Atom:
      return name;
    case Kind::Power: {
      const auto& base = *args[0];
      bool wrap = base.kind == Kind::Product || base.kind == Kind::Power;
      std::string b = base.to_string();
      return (wrap ? "(" + b + ")" : b) + "^" + hgg::to_string(exponent);
    }
    case Kind::Inverse:
      return "inv(" + args[0]->to_string() + ")";
    case Kind::Commutator:
      return "comm(" + args[0]->to_string() + ", " + args[1]->to_string() + ")";
    case Kind::Product: {
      std::string s;
      for (const auto& f : args) {
        if (!s.empty()) s += ' ';
        s += f->kind == Kind::Product ? "(" + f->to_string() + ")" : f->to_string();
      }
      return args.empty() ? "()" : s;
    }
  }
  return {};
}

std::size_t WordExpr::length() const {
  if (kind == Kind::Atom) return 1;
  std::size_t n = 0;
  for (const auto& a : args) n += a->length();
  return n;
}

bool operator==(const WordExpr& a, const WordExpr& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size()) return false;
  if (a.kind == WordExpr::Kind::Power && a.exponent != b.exponent) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

std::string WordProgram::to_string() const {
  std::string s;
  for (const auto& b : bindings) s += "let " + b.name + " = " + b.expr->to_string() + ";\n";
  s += "return ";
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (i) s += ", ";
    s += results[i]->to_string();
  }
  s += '\n';
  return s;
}

bool WordProgram::binds(std::string_view name) const {
  for (const auto& b : bindings)
    if (b.name == name) return true;
  return false;
}

bool operator==(const WordProgram& a, const WordProgram& b) {
  if (a.bindings.size() != b.bindings.size() || a.results.size() != b.results.size()) return false;
  for (std::size_t i = 0; i < a.bindings.size(); ++i)
    if (a.bindings[i].name != b.bindings[i].name || !(*a.bindings[i].expr == *b.bindings[i].expr)) return false;
  for (std::size_t i = 0; i < a.results.size(); ++i)
    if (!(*a.results[i] == *b.results[i])) return false;
  return true;
}

namespace {

void check_expr(const WordExpr& e, const std::set<std::string>& known) {
  if (e.kind == WordExpr::Kind::Atom) {
    if (!known.count(e.name)) throw ParseError("undefined name '" + e.name + "'", e.line, e.column);
    return;
  }
  for (const auto& a : e.args) check_expr(*a, known);
}

}  // namespace

void WordProgram::check_names(const std::vector<std::string>& predefined) const {
  std::set<std::string> known(predefined.begin(), predefined.end());
  for (const auto& b : bindings) {
    check_expr(*b.expr, known);
    known.insert(b.name);
  }
  for (const auto& r : results) check_expr(*r, known);
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t line_offset) : text_(text), line_(1 + line_offset) {}

  WordProgram program() {
    WordProgram p;
    std::set<std::string> bound;
    skip_space();
    while (peek_word() == "let") {
      take_word();
      auto [name, l, c] = name_token();
      if (is_keyword(name)) throw ParseError("'" + name + "' is reserved", l, c);
      if (!bound.insert(name).second) throw ParseError("'" + name + "' is bound twice", l, c);
      expect('=');
      WordPtr e = expr();
      expect(';');
      p.bindings.push_back({name, e});
    }
    if (peek_word() != "return") fail("expected 'let' or 'return'");
    take_word();
    p.results.push_back(expr());
    skip_space();
    if (peek() == ',') {
      ++pos_;
      ++col_;
      p.results.push_back(expr());
    }
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return p;
  }

  WordPtr lone_expression() {
    WordPtr e = expr();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

 private:
  static bool is_keyword(const std::string& s) {
    return s == "let" || s == "return" || s == "inv" || s == "comm";
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  static bool name_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool name_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  std::string_view peek_word() {
    skip_space();
    std::size_t end = pos_;
    while (end < text_.size() && name_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  void take_word() {
    auto w = peek_word();
    pos_ += w.size();
    col_ += w.size();
  }

  struct Token {
    std::string text;
    std::size_t line, column;
  };

  Token name_token() {
    skip_space();
    if (!name_start(peek())) fail("expected a name");
    Token t{std::string(peek_word()), line_, col_};
    take_word();
    return t;
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
    ++col_;
  }

  bool starts_term() {
    skip_space();
    char ch = peek();
    if (ch == '(') return true;
    if (!name_start(ch)) return false;
    auto w = peek_word();
    return w != "let" && w != "return";
  }

  WordPtr expr() {
    std::vector<WordPtr> factors;
    if (!starts_term()) fail("expected an expression");
    while (starts_term()) factors.push_back(term());
    return WordExpr::product(std::move(factors));
  }

  WordPtr term() {
    WordPtr base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    ++col_;
    skip_space();
    std::size_t start = pos_, l = line_, c = col_;
    if (peek() == '-' || peek() == '+') {
      ++pos_;
      ++col_;
    }
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      ++col_;
    }
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected an integer exponent", l, c);
    if (digits[0] == '+') digits.erase(0, 1);
    auto p = std::make_shared<WordExpr>();
    p->kind = WordExpr::Kind::Power;
    p->exponent = Integer(digits);
    p->args = {base};
    p->line = l;
    p->column = c;
    return p;
  }

  WordPtr primary() {
    skip_space();
    std::size_t l = line_, c = col_;
    if (peek() == '(') {
      ++pos_;
      ++col_;
      skip_space();
      if (peek() == ')') {
        ++pos_;
        ++col_;
        return WordExpr::product({});
      }
      WordPtr e = expr();
      expect(')');
      return e;
    }
    Token t = name_token();
    if (t.text == "inv" || t.text == "comm") {
      skip_space();
      if (peek() != '(') fail("expected '(' after " + t.text);
      ++pos_;
      ++col_;
      WordPtr x = expr();
      if (t.text == "inv") {
        expect(')');
        auto e = std::const_pointer_cast<WordExpr>(WordExpr::inverse(x));
        e->line = l;
        e->column = c;
        return e;
      }
      expect(',');
      WordPtr y = expr();
      expect(')');
      auto e = std::const_pointer_cast<WordExpr>(WordExpr::commutator(x, y));
      e->line = l;
      e->column = c;
      return e;
    }
    if (is_keyword(t.text)) throw ParseError("unexpected keyword '" + t.text + "'", t.line, t.column);
    auto e = std::const_pointer_cast<WordExpr>(WordExpr::atom(t.text));
    e->line = t.line;
    e->column = t.column;
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_ = 1;
};

}  // namespace

WordProgram parse_program(std::string_view text, std::size_t line_offset) {
  return Parser(text, line_offset).program();
}

WordPtr parse_expression(std::string_view text) { return Parser(text, 0).lone_expression(); }

WordEvaluator::WordEvaluator(std::map<std::string, RationalMatrix> env, CommutatorConvention convention)
    : env_(std::move(env)), convention_(convention), n_(env_.empty() ? 0 : env_.begin()->second.size()) {}

const RationalMatrix& WordEvaluator::inverse_of(const std::string& name) {
  auto it = inverses_.find(name);
  if (it == inverses_.end()) it = inverses_.emplace(name, inverse(env_.at(name))).first;
  return it->second;
}

RationalMatrix WordEvaluator::evaluate(const WordExpr& e) {
  using K = WordExpr::Kind;
  switch (e.kind) {
    case K::Atom: {
      auto it = env_.find(e.name);
      if (it == env_.end()) throw UnboundName("unbound name '" + e.name + "'");
      return it->second;
    }
    case K::Inverse:
      if (e.args[0]->kind == K::Atom && env_.count(e.args[0]->name)) return inverse_of(e.args[0]->name);
      return inverse(evaluate(*e.args[0]));
    case K::Power:
      if (e.args[0]->kind == K::Atom && e.exponent < 0 && env_.count(e.args[0]->name))
        return power(inverse_of(e.args[0]->name), Integer(-e.exponent));
      return power(evaluate(*e.args[0]), e.exponent);
    case K::Commutator:
      return commutator(evaluate(*e.args[0]), evaluate(*e.args[1]), convention_);
    case K::Product: {
      if (e.args.empty()) {
        if (n_ == 0) throw InvalidArgument("empty product needs a dimension");
        return RationalMatrix::identity(n_);
      }
      RationalMatrix acc = evaluate(*e.args[0]);
      for (std::size_t i = 1; i < e.args.size(); ++i) acc = acc * evaluate(*e.args[i]);
      return acc;
    }
  }
  throw InvalidArgument("corrupt word expression");
}

std::vector<RationalMatrix> WordEvaluator::run(const WordProgram& program) {
  for (const auto& b : program.bindings) {
    RationalMatrix value = evaluate(*b.expr);
    inverses_.erase(b.name);
    env_[b.name] = std::move(value);
  }
  std::vector<RationalMatrix> out;
  for (const auto& r : program.results) out.push_back(evaluate(*r));
  return out;
}

std::vector<RationalMatrix> evaluate_program(const WordProgram& program,
                                             const std::map<std::string, RationalMatrix>& env,
                                             CommutatorConvention convention) {
  return WordEvaluator(env, convention).run(program);
}

}  // namespace hgg
