#pragma once

// Word expressions over named matrices and the small program language used
// by certificates:
//
//   program := stmt* "return" expr ("," expr)?
//   stmt    := "let" NAME "=" expr ";"
//   expr    := term term*                 juxtaposition is a product
//   term    := primary ("^" INT)?
//   primary := NAME | "inv(" expr ")" | "comm(" expr "," expr ")" | "(" expr ")"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hgg/matrix.hpp"
#include "hgg/number.hpp"

namespace hgg {

struct WordExpr;
using WordPtr = std::shared_ptr<const WordExpr>;

struct WordExpr {
  enum class Kind { Atom, Power, Inverse, Product, Commutator };

  Kind kind = Kind::Atom;
  std::string name;            // Atom
  Integer exponent;            // Power
  std::vector<WordPtr> args;   // Power/Inverse: 1, Commutator: 2, Product: any
  std::size_t line = 0, column = 0;

  static WordPtr atom(std::string name);
  static WordPtr power(WordPtr base, Integer exponent);
  static WordPtr inverse(WordPtr x);
  static WordPtr product(std::vector<WordPtr> factors);
  static WordPtr commutator(WordPtr x, WordPtr y);

  /// Canonical text, re-parseable.
  std::string to_string() const;
  /// Number of atom occurrences.
  std::size_t length() const;
};

bool operator==(const WordExpr& a, const WordExpr& b);

struct WordProgram {
  struct Binding {
    std::string name;
    WordPtr expr;
  };
  std::vector<Binding> bindings;
  std::vector<WordPtr> results;

  /// One "let" per line, then "return ...".
  std::string to_string() const;
  /// Names referenced before being bound, excluding the predefined ones.
  /// Throws ParseError at the first offender.
  void check_names(const std::vector<std::string>& predefined) const;
  /// True if a let statement binds this name.
  bool binds(std::string_view name) const;

  friend bool operator==(const WordProgram& a, const WordProgram& b);
};

/// Throws ParseError with 1-based line and column. `line_offset` is added
/// to reported lines when the program is embedded in a larger file.
WordProgram parse_program(std::string_view text, std::size_t line_offset = 0);
WordPtr parse_expression(std::string_view text);

/// Evaluates expressions against an environment. Let bindings are evaluated
/// once and cached; a binding may shadow a predefined name. Throws
/// UnboundName or Singular.
class WordEvaluator {
 public:
  WordEvaluator(std::map<std::string, RationalMatrix> env, CommutatorConvention convention);

  RationalMatrix evaluate(const WordExpr& e);
  std::vector<RationalMatrix> run(const WordProgram& program);

  const std::map<std::string, RationalMatrix>& environment() const { return env_; }

 private:
  const RationalMatrix& inverse_of(const std::string& name);

  std::map<std::string, RationalMatrix> env_;
  std::map<std::string, RationalMatrix> inverses_;
  CommutatorConvention convention_;
  std::size_t n_;
};

/// Convenience wrapper around WordEvaluator::run.
std::vector<RationalMatrix> evaluate_program(const WordProgram& program,
                                             const std::map<std::string, RationalMatrix>& env,
                                             CommutatorConvention convention);

}  // namespace hgg
