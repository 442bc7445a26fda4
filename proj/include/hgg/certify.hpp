#pragma once

// Arithmeticity certificates: a word program in the conjugated generators
// a, b, c whose two results should land in the highest and second highest
// root groups. verify_certificate runs the whole pipeline from parameters.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hgg/cyclotomic.hpp"
#include "hgg/hyperbolic.hpp"
#include "hgg/matrix.hpp"
#include "hgg/word.hpp"

namespace hgg {

struct Certificate {
  std::string label;
  ParameterVector alpha, beta;
  std::optional<RationalMatrix> basis_matrix;
  CommutatorConvention convention = CommutatorConvention::ProductFirst;
  WordProgram program;
  std::optional<RationalMatrix> expected_q1, expected_q2;

  friend bool operator==(const Certificate& x, const Certificate& y);
};

enum class Stage {
  PairValid,
  Symplectic,
  FormComputed,
  BasisAntidiagonal,
  ProgramEvaluated,
  HighestRoot,
  SecondHighestRoot,
  FormsPreserved,
  ExpectedMatrices,
};

inline constexpr std::array<Stage, 9> kAllStages = {
    Stage::PairValid,        Stage::Symplectic,  Stage::FormComputed,
    Stage::BasisAntidiagonal, Stage::ProgramEvaluated, Stage::HighestRoot,
    Stage::SecondHighestRoot, Stage::FormsPreserved,   Stage::ExpectedMatrices,
};

std::string to_string(Stage s);

struct StageResult {
  Stage stage;
  bool passed;
  std::string detail;
};

struct VerificationReport {
  std::string label;
  std::vector<StageResult> stages;  // in pipeline order, only those reached
  std::optional<Stage> failed;      // first failing stage

  IntPolynomial f, g;
  RationalMatrix A, B, C;
  RationalMatrix omega;             // canonical, standard basis
  RationalMatrix X, omega2;         // hyperbolic basis and the form in it
  std::array<Rational, 3> lambdas;
  ConjugatedGenerators generators;
  std::optional<RationalMatrix> q1, q2;
  std::optional<Rational> y, x;

  bool certified() const { return !failed && !stages.empty(); }
  bool passed(Stage s) const;
  Rational lambda_ratio() const { return lambdas[0] / lambdas[1]; }

  /// Human-readable; the last line is "ArithmeticCertified; y=.., x=.." or
  /// "Failed(<stage>): <detail>".
  std::string to_string() const;
  /// key<TAB>value lines.
  std::string to_tsv() const;
  std::string conclusion() const;
};

/// Never throws for pipeline failures; they become Failed(stage).
VerificationReport verify_certificate(const Certificate& cert);

/// Names a program may use without binding them: a, b, c, and q1 = b a^-1
/// unless the program binds q1 itself.
std::vector<std::string> predefined_names(const WordProgram& program);

std::string save_certificate(const Certificate& cert);
void save_certificate(const Certificate& cert, const std::filesystem::path& file);
/// Throws ParseError with line and column.
Certificate parse_certificate(std::string_view text);
Certificate load_certificate(const std::filesystem::path& file);

/// The four worked cases, in order C-1, C-10, C-42, C-59.
std::vector<Certificate> builtin_fixtures();
/// Fixture by name ("C-1", ..., "C-10-alt"). Reads $HGG_FIXTURE_DIR/<name>.cert
/// when that variable is set, else the compiled-in copy. Throws UnknownLabel.
Certificate load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace hgg
