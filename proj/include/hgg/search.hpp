#pragma once

// Bounded enumeration of words in a, b, c, q1 = b a^-1 and their inverses,
// looking for elements of the highest and second highest root groups.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgg/certify.hpp"
#include "hgg/matrix.hpp"
#include "hgg/word.hpp"

namespace hgg {

struct SearchBudget {
  int max_depth = 2;
  std::size_t max_entry_bits = 512;
  std::size_t max_nodes = 200000;
  unsigned jobs = 1;
};

struct SearchHit {
  WordPtr word;
  std::string text;
  RationalMatrix value;
  Rational parameter;  // y or x
};

struct SearchOutcome {
  std::optional<SearchHit> highest;  // in U_{t1^2}
  std::optional<SearchHit> second;   // in U_{t1 t2}
  std::size_t nodes = 0;
  int depth_reached = 0;
  bool budget_exhausted = false;

  bool complete() const { return highest && second; }
  /// "return <q1>, <q2>" wrapped as a certificate; only when complete().
  std::optional<Certificate> certificate(const std::string& label, const ParameterVector& alpha,
                                         const ParameterVector& beta, const std::optional<RationalMatrix>& X,
                                         CommutatorConvention convention) const;
  /// Like certificate(), but available as soon as a highest-root hit exists;
  /// the second result repeats it when no second-root hit was found, so
  /// only the q1 stages are meaningful then.
  std::optional<Certificate> probe_certificate(const std::string& label, const ParameterVector& alpha,
                                               const ParameterVector& beta, const std::optional<RationalMatrix>& X,
                                               CommutatorConvention convention) const;
};

/// Canonical order of words: shorter text first, then lexicographic.
bool canonical_less(const std::string& x, const std::string& y);

SearchOutcome search_certificates(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                  const Rational& lambda1, const Rational& lambda2, const SearchBudget& budget,
                                  CommutatorConvention convention = CommutatorConvention::ProductFirst);

struct CensusEntry {
  std::string word;
  std::string classification;  // root name, "identity" or "other unipotent"
  RationalMatrix value;
};

/// Distinct unipotent values among words up to `depth`, each with the
/// canonically smallest word producing it.
std::vector<CensusEntry> unipotent_census(const RationalMatrix& a, const RationalMatrix& b, const RationalMatrix& c,
                                          int depth, const SearchBudget& budget = {},
                                          CommutatorConvention convention = CommutatorConvention::ProductFirst);

}  // namespace hgg
