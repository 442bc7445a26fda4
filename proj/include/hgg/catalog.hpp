#pragma once

// All hypergeometric pairs (f, g) of a given even degree built from
// cyclotomic factors with f(0) = g(0) = 1, classified and grouped up to a
// common scalar shift of the parameters and exchange of f and g.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgg/cyclotomic.hpp"

namespace hgg {

struct CatalogEntry {
  std::string label;
  ParameterVector alpha, beta;  // class representative
  IntPolynomial f, g;
  ClosureClass closure = ClosureClass::Symplectic;
  std::vector<Integer> v;
  Integer gcd_v;
  Integer lead_diff;
  bool sv_flag = false;           // |lead_diff| <= 2
  bool prop1_obstructed = false;  // gcd_v > 2
  std::string shift_class_id;     // "alpha|beta" of the representative
  std::string status;             // "" when unannotated
  /// Ordered pairs in the class (not persisted).
  std::vector<std::pair<ParameterVector, ParameterVector>> members;
};

struct Catalog {
  unsigned degree = 6;
  std::size_t raw_pairs = 0;  // ordered valid pairs before deduplication
  std::vector<CatalogEntry> entries;

  /// Entry whose class contains (alpha, beta) in either order. Only works on
  /// a freshly enumerated catalog (members are not persisted).
  const CatalogEntry* find_class(const ParameterVector& alpha, const ParameterVector& beta) const;
  const CatalogEntry* find_label(const std::string& label) const;
};

/// A labelled row of the published tables of arithmetic and open cases.
struct LabelledPair {
  std::string label;
  ParameterVector alpha, beta;
  std::vector<Integer> v;
};
const std::vector<LabelledPair>& labelled_pairs();

/// Throws InvalidArgument for odd degree.
Catalog enumerate_pairs(unsigned degree = 6, unsigned jobs = 1);

/// Catalog entry fields for one pair; `label` and class data left empty.
CatalogEntry describe_pair(const ParameterVector& alpha, const ParameterVector& beta);

struct RowCheck {
  std::string label;
  bool found = false;
  std::vector<Integer> printed_v, computed_v;
  Integer gcd_v;
  bool v_matches() const { return found && printed_v == computed_v; }
};

struct CatalogSummary {
  std::size_t raw_pairs = 0;
  std::size_t classes = 0;
  std::size_t sv_count = 0;
  std::size_t prop1_count = 0;
  std::map<std::string, std::size_t> status_counts;
  std::vector<RowCheck> rows;
  /// Human-readable notes on the gcd(v) > 2 list versus the tables.
  std::vector<std::string> discrepancies;
};

CatalogSummary counts(const Catalog& catalog);
std::string to_string(const CatalogSummary& s);

inline constexpr const char* kStatuses[] = {"arithmetic-SV",         "arithmetic-BDSS", "arithmetic-BDN",
                                            "arithmetic-this-paper", "thin",            "open"};

/// "label<TAB>status" lines; '#' comments and blank lines ignored. Throws
/// ParseError for malformed lines or unknown statuses.
std::map<std::string, std::string> parse_annotations(std::string_view text);
std::map<std::string, std::string> load_annotations(const std::filesystem::path& file);

/// Sets arithmetic-SV from sv_flag and arithmetic-this-paper for labels with
/// a certificate that verifies, then merges `external` for the remaining
/// entries. Throws UnknownLabel for labels not in the catalog.
void annotate_status(Catalog& catalog, const std::map<std::string, std::string>& external,
                     const std::vector<std::string>& certified_labels);

/// Labels whose compiled-in certificates verify end to end.
std::vector<std::string> certified_fixture_labels();

std::string catalog_to_tsv(const Catalog& catalog);
Catalog catalog_from_tsv(std::string_view text);
void save_catalog(const Catalog& catalog, const std::filesystem::path& file);
Catalog load_catalog(const std::filesystem::path& file);

}  // namespace hgg
