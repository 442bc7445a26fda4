#include <doctest.h>

#include <filesystem>
#include <set>

#include "hgg/catalog.hpp"
#include "hgg/error.hpp"
#include "test_support.hpp"

using namespace hgg;

namespace {

const Catalog& degree6() {
  static const Catalog cat = enumerate_pairs(6);
  return cat;
}

}  // namespace

TEST_CASE("counts") {
  CatalogSummary s = counts(degree6());
  CHECK(s.classes == 458);
  CHECK(s.sv_count == 211);
  CHECK(s.raw_pairs == 1812);
  CHECK(s.rows.size() == 15);
  for (const auto& r : s.rows) {
    CAPTURE(r.label);
    CHECK(r.v_matches());
  }
}

TEST_CASE("table rows") {
  const Catalog& cat = degree6();
  auto P = ParameterVector::parse;
  const CatalogEntry* c1 = cat.find_class(P("0,0,0,0,1/2,1/2"), P("1/6,1/3,1/3,2/3,2/3,5/6"));
  REQUIRE(c1);
  CHECK(c1->label == "C-1");
  CHECK(to_string(c1->v) == "(-3,-3,3,-3,-3,0)");
  CHECK(c1->prop1_obstructed);
  const CatalogEntry* c61 = cat.find_class(P("1/3,1/3,1/3,2/3,2/3,2/3"), P("1/9,2/9,4/9,5/9,7/9,8/9"));
  REQUIRE(c61);
  CHECK(c61->label == "C-61");
  CatalogEntry row = describe_pair(P("1/3,1/3,1/3,2/3,2/3,2/3"), P("1/9,2/9,4/9,5/9,7/9,8/9"));
  CHECK(to_string(row.v) == "(3,6,6,6,3,0)");
  CHECK(row.gcd_v == 3);
  // The representative is a shifted copy; v changes but its gcd does not.
  CHECK(c61->gcd_v == 3);
  // Swapping f and g lands in the same class.
  CHECK(cat.find_class(P("1/6,1/3,1/3,2/3,2/3,5/6"), P("0,0,0,0,1/2,1/2")) == c1);
  CHECK_THROWS_AS(enumerate_pairs(5), InvalidArgument);
}

TEST_CASE("every entry is a valid symplectic pair") {
  for (const auto& e : degree6().entries) {
    CAPTURE(e.shift_class_id);
    CHECK(is_self_reciprocal(e.f));
    CHECK(is_self_reciprocal(e.g));
    CHECK(is_primitive_pair(e.f, e.g));
    CHECK_FALSE(have_common_root(e.f, e.g));
    CHECK(e.f.constant_term() == 1);
    CHECK(e.g.constant_term() == 1);
    CHECK(zariski_closure_class(e.f, e.g) == ClosureClass::Symplectic);
    CHECK(e.v.back() == 0);
    CHECK(e.sv_flag == (abs(e.lead_diff) <= 2));
    RationalMatrix C = inverse(companion(e.f)) * companion(e.g);
    for (std::size_t i = 0; i < 6; ++i) CHECK(C(i, 5) - (i == 5 ? 1 : 0) == e.v[i]);
    // The representative is the smallest member of its class.
    for (const auto& m : e.members) CHECK_FALSE(m < std::make_pair(e.alpha, e.beta));
  }
}

TEST_CASE("classes partition the valid pairs and are closed under shifts") {
  const Catalog& cat = degree6();
  std::set<std::pair<ParameterVector, ParameterVector>> all;
  std::size_t total = 0;
  for (const auto& e : cat.entries) {
    total += e.members.size();
    for (const auto& m : e.members) all.insert(m);
  }
  CHECK(total == cat.raw_pairs);
  CHECK(all.size() == cat.raw_pairs);
  for (const auto& e : cat.entries)
    for (int k = 1; k < 12; ++k) {
      Rational r(k, 12);
      auto a = e.alpha.shifted(r), b = e.beta.shifted(r);
      if (all.count({a, b})) CHECK(cat.find_class(a, b) == &e);
    }
}

TEST_CASE("enumeration is independent of the worker count") {
  Catalog two = enumerate_pairs(6, 2);
  CHECK(catalog_to_tsv(two) == catalog_to_tsv(degree6()));
}

TEST_CASE("status annotation") {
  Catalog cat = degree6();
  annotate_status(cat, {}, certified_fixture_labels());
  CHECK(cat.find_label("C-1")->status == "arithmetic-this-paper");
  // The printed C-10 word list fails, but the alternative certificate verifies.
  CHECK(cat.find_label("C-10")->status == "arithmetic-this-paper");
  std::size_t sv = 0, annotated = 0;
  for (const auto& e : cat.entries) {
    sv += e.status == "arithmetic-SV";
    annotated += !e.status.empty();
  }
  CHECK(sv == 211);
  CHECK(annotated == 211 + 4);

  auto ext = parse_annotations(
      "# remaining cases\nA-15\topen\nA-16\topen\nA-21\topen\nC-9\topen\nC-31\topen\nC-32\topen\n"
      "C-47\topen\nC-51\topen\nC-55\topen\nC-60\topen\nC-61\topen\n");
  annotate_status(cat, ext, certified_fixture_labels());
  CHECK(counts(cat).status_counts["open"] == 11);

  CHECK_THROWS_AS(annotate_status(cat, {{"Z-9", "open"}}, {}), UnknownLabel);
  CHECK_THROWS_AS(parse_annotations("C-1\tarithmetic"), ParseError);
  CHECK_THROWS_AS(parse_annotations("C-1 open"), ParseError);
}

TEST_CASE("gcd(v) > 2 list") {
  CatalogSummary s = counts(degree6());
  std::set<std::string> labelled;
  for (const auto& e : degree6().entries)
    if (e.prop1_obstructed && e.label.rfind("S-", 0) != 0) labelled.insert(e.label);
  CHECK(labelled.count("C-1"));
  CHECK(labelled.count("C-10"));
  CHECK(labelled.count("C-42"));
  CHECK(labelled.count("C-59"));
  CHECK(labelled.count("C-61"));
  CHECK(labelled.count("A-15"));
  CHECK_FALSE(s.discrepancies.empty());
}

TEST_CASE("TSV round trip") {
  Catalog cat = degree6();
  annotate_status(cat, {}, certified_fixture_labels());
  std::string text = catalog_to_tsv(cat);
  Catalog back = catalog_from_tsv(text);
  CHECK(catalog_to_tsv(back) == text);
  CHECK(back.entries.size() == 458);
  CHECK(back.raw_pairs == cat.raw_pairs);

  auto path = std::filesystem::temp_directory_path() / "hgg_catalog_test.tsv";
  save_catalog(cat, path);
  CHECK(catalog_to_tsv(load_catalog(path)) == text);
  std::filesystem::remove(path);

  std::string broken = text;
  broken.replace(broken.find("-3,-3,3,-3,-3,0"), 15, "-3,-3,3,-3,-3,1");
  CHECK_THROWS_AS(catalog_from_tsv(broken), ParseError);
}
