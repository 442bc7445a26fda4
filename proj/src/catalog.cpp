#include "hgg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hgg/certify.hpp"
#include "hgg/error.hpp"

namespace hgg {

namespace {

using Pair = std::pair<ParameterVector, ParameterVector>;

std::string pair_key(const ParameterVector& a, const ParameterVector& b) { return a.to_string() + "|" + b.to_string(); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Multisets of cyclotomic indices d (phi(d) <= degree) of total degree
// `degree`, with an even number of Phi_1 factors so that f(0) = 1.
void factor_multisets(const std::vector<unsigned>& ds, std::size_t from, unsigned remaining,
                      std::vector<unsigned>& current, std::vector<CycloProduct>& out) {
  if (remaining == 0) {
    CycloProduct p;
    for (unsigned d : current) ++p.factors[d];
    if (p.multiplicity(1) % 2 == 0) out.push_back(p);
    return;
  }
  for (std::size_t i = from; i < ds.size(); ++i) {
    unsigned phi = euler_phi(ds[i]);
    if (phi > remaining) continue;
    current.push_back(ds[i]);
    factor_multisets(ds, i, remaining - phi, current, out);
    current.pop_back();
  }
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

std::string flags_text(const CatalogEntry& e) {
  std::string s;
  if (e.sv_flag) s += "sv";
  if (e.prop1_obstructed) s += s.empty() ? "prop1" : ",prop1";
  return s.empty() ? "-" : s;
}

std::string ints_text(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

}  // namespace

const std::vector<LabelledPair>& labelled_pairs() {
  static const std::vector<LabelledPair> rows = [] {
    auto row = [](const char* label, const char* a, const char* b, std::vector<Integer> v) {
      return LabelledPair{label, ParameterVector::parse(a), ParameterVector::parse(b), std::move(v)};
    };
    return std::vector<LabelledPair>{
        row("C-1", "0,0,0,0,1/2,1/2", "1/3,1/3,2/3,2/3,1/6,5/6", ints({-3, -3, 3, -3, -3, 0})),
        row("C-10", "0,0,0,0,1/3,2/3", "1/9,2/9,4/9,5/9,7/9,8/9", ints({-3, 3, -3, 3, -3, 0})),
        row("C-42", "0,0,1/4,1/4,3/4,3/4", "1/3,2/3,1/12,5/12,7/12,11/12", ints({-3, 3, -3, 3, -3, 0})),
        row("C-59", "0,0,1/12,5/12,7/12,11/12", "1/3,2/3,1/4,3/4,1/4,3/4", ints({-3, -3, 0, -3, -3, 0})),
        row("A-15", "0,0,0,0,0,0", "1/3,1/3,1/3,2/3,2/3,2/3", ints({-9, 9, -27, 9, -9, 0})),
        row("A-16", "0,0,0,0,0,0", "1/3,1/3,2/3,2/3,1/4,3/4", ints({-8, 11, -24, 11, -8, 0})),
        row("A-21", "0,0,0,0,0,0", "1/3,2/3,1/5,2/5,3/5,4/5", ints({-8, 12, -23, 12, -8, 0})),
        row("C-9", "0,0,0,0,1/3,2/3", "1/7,2/7,3/7,4/7,5/7,6/7", ints({-4, 2, -3, 2, -4, 0})),
        row("C-31", "0,0,0,0,1/6,5/6", "1/3,2/3,1/5,2/5,3/5,4/5", ints({-7, 8, -17, 8, -7, 0})),
        row("C-32", "0,0,0,0,1/6,5/6", "1/4,3/4,1/12,5/12,7/12,11/12", ints({-5, 11, -14, 11, -5, 0})),
        row("C-47", "0,0,1/5,2/5,3/5,4/5", "1/2,1/2,1/3,1/3,2/3,2/3", ints({-5, -8, -10, -8, -5, 0})),
        row("C-51", "0,0,1/6,1/6,5/6,5/6", "1/2,1/2,1/12,5/12,7/12,11/12", ints({-6, 8, -8, 8, -6, 0})),
        row("C-55", "0,0,1/8,3/8,5/8,7/8", "1/2,1/2,1/12,5/12,7/12,11/12", ints({-4, 1, 2, 1, -4, 0})),
        row("C-60", "1/3,1/3,1/3,2/3,2/3,2/3", "1/6,1/6,1/6,5/6,5/6,5/6", ints({6, 0, 14, 0, 6, 0})),
        row("C-61", "1/3,1/3,1/3,2/3,2/3,2/3", "1/9,2/9,4/9,5/9,7/9,8/9", ints({3, 6, 6, 6, 3, 0})),
    };
  }();
  return rows;
}

CatalogEntry describe_pair(const ParameterVector& alpha, const ParameterVector& beta) {
  CatalogEntry e;
  e.alpha = alpha;
  e.beta = beta;
  e.f = params_to_poly(alpha).poly;
  e.g = params_to_poly(beta).poly;
  e.closure = zariski_closure_class(e.f, e.g);
  DifferenceData d = difference_leading_data(e.f, e.g);
  e.v = d.v;
  e.lead_diff = d.leading_coeff;
  e.gcd_v = content(e.v);
  e.sv_flag = abs(e.lead_diff) <= 2;
  e.prop1_obstructed = e.gcd_v > 2;
  e.shift_class_id = pair_key(alpha, beta);
  return e;
}

const CatalogEntry* Catalog::find_class(const ParameterVector& alpha, const ParameterVector& beta) const {
  for (const auto& e : entries)
    for (const auto& [a, b] : e.members)
      if ((a == alpha && b == beta) || (a == beta && b == alpha)) return &e;
  return nullptr;
}

const CatalogEntry* Catalog::find_label(const std::string& label) const {
  for (const auto& e : entries)
    if (e.label == label) return &e;
  return nullptr;
}

Catalog enumerate_pairs(unsigned degree, unsigned jobs) {
  if (degree == 0 || degree % 2 != 0) throw InvalidArgument("degree must be even and positive");
  std::vector<unsigned> ds;
  // phi(d) >= sqrt(d / 2), so larger d cannot occur.
  for (unsigned d = 1; d <= 2 * degree * degree; ++d)
    if (euler_phi(d) <= degree) ds.push_back(d);
  std::vector<CycloProduct> products;
  std::vector<unsigned> scratch;
  factor_multisets(ds, 0, degree, scratch, products);

  std::vector<IntPolynomial> polys;
  std::vector<ParameterVector> params;
  for (const auto& p : products) {
    polys.push_back(p.expand());
    params.push_back(poly_to_params(polys.back()));
  }

  // Valid ordered pairs, found independently per f and merged in order.
  std::vector<std::vector<Pair>> per_f(products.size());
  auto scan = [&](std::size_t i) {
    for (std::size_t j = 0; j < products.size(); ++j) {
      bool shared = false;
      for (const auto& [d, m] : products[i].factors)
        if (products[j].multiplicity(d)) shared = true;
      if (shared || !is_primitive_pair(polys[i], polys[j])) continue;
      if (zariski_closure_class(polys[i], polys[j]) != ClosureClass::Symplectic) continue;
      per_f[i].push_back({params[i], params[j]});
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < products.size(); i += jobs) scan(i);
    });
  for (auto& th : pool) th.join();

  std::vector<Pair> pairs;
  for (auto& v : per_f)
    for (auto& p : v) pairs.push_back(std::move(p));
  std::sort(pairs.begin(), pairs.end());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index.emplace(pair_key(pairs[i].first, pairs[i].second), i);

  // Every parameter value a valid image can contain.
  std::set<Rational> targets;
  for (unsigned d : ds)
    for (unsigned k = 0; k < d; ++k) targets.insert(make_rational(k, d));

  DisjointSets sets(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    for (const auto& t : targets) {
      Rational r = t - a.entries().front();
      if (r < 0) r += 1;
      ParameterVector a2 = a.shifted(r), b2 = b.shifted(r);
      for (const auto& key : {pair_key(a2, b2), pair_key(b2, a2)}) {
        auto it = index.find(key);
        if (it != index.end()) sets.unite(i, it->second);
      }
    }
  }

  // Pairs are sorted, so the root of each class is its smallest member.
  Catalog cat;
  cat.degree = degree;
  cat.raw_pairs = pairs.size();
  std::map<std::size_t, std::size_t> entry_of_root;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::size_t root = sets.find(i);
    auto it = entry_of_root.find(root);
    if (it == entry_of_root.end()) {
      it = entry_of_root.emplace(root, cat.entries.size()).first;
      cat.entries.push_back(describe_pair(pairs[root].first, pairs[root].second));
    }
    cat.entries[it->second].members.push_back(pairs[i]);
  }

  for (const auto& row : labelled_pairs()) {
    for (auto& e : cat.entries) {
      bool hit = false;
      for (const auto& [a, b] : e.members)
        if ((a == row.alpha && b == row.beta) || (a == row.beta && b == row.alpha)) hit = true;
      if (hit) e.label = row.label;
    }
  }
  std::size_t serial = 0;
  for (auto& e : cat.entries) {
    ++serial;
    if (!e.label.empty()) continue;
    char buf[16];
    std::snprintf(buf, sizeof buf, "S-%03zu", serial);
    e.label = buf;
  }
  return cat;
}

CatalogSummary counts(const Catalog& catalog) {
  CatalogSummary s;
  s.raw_pairs = catalog.raw_pairs;
  s.classes = catalog.entries.size();
  for (const auto& e : catalog.entries) {
    s.sv_count += e.sv_flag;
    s.prop1_count += e.prop1_obstructed;
    if (!e.status.empty()) ++s.status_counts[e.status];
  }

  const std::set<std::string> stated{"A-1", "C-1", "C-10", "C-42", "C-59", "C-61"};
  std::set<std::string> computed;
  for (const auto& row : labelled_pairs()) {
    RowCheck rc;
    rc.label = row.label;
    rc.printed_v = row.v;
    const CatalogEntry* e = catalog.find_label(row.label);
    rc.found = e != nullptr;
    try {
      CatalogEntry own = describe_pair(row.alpha, row.beta);
      rc.computed_v = own.v;
      rc.gcd_v = own.gcd_v;
      if (own.gcd_v > 2) computed.insert(row.label);
    } catch (const Error&) {
      rc.found = false;
    }
    s.rows.push_back(rc);
  }
  for (const auto& label : stated) {
    bool in_tables = false;
    for (const auto& row : labelled_pairs()) in_tables = in_tables || row.label == label;
    if (!in_tables) s.discrepancies.push_back(label + " is listed among the gcd(v) > 2 cases but has no table row");
    else if (!computed.count(label)) s.discrepancies.push_back(label + " is listed among the gcd(v) > 2 cases but its gcd(v) <= 2");
  }
  for (const auto& label : computed)
    if (!stated.count(label)) {
      for (const auto& rc : s.rows)
        if (rc.label == label)
          s.discrepancies.push_back(label + " has gcd(v) = " + to_string(rc.gcd_v) +
                                    " > 2 but is not listed among the gcd(v) > 2 cases");
    }
  return s;
}

std::string to_string(const CatalogSummary& s) {
  std::ostringstream os;
  os << "raw ordered pairs: " << s.raw_pairs << "\n";
  os << "classes: " << s.classes << "\n";
  os << "|lead(f-g)| <= 2: " << s.sv_count << "\n";
  os << "gcd(v) > 2: " << s.prop1_count << "\n";
  for (const auto& [status, n] : s.status_counts) os << "status " << status << ": " << n << "\n";
  std::size_t matched = 0;
  for (const auto& r : s.rows) matched += r.v_matches();
  os << "table rows matched: " << matched << "/" << s.rows.size() << "\n";
  for (const auto& r : s.rows) {
    os << "  " << r.label << (r.found ? "" : " (missing)") << " v=" << to_string(r.computed_v);
    if (!r.v_matches()) os << " printed " << to_string(r.printed_v);
    os << " gcd=" << to_string(r.gcd_v) << "\n";
  }
  for (const auto& d : s.discrepancies) os << "discrepancy: " << d << "\n";
  return os.str();
}

std::map<std::string, std::string> parse_annotations(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected label<TAB>status", lineno, 1);
    std::string label = line.substr(0, tab), status = line.substr(tab + 1);
    if (std::find(std::begin(kStatuses), std::end(kStatuses), status) == std::end(kStatuses))
      throw ParseError("unknown status '" + status + "'", lineno, tab + 2);
    out[label] = status;
  }
  return out;
}

std::map<std::string, std::string> load_annotations(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_annotations(buf.str());
}

std::vector<std::string> certified_fixture_labels() {
  std::set<std::string> labels;
  for (const auto& name : fixture_names()) {
    Certificate cert = load_fixture(name);
    if (verify_certificate(cert).certified()) labels.insert(cert.label);
  }
  return {labels.begin(), labels.end()};
}

void annotate_status(Catalog& catalog, const std::map<std::string, std::string>& external,
                     const std::vector<std::string>& certified_labels) {
  for (const auto& [label, status] : external)
    if (!catalog.find_label(label)) throw UnknownLabel("annotation for unknown label '" + label + "'");
  for (const auto& label : certified_labels)
    if (!catalog.find_label(label)) throw UnknownLabel("certificate for unknown label '" + label + "'");
  for (auto& e : catalog.entries) {
    e.status.clear();
    if (e.sv_flag) e.status = "arithmetic-SV";
    if (std::find(certified_labels.begin(), certified_labels.end(), e.label) != certified_labels.end())
      e.status = "arithmetic-this-paper";
    if (!e.status.empty()) continue;
    if (auto it = external.find(e.label); it != external.end()) e.status = it->second;
  }
}

std::string catalog_to_tsv(const Catalog& catalog) {
  std::ostringstream os;
  os << "#degree\t" << catalog.degree << "\n";
  os << "#raw_pairs\t" << catalog.raw_pairs << "\n";
  os << "#label\talpha\tbeta\tf\tg\tv\tgcd_v\tlead_diff\tflags\tstatus\n";
  for (const auto& e : catalog.entries) {
    os << e.label << '\t' << e.alpha.to_string() << '\t' << e.beta.to_string() << '\t' << e.f.coefficient_list()
       << '\t' << e.g.coefficient_list() << '\t' << ints_text(e.v) << '\t' << to_string(e.gcd_v) << '\t'
       << to_string(e.lead_diff) << '\t' << flags_text(e) << '\t' << (e.status.empty() ? "-" : e.status) << '\n';
  }
  return os.str();
}

Catalog catalog_from_tsv(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (line[0] == '#') {
      try {
        if (fields[0] == "#degree" && fields.size() == 2) cat.degree = std::stoul(fields[1]);
        if (fields[0] == "#raw_pairs" && fields.size() == 2) cat.raw_pairs = std::stoul(fields[1]);
      } catch (const std::exception&) {
        throw ParseError("bad header value", lineno, 1);
      }
      continue;
    }
    if (fields.size() != 10) throw ParseError("expected 10 tab-separated fields", lineno, 1);
    try {
      CatalogEntry e = describe_pair(ParameterVector::parse(fields[1]), ParameterVector::parse(fields[2]));
      e.label = fields[0];
      if (e.f.coefficient_list() != fields[3] || e.g.coefficient_list() != fields[4] ||
          ints_text(e.v) != fields[5] || to_string(e.gcd_v) != fields[6] || to_string(e.lead_diff) != fields[7] ||
          flags_text(e) != fields[8])
        throw ParseError("derived fields do not match alpha and beta");
      e.status = fields[9] == "-" ? "" : fields[9];
      e.members.push_back({e.alpha, e.beta});
      cat.entries.push_back(std::move(e));
    } catch (const ParseError& err) {
      if (err.line()) throw;
      throw ParseError(err.what(), lineno, 1);
    } catch (const Error& err) {
      throw ParseError(err.what(), lineno, 1);
    }
  }
  return cat;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + file.string());
  out << catalog_to_tsv(catalog);
}

Catalog load_catalog(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return catalog_from_tsv(buf.str());
}

}  // namespace hgg
