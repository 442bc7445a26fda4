// Command-line front end: classify pairs, compute forms and bases, verify
// and search for certificates, and build or report on the catalog.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hgg/catalog.hpp"
#include "hgg/certify.hpp"
#include "hgg/error.hpp"
#include "hgg/hyperbolic.hpp"
#include "hgg/invariant_form.hpp"
#include "hgg/search.hpp"

namespace {

using namespace hgg;

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

// key/value output that is either aligned text or TSV.
class Out {
 public:
  explicit Out(bool tsv) : tsv_(tsv) {}
  void kv(const std::string& key, const std::string& value) {
    if (tsv_)
      std::cout << key << '\t' << value << '\n';
    else
      std::cout << key << ": " << value << '\n';
  }
  void matrix(const std::string& key, const RationalMatrix& m) {
    if (tsv_) {
      std::cout << key << '\t' << m.key() << '\n';
      return;
    }
    std::cout << key << ":\n";
    std::istringstream in(m.to_string());
    for (std::string line; std::getline(in, line);) std::cout << "  " << line << '\n';
  }

 private:
  bool tsv_;
};

struct PairArgs {
  std::string alpha, beta;
};

void add_pair_options(CLI::App* cmd, PairArgs& p, bool required = true) {
  auto* a = cmd->add_option("--alpha", p.alpha, "comma-separated parameters, e.g. 0,0,1/2,1/2");
  auto* b = cmd->add_option("--beta", p.beta, "comma-separated parameters");
  if (required) {
    a->required();
    b->required();
  }
}

struct Pipeline {
  ParameterVector alpha, beta;
  IntPolynomial f, g;
  RationalMatrix A, B;
};

Pipeline load_pair(const PairArgs& p) {
  Pipeline out;
  out.alpha = ParameterVector::parse(p.alpha);
  out.beta = ParameterVector::parse(p.beta);
  out.f = params_to_poly(out.alpha).poly;
  out.g = params_to_poly(out.beta).poly;
  out.A = companion(out.f);
  out.B = companion(out.g);
  return out;
}

std::string lambda_text(const std::array<Rational, 3>& l) {
  return to_string(l[0]) + "," + to_string(l[1]) + "," + to_string(l[2]);
}

int cmd_classify(const PairArgs& p, bool tsv) {
  Pipeline pl = load_pair(p);
  Out out(tsv);
  out.kv("f", pl.f.coefficient_list());
  out.kv("g", pl.g.coefficient_list());
  ClosureClass cls = zariski_closure_class(pl.f, pl.g);
  out.kv("closure", to_string(cls));
  DifferenceData d = difference_leading_data(pl.f, pl.g);
  out.kv("v", to_string(d.v));
  out.kv("gcd_v", to_string(content(d.v)));
  out.kv("lead_diff", to_string(d.leading_coeff));
  out.kv("sv_flag", abs(d.leading_coeff) <= 2 ? "true" : "false");
  return kOk;
}

int cmd_form(const PairArgs& p, const std::string& method, bool tsv) {
  Pipeline pl = load_pair(p);
  if (zariski_closure_class(pl.f, pl.g) != ClosureClass::Symplectic) {
    std::cerr << "error: pair is not in the symplectic class\n";
    return kFailed;
  }
  Out out(tsv);
  if (method == "orbit") {
    out.matrix("omega", form_via_orbit(pl.A, pl.B).matrix);
  } else if (method == "solve") {
    out.matrix("omega", form_via_linear_solve(pl.A, pl.B).matrix);
  } else {
    SymplecticForm o = form_via_orbit(pl.A, pl.B);
    SymplecticForm s = form_via_linear_solve(pl.A, pl.B);
    bool agree = forms_agree(o, s);
    out.kv("methods_agree", agree ? "true" : "false");
    out.matrix("omega", o.matrix);
    if (!agree) {
      out.matrix("omega_solve", s.matrix);
      return kFailed;
    }
  }
  return kOk;
}

int cmd_basis(const PairArgs& p, bool tsv) {
  Pipeline pl = load_pair(p);
  if (zariski_closure_class(pl.f, pl.g) != ClosureClass::Symplectic) {
    std::cerr << "error: pair is not in the symplectic class\n";
    return kFailed;
  }
  SymplecticForm omega = form_via_orbit(pl.A, pl.B);
  HyperbolicBasis hb = hyperbolic_basis(omega);
  RationalMatrix omega2 = antidiagonal_form(hb.lambdas);
  ConjugatedGenerators gens = conjugate_generators(pl.A, pl.B, hb.X, &omega2);
  Out out(tsv);
  out.matrix("X", hb.X);
  out.matrix("omega2", transpose(hb.X) * omega.matrix * hb.X);
  out.kv("lambda", lambda_text(hb.lambdas));
  out.matrix("a", gens.a);
  out.matrix("b", gens.b);
  out.matrix("c", gens.c);
  return kOk;
}

int cmd_verify(const std::string& file, const std::string& fixture, bool tsv) {
  if (file.empty() == fixture.empty()) {
    std::cerr << "error: give exactly one of CERTFILE or --fixture\n";
    return kInputError;
  }
  Certificate cert = fixture.empty() ? load_certificate(file) : load_fixture(fixture);
  VerificationReport rep = verify_certificate(cert);
  std::cout << (tsv ? rep.to_tsv() : rep.to_string());
  return rep.certified() ? kOk : kFailed;
}

struct SearchArgs {
  PairArgs pair;
  std::string fixture;
  std::string out_file;
  SearchBudget budget;
  bool census = false;
  bool adapted = false;
};

int cmd_search(const SearchArgs& s, bool tsv) {
  ParameterVector alpha, beta;
  std::optional<RationalMatrix> X;
  std::string label = "search";
  if (!s.fixture.empty()) {
    Certificate cert = load_fixture(s.fixture);
    alpha = cert.alpha;
    beta = cert.beta;
    X = cert.basis_matrix;
    label = cert.label;
  } else {
    if (s.pair.alpha.empty() || s.pair.beta.empty()) {
      std::cerr << "error: give --alpha and --beta, or --fixture\n";
      return kInputError;
    }
    alpha = ParameterVector::parse(s.pair.alpha);
    beta = ParameterVector::parse(s.pair.beta);
  }
  RationalMatrix A = companion(params_to_poly(alpha).poly);
  RationalMatrix B = companion(params_to_poly(beta).poly);
  SymplecticForm omega = form_via_orbit(A, B);
  std::array<Rational, 3> lambdas;
  if (s.adapted) {
    HyperbolicBasis hb = hyperbolic_basis(omega, difference_vector(A, B));
    X = hb.X;
    lambdas = hb.lambdas;
  } else if (X) {
    auto l = verify_antidiagonal(*X, omega.matrix);
    if (!l) {
      std::cerr << "error: fixture basis does not anti-diagonalize the form\n";
      return kFailed;
    }
    lambdas = *l;
  } else {
    HyperbolicBasis hb = hyperbolic_basis(omega);
    X = hb.X;
    lambdas = hb.lambdas;
  }
  RationalMatrix omega2 = antidiagonal_form(lambdas);
  ConjugatedGenerators gens = conjugate_generators(A, B, *X, &omega2);
  Out out(tsv);

  if (s.census) {
    for (const auto& e : unipotent_census(gens.a, gens.b, gens.c, s.budget.max_depth, s.budget))
      out.kv(e.word, e.classification);
    return kOk;
  }

  SearchOutcome res = search_certificates(gens.a, gens.b, gens.c, lambdas[0], lambdas[1], s.budget);
  out.kv("nodes", std::to_string(res.nodes));
  out.kv("depth", std::to_string(res.depth_reached));
  out.kv("budget_exhausted", res.budget_exhausted ? "true" : "false");
  out.kv("highest", res.highest ? res.highest->text + " (y=" + to_string(res.highest->parameter) + ")" : "none");
  out.kv("second_highest", res.second ? res.second->text + " (x=" + to_string(res.second->parameter) + ")" : "none");
  if (auto probe = res.probe_certificate(label, alpha, beta, X, CommutatorConvention::ProductFirst)) {
    VerificationReport rep = verify_certificate(*probe);
    bool ok = false;
    for (const auto& st : rep.stages)
      if (st.stage == Stage::HighestRoot) ok = st.passed;
    out.kv("highest_reverified", ok ? "true" : "false");
  }
  auto cert = res.certificate(label, alpha, beta, X, CommutatorConvention::ProductFirst);
  if (!cert) return kFailed;
  VerificationReport rep = verify_certificate(*cert);
  out.kv("reverified", rep.certified() ? "true" : "false");
  if (!s.out_file.empty()) save_certificate(*cert, s.out_file);
  return rep.certified() ? kOk : kFailed;
}

int cmd_catalog_build(unsigned degree, const std::string& out_file, const std::string& annotations, unsigned jobs) {
  Catalog cat = enumerate_pairs(degree, jobs);
  std::map<std::string, std::string> ext;
  if (!annotations.empty()) ext = load_annotations(annotations);
  annotate_status(cat, ext, certified_fixture_labels());
  if (out_file.empty() || out_file == "-")
    std::cout << catalog_to_tsv(cat);
  else
    save_catalog(cat, out_file);
  CatalogSummary s = counts(cat);
  std::cerr << "raw ordered pairs " << s.raw_pairs << ", classes " << s.classes << ", |lead| <= 2: " << s.sv_count
            << "\n";
  if (degree == 6 && (s.classes != 458 || s.sv_count != 211)) {
    std::cerr << "error: expected 458 classes with 211 of |lead| <= 2\n";
    return kFailed;
  }
  return kOk;
}

int cmd_catalog_report(const std::string& file, const std::string& annotations, bool tsv) {
  Catalog cat = load_catalog(file);
  if (!annotations.empty()) annotate_status(cat, load_annotations(annotations), certified_fixture_labels());
  CatalogSummary s = counts(cat);
  if (!tsv) {
    std::cout << to_string(s);
    return kOk;
  }
  Out out(true);
  out.kv("raw_pairs", std::to_string(s.raw_pairs));
  out.kv("classes", std::to_string(s.classes));
  out.kv("sv", std::to_string(s.sv_count));
  out.kv("gcd_v_gt_2", std::to_string(s.prop1_count));
  for (const auto& [status, n] : s.status_counts) out.kv("status:" + status, std::to_string(n));
  for (const auto& r : s.rows)
    out.kv("row:" + r.label, std::string(r.found ? "found" : "missing") + "\t" + (r.v_matches() ? "v-match" : "v-differs"));
  for (const auto& d : s.discrepancies) out.kv("discrepancy", d);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergeometric group toolkit: forms, hyperbolic bases and arithmeticity certificates"};
  app.require_subcommand(1);
  bool tsv = false;
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "tsv"}));

  PairArgs classify_args, form_args, basis_args;
  auto* classify = app.add_subcommand("classify", "closure class, v, gcd(v) and leading coefficient of f - g");
  add_pair_options(classify, classify_args);

  std::string method = "both";
  auto* form = app.add_subcommand("form", "canonical invariant symplectic form");
  add_pair_options(form, form_args);
  form->add_option("--method", method)->check(CLI::IsMember({"orbit", "solve", "both"}));

  auto* basis = app.add_subcommand("basis", "hyperbolic basis and conjugated generators");
  add_pair_options(basis, basis_args);

  std::string cert_file, fixture;
  auto* verify = app.add_subcommand("verify", "verify a certificate file or a built-in fixture");
  verify->add_option("CERTFILE", cert_file);
  verify->add_option("--fixture", fixture, "C-1, C-10, C-42, C-59 or C-10-alt");

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "bounded search for root-group elements");
  add_pair_options(search, search_args.pair, false);
  search->add_option("--fixture", search_args.fixture, "use a fixture's parameters and basis");
  search->add_option("--max-depth", search_args.budget.max_depth)->check(CLI::NonNegativeNumber);
  search->add_option("--max-entry-bits", search_args.budget.max_entry_bits);
  search->add_option("--max-nodes", search_args.budget.max_nodes);
  search->add_option("--jobs", search_args.budget.jobs)->check(CLI::PositiveNumber);
  search->add_option("--out", search_args.out_file, "write the certificate here");
  search->add_flag("--adapted-basis", search_args.adapted, "build the basis with eps_1 along v = (C - I) e_6");
  search->add_flag("--census", search_args.census, "list unipotent words and their root type instead");

  auto* catalog = app.add_subcommand("catalog", "enumerate and report on all pairs");
  catalog->require_subcommand(1);
  unsigned degree = 6, jobs = 1;
  std::string out_file, annotations, report_file;
  auto* build = catalog->add_subcommand("build", "enumerate, classify and deduplicate");
  build->add_option("--degree", degree);
  build->add_option("--out", out_file);
  build->add_option("--annotations", annotations);
  build->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  auto* report = catalog->add_subcommand("report", "counts and table checks for a catalog file");
  report->add_option("FILE", report_file)->required();
  report->add_option("--annotations", annotations);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  tsv = format == "tsv";

  try {
    if (*classify) return cmd_classify(classify_args, tsv);
    if (*form) return cmd_form(form_args, method, tsv);
    if (*basis) return cmd_basis(basis_args, tsv);
    if (*verify) return cmd_verify(cert_file, fixture, tsv);
    if (*search) return cmd_search(search_args, tsv);
    if (*build) return cmd_catalog_build(degree, out_file, annotations, jobs);
    if (*report) return cmd_catalog_report(report_file, annotations, tsv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidPair& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotGaloisClosed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const UnknownLabel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
