#include "hgg/certify.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hgg/error.hpp"
#include "hgg/invariant_form.hpp"
#include "hgg/rootgroups.hpp"

namespace hgg {

bool operator==(const Certificate& x, const Certificate& y) {
  return x.label == y.label && x.alpha == y.alpha && x.beta == y.beta && x.basis_matrix == y.basis_matrix &&
         x.convention == y.convention && x.program == y.program && x.expected_q1 == y.expected_q1 &&
         x.expected_q2 == y.expected_q2;
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::PairValid: return "pair-valid";
    case Stage::Symplectic: return "symplectic-class";
    case Stage::FormComputed: return "form";
    case Stage::BasisAntidiagonal: return "hyperbolic-basis";
    case Stage::ProgramEvaluated: return "program";
    case Stage::HighestRoot: return "q1-highest-root";
    case Stage::SecondHighestRoot: return "q2-second-highest-root";
    case Stage::FormsPreserved: return "forms-preserved";
    case Stage::ExpectedMatrices: return "expected-matrices";
  }
  return "?";
}

bool VerificationReport::passed(Stage s) const {
  for (const auto& r : stages)
    if (r.stage == s) return r.passed;
  return false;
}

std::string VerificationReport::conclusion() const {
  if (certified()) {
    return "ArithmeticCertified; y=" + hgg::to_string(*y) + ", x=" + hgg::to_string(*x);
  }
  std::string detail;
  for (const auto& r : stages)
    if (failed && r.stage == *failed) detail = r.detail;
  return "Failed(" + (failed ? hgg::to_string(*failed) : std::string("no-stages")) + "): " + detail;
}

namespace {

std::string indent_matrix(const RationalMatrix& m) {
  std::string out;
  std::istringstream in(m.to_string());
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

std::string lambda_text(const std::array<Rational, 3>& l) {
  return "(" + to_string(l[0]) + ", " + to_string(l[1]) + ", " + to_string(l[2]) + ")";
}

}  // namespace

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  os << "certificate " << label << "\n";
  for (const auto& r : stages) {
    os << "  [" << (r.passed ? "ok" : "FAIL") << "] " << hgg::to_string(r.stage);
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  if (passed(Stage::BasisAntidiagonal)) {
    os << "lambda = " << lambda_text(lambdas) << ", lambda1/lambda2 = " << hgg::to_string(lambda_ratio()) << "\n";
  }
  if (q1) os << "q1 =\n" << indent_matrix(*q1);
  if (q2) os << "q2 =\n" << indent_matrix(*q2);
  if (passed(Stage::Symplectic))
    os << "note: Zariski density is not re-proven here; it follows from the symplectic "
          "(non-finite, non-orthogonal) classification of the pair.\n";
  os << conclusion() << "\n";
  return os.str();
}

std::string VerificationReport::to_tsv() const {
  std::ostringstream os;
  os << "label\t" << label << "\n";
  for (const auto& r : stages) os << "stage\t" << hgg::to_string(r.stage) << "\t" << (r.passed ? "pass" : "fail") << "\n";
  if (passed(Stage::BasisAntidiagonal))
    os << "lambda\t" << hgg::to_string(lambdas[0]) << "," << hgg::to_string(lambdas[1]) << ","
       << hgg::to_string(lambdas[2]) << "\n";
  if (y) os << "y\t" << hgg::to_string(*y) << "\n";
  if (x) os << "x\t" << hgg::to_string(*x) << "\n";
  if (q1) os << "q1\t" << q1->key() << "\n";
  if (q2) os << "q2\t" << q2->key() << "\n";
  os << "zariski_density\tinherited-from-classification\n";
  os << "conclusion\t" << (certified() ? "ArithmeticCertified" : "Failed") << "\n";
  if (failed) os << "failed_stage\t" << hgg::to_string(*failed) << "\n";
  return os.str();
}

std::vector<std::string> predefined_names(const WordProgram& program) {
  std::vector<std::string> names{"a", "b", "c"};
  if (!program.binds("q1")) names.push_back("q1");
  return names;
}

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport rep;
  rep.label = cert.label;
  auto record = [&](Stage s, bool ok, std::string detail = {}) {
    rep.stages.push_back({s, ok, std::move(detail)});
    if (!ok && !rep.failed) rep.failed = s;
    return ok;
  };

  try {
    rep.f = params_to_poly(cert.alpha).poly;
    rep.g = params_to_poly(cert.beta).poly;
  } catch (const Error& e) {
    record(Stage::PairValid, false, e.what());
    return rep;
  }
  ClosureClass closure;
  try {
    closure = zariski_closure_class(rep.f, rep.g);
  } catch (const Error& e) {
    record(Stage::PairValid, false, e.what());
    return rep;
  }
  record(Stage::PairValid, true);
  if (!record(Stage::Symplectic, closure == ClosureClass::Symplectic, "closure class is " + to_string(closure)))
    return rep;

  rep.A = companion(rep.f);
  rep.B = companion(rep.g);
  rep.C = inverse(rep.A) * rep.B;

  try {
    SymplecticForm orbit = form_via_orbit(rep.A, rep.B);
    SymplecticForm solved = form_via_linear_solve(rep.A, rep.B);
    if (!record(Stage::FormComputed, forms_agree(orbit, solved),
                forms_agree(orbit, solved) ? "" : "orbit and linear-solve forms disagree"))
      return rep;
    rep.omega = orbit.matrix;
  } catch (const Error& e) {
    record(Stage::FormComputed, false, e.what());
    return rep;
  }

  try {
    if (cert.basis_matrix) {
      rep.X = *cert.basis_matrix;
      auto l = verify_antidiagonal(rep.X, rep.omega);
      if (!record(Stage::BasisAntidiagonal, l.has_value(), l ? "given X" : "given X does not anti-diagonalize the form"))
        return rep;
      rep.lambdas = *l;
    } else {
      HyperbolicBasis hb = hyperbolic_basis({rep.omega, BasisTag::Standard});
      rep.X = hb.X;
      rep.lambdas = hb.lambdas;
      record(Stage::BasisAntidiagonal, true, "constructed X");
    }
    rep.omega2 = antidiagonal_form(rep.lambdas);
    rep.generators = conjugate_generators(rep.A, rep.B, rep.X, &rep.omega2);
  } catch (const Error& e) {
    record(Stage::BasisAntidiagonal, false, e.what());
    return rep;
  }

  try {
    std::map<std::string, RationalMatrix> env{
        {"a", rep.generators.a}, {"b", rep.generators.b}, {"c", rep.generators.c}};
    if (!cert.program.binds("q1")) env["q1"] = rep.generators.b * inverse(rep.generators.a);
    auto results = evaluate_program(cert.program, env, cert.convention);
    if (results.size() != 2) {
      record(Stage::ProgramEvaluated, false, "program must return q1, q2");
      return rep;
    }
    rep.q1 = results[0];
    rep.q2 = results[1];
    record(Stage::ProgramEvaluated, true);
  } catch (const Error& e) {
    record(Stage::ProgramEvaluated, false, e.what());
    return rep;
  }

  rep.y = in_highest_root_group(*rep.q1);
  record(Stage::HighestRoot, rep.y.has_value(),
         rep.y ? "" : "q1 is not I + y E16 with y != 0 (" + classify_root_support(*rep.q1) + ")");
  rep.x = in_second_highest_root_group(*rep.q2, rep.lambdas[0], rep.lambdas[1]);
  record(Stage::SecondHighestRoot, rep.x.has_value(),
         rep.x ? "" : "q2 is not I + x E15 + (lambda1/lambda2) x E26 with x != 0 (" +
                          classify_root_support(*rep.q2) + ")");

  bool preserved = preserves(*rep.q1, rep.omega2) && preserves(*rep.q2, rep.omega2);
  record(Stage::FormsPreserved, preserved, preserved ? "" : "q1 or q2 does not preserve the hyperbolic form");

  if (cert.expected_q1 || cert.expected_q2) {
    std::string detail;
    if (cert.expected_q1 && *cert.expected_q1 != *rep.q1) detail += "q1 differs from the expected matrix; ";
    if (cert.expected_q2 && *cert.expected_q2 != *rep.q2) detail += "q2 differs from the expected matrix; ";
    if (!detail.empty()) detail.resize(detail.size() - 2);
    record(Stage::ExpectedMatrices, detail.empty(), detail);
  }
  return rep;
}

// ---- file format ----

namespace {

void write_matrix(std::ostringstream& os, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) os << (c ? " " : "") << to_string(m(r, c));
    os << "\n";
  }
}

std::string params_text(const ParameterVector& p) {
  std::string s;
  for (const auto& x : p.entries()) s += (s.empty() ? "" : ",") + to_string(x);
  return s;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string save_certificate(const Certificate& cert) {
  std::ostringstream os;
  os << "label: " << cert.label << "\n";
  os << "alpha: " << params_text(cert.alpha) << "\n";
  os << "beta: " << params_text(cert.beta) << "\n";
  os << "convention: " << to_string(cert.convention) << "\n";
  if (cert.basis_matrix) {
    os << "X:\n";
    write_matrix(os, *cert.basis_matrix);
  }
  os << "begin program\n" << cert.program.to_string() << "end program\n";
  if (cert.expected_q1) {
    os << "expect q1:\n";
    write_matrix(os, *cert.expected_q1);
  }
  if (cert.expected_q2) {
    os << "expect q2:\n";
    write_matrix(os, *cert.expected_q2);
  }
  return os.str();
}

void save_certificate(const Certificate& cert, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + file.string());
  out << save_certificate(cert);
}

Certificate parse_certificate(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur += ch;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  Certificate cert;
  bool have_label = false, have_alpha = false, have_beta = false, have_conv = false, have_program = false;
  std::size_t i = 0;

  auto column_of = [&](std::size_t li) {
    const std::string& l = lines[li];
    std::size_t c = 0;
    while (c < l.size() && std::isspace(static_cast<unsigned char>(l[c]))) ++c;
    return c + 1;
  };
  auto skippable = [&](std::size_t li) {
    std::string t = trim(lines[li]);
    return t.empty() || t[0] == '#';
  };
  auto read_matrix = [&](std::size_t header_line, std::size_t n) {
    if (n == 0) throw ParseError("matrix block needs alpha before it", header_line + 1, 1);
    std::vector<std::vector<Rational>> rows;
    while (rows.size() < n) {
      if (i >= lines.size()) throw ParseError("matrix block ends early", header_line + 1, 1);
      if (skippable(i)) {
        ++i;
        continue;
      }
      try {
        std::vector<Rational> row;
        std::istringstream in(lines[i]);
        for (std::string tok; in >> tok;) row.push_back(parse_rational(tok));
        if (row.size() != n)
          throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        rows.push_back(std::move(row));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1, column_of(i));
      }
      ++i;
    }
    return RationalMatrix::from_rows(rows);
  };

  while (i < lines.size()) {
    if (skippable(i)) {
      ++i;
      continue;
    }
    std::string line = trim(lines[i]);
    const std::size_t li = i;
    if (line == "begin program") {
      std::size_t start = ++i;
      std::string body;
      while (i < lines.size() && trim(lines[i]) != "end program") body += lines[i++] + "\n";
      if (i >= lines.size()) throw ParseError("missing 'end program'", li + 1, column_of(li));
      ++i;
      cert.program = parse_program(body, start);
      have_program = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value'", li + 1, column_of(li));
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    ++i;
    try {
      if (key == "label") {
        cert.label = value;
        have_label = true;
      } else if (key == "alpha") {
        cert.alpha = ParameterVector::parse(value);
        have_alpha = true;
      } else if (key == "beta") {
        cert.beta = ParameterVector::parse(value);
        have_beta = true;
      } else if (key == "convention") {
        auto c = parse_convention(value);
        if (!c) throw ParseError("unknown convention '" + value + "' (expected xyx'y' or x'y'xy)");
        cert.convention = *c;
        have_conv = true;
      } else if (key == "X") {
        cert.basis_matrix = read_matrix(li, cert.alpha.degree());
      } else if (key == "expect q1") {
        cert.expected_q1 = read_matrix(li, cert.alpha.degree());
      } else if (key == "expect q2") {
        cert.expected_q2 = read_matrix(li, cert.alpha.degree());
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), li + 1, column_of(li));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), li + 1, column_of(li));
    }
  }

  if (!have_label) throw ParseError("missing 'label:'");
  if (!have_alpha) throw ParseError("missing 'alpha:'");
  if (!have_beta) throw ParseError("missing 'beta:'");
  if (!have_conv) throw ParseError("missing 'convention:'");
  if (!have_program) throw ParseError("missing program block");
  if (cert.alpha.degree() != cert.beta.degree()) throw ParseError("alpha and beta have different lengths");
  cert.program.check_names(predefined_names(cert.program));
  return cert;
}

Certificate load_certificate(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace hgg
