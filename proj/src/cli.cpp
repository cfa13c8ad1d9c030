#include "capelli/cli.hpp"

#include "capelli/bsat.hpp"
#include "capelli/capalg.hpp"
#include "capelli/catalog.hpp"
#include "capelli/expr.hpp"
#include "capelli/gradmod.hpp"
#include "capelli/json_io.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace capelli {

std::pair<int, int> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("window must look like a:b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    const int lo = std::stoi(a, &used_a);
    const int hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("");
    if (lo > hi) throw std::invalid_argument("window must satisfy a <= b");
    return {lo, hi};
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("bad window '") + text + "'" + (*e.what() ? std::string(": ") + e.what() : ""));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("window bound out of range: '" + text + "'");
  }
}

namespace {

struct Options {
  int case_id = 0;
  int size = 0;
  bool json = false;
  std::string sizes = "default";
  std::string expression;
  std::string lambda = "0";
  std::string window = "0:4";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t exhaustive = 0;
};

// Raised for argument problems detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CaseInstance instance_for(const Options& o) {
  try {
    const int size = o.size > 0 ? o.size : minimal_size(o.case_id);
    return instantiate(o.case_id, size);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  } catch (const InvalidSize& e) {
    throw UsageError(e.what());
  }
}

Rational lambda_of(const Options& o) {
  try {
    return parse_rational(o.lambda);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Window window_of(const Options& o) {
  try {
    auto [lo, hi] = parse_window(o.window);
    return {lo, hi};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string roots_text(const std::map<Rational, int>& roots) {
  std::ostringstream os;
  bool first = true;
  for (auto it = roots.rbegin(); it != roots.rend(); ++it)
    for (int i = 0; i < it->second; ++i) {
      os << (first ? "" : ", ") << to_string(it->first);
      first = false;
    }
  return os.str();
}

void print_certificate(const BCertificate& cert, std::ostream& out) {
  const CaseSpec& spec = case_spec(cert.case_id);
  out << "case (" << cert.case_id << ") " << spec.name << ", size " << cert.size << "\n";
  out << "b = " << factored_string(cert.b) << "\n";
  out << "c = " << to_string(cert.c) << "\n";
  out << "roots: " << roots_text(cert.roots) << "\n";
  out << "table b = " << factored_string(cert.b_expected) << "\n";
  if (spec.disputed) out << "catalog b = " << factored_string(cert.b_catalog) << "\n";
  out << "verdict: " << verdict_name(cert.verdict) << "\n";
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  if (o.json) {
    out << catalog_json().dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& c : list_cases()) {
    out << "(" << c.case_id << ") " << c.name << "\n";
    out << "    size: " << c.size_rule << "   deg f: " << c.deg_f_rule << "   b(s): " << c.b_rule << "\n";
    if (c.disputed)
      out << "    DISPUTED: catalog expects " << c.corrected_rule << " (" << c.dispute_note << ")\n";
  }
  return kExitOk;
}

int cmd_bs_compute(const Options& o, std::ostream& out, std::ostream& err) {
  const CaseInstance inst = instance_for(o);
  const BCertificate cert = certify(inst);
  if (o.json)
    out << certificate_json(cert).dump(2) << "\n";
  else
    print_certificate(cert, out);
  if (cert.verdict == Verdict::MismatchDisputedRow)
    err << "warning: row (" << cert.case_id << ") is disputed; computed b differs from the printed table\n";
  return cert.verdict == Verdict::Mismatch ? kExitFailure : kExitOk;
}

int cmd_bs_verify_all(const Options& o, std::ostream& out, std::ostream& err) {
  SizeSet sizes;
  if (o.sizes == "min")
    sizes = SizeSet::Min;
  else if (o.sizes == "default")
    sizes = SizeSet::Default;
  else
    throw UsageError("--sizes must be 'default' or 'min'");
  const VerifyAllResult r = verify_all(sizes);
  bool hard_failure = false;
  Json all = Json::array();
  for (std::size_t i = 0; i < r.targets.size(); ++i) {
    const auto [id, size] = r.targets[i];
    if (!r.certificates[i]) {
      hard_failure = true;
      err << "error: case (" << id << ") size " << size << ": " << r.errors[i] << "\n";
      if (!o.json) out << "(" << id << ") n=" << size << "  ERROR " << r.errors[i] << "\n";
      continue;
    }
    const BCertificate& cert = *r.certificates[i];
    if (cert.verdict == Verdict::Mismatch) hard_failure = true;
    if (cert.verdict == Verdict::MismatchDisputedRow)
      err << "warning: row (" << id << ") is disputed: computed " << factored_string(cert.b) << ", table prints "
          << factored_string(cert.b_expected) << "\n";
    if (o.json) {
      all.push_back(certificate_json(cert));
      continue;
    }
    out << "(" << id << ") n=" << size << "  b = " << factored_string(cert.b) << "  c = " << to_string(cert.c)
        << "  table = " << factored_string(cert.b_expected) << "  " << verdict_name(cert.verdict) << "\n";
  }
  if (o.json) out << all.dump(2) << "\n";
  return hard_failure ? kExitFailure : kExitOk;
}

int cmd_algebra_nf(const Options& o, std::ostream& out) {
  const CaseInstance inst = instance_for(o);
  ExprPtr e;
  try {
    e = parse_expr(o.expression);
  } catch (const ParseError& ex) {
    throw UsageError(std::string("expression: ") + ex.what());
  }
  const PresentationPtr pres = APresentation::for_instance(inst);
  out << evaluate(*e, pres).to_string() << "\n";
  return kExitOk;
}

int cmd_algebra_fuzz(const Options& o, std::ostream& out) {
  if (o.trials == 0) throw UsageError("--trials must be at least 1");
  const CaseInstance inst = instance_for(o);
  const PresentationPtr pres = APresentation::for_instance(inst);
  out << "presentation: d = " << pres->d << ", B(theta) = " << pres->B.to_string() << "\n";
  ConfluenceReport report = confluence_fuzz(pres, o.trials, o.seed);
  out << "random words: " << report.checks << " checks, " << report.discrepancies.size() << " discrepancies\n";
  if (o.exhaustive > 0) {
    ConfluenceReport ex = confluence_exhaustive(pres, o.exhaustive);
    out << "exhaustive words up to length " << o.exhaustive << ": " << ex.checks << " checks, "
        << ex.discrepancies.size() << " discrepancies\n";
    report.discrepancies.insert(report.discrepancies.end(), ex.discrepancies.begin(), ex.discrepancies.end());
  }
  for (const auto& d : report.discrepancies) out << "  " << d << "\n";
  return report.ok() ? kExitOk : kExitFailure;
}

void print_module(const GradedModule& t, std::ostream& out) {
  out << "presentation: d = " << t.pres->d << ", B(theta) = " << t.pres->B.to_string() << "\n";
  for (const auto& [alpha, w] : t.spaces) {
    out << "weight " << to_string(alpha) << "  dim " << w.dim;
    if (w.dim == 1) {
      out << "  F = " << (w.F.rows() ? to_string(w.F(0, 0)) : std::string("(leaves window)"));
      out << "  D = " << (w.D.rows() ? to_string(w.D(0, 0)) : std::string("(leaves window)"));
    }
    out << "\n";
  }
}

Json violations_json(const std::vector<Violation>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back({{"relation", x.relation}, {"weight", rational_json(x.weight)}});
  return arr;
}

int cmd_module_ladder(const Options& o, std::ostream& out) {
  const CaseInstance inst = instance_for(o);
  const PresentationPtr pres = APresentation::for_instance(inst);
  const GradedModule t = build_ladder(pres, lambda_of(o), window_of(o));
  const auto violations = validate(t);
  if (o.json) {
    out << Json{{"module", module_json(t)}, {"valid", violations.empty()}, {"violations", violations_json(violations)}}
               .dump(2)
        << "\n";
  } else {
    print_module(t, out);
    if (violations.empty()) out << "validate: ok\n";
    for (const auto& v : violations) out << "violation " << v.relation << " at weight " << to_string(v.weight) << "\n";
  }
  return violations.empty() ? kExitOk : kExitFailure;
}

int cmd_module_psi(const Options& o, std::ostream& out) {
  const CaseInstance inst = instance_for(o);
  const PresentationPtr pres = APresentation::for_instance(inst);
  const Rational lambda = lambda_of(o);
  const Window window = window_of(o);
  const GradedModule psi = psi_of_ladder(inst, pres, lambda, window);
  const auto violations = validate(psi);
  const WitnessReport witness = equivalence_witness(inst, pres, lambda, window);
  const bool ok = violations.empty() && witness.pass;
  if (o.json) {
    out << Json{{"module", module_json(psi)},
                {"valid", violations.empty()},
                {"violations", violations_json(violations)},
                {"witness", witness.pass ? "pass" : "fail"},
                {"witness_detail", witness.detail}}
               .dump(2)
        << "\n";
  } else {
    print_module(psi, out);
    out << "validate: " << (violations.empty() ? "ok" : "FAILED") << "\n";
    out << "equivalence witness: " << (witness.pass ? "pass" : "fail") << " (" << witness.detail << ")\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_module_breaks(const Options& o, std::ostream& out) {
  const CaseInstance inst = instance_for(o);
  const PresentationPtr pres = APresentation::for_instance(inst);
  const Rational lambda = lambda_of(o);
  const auto points = break_points(*pres, lambda, window_of(o));
  out << "break points: {";
  for (std::size_t i = 0; i < points.size(); ++i) out << (i ? ", " : "") << points[i].k;
  out << "}\n";
  for (const auto& p : points)
    out << "  k = " << p.k << ": b(" << to_string(Rational(p.k) + lambda - 1) << ") = 0, root multiplicity "
        << p.multiplicity << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein-Sato polynomials, the algebra C<f, theta, Delta> and its graded modules "
               "for the Capelli-type representations with one-dimensional quotient",
               "capelli"};
  app.require_subcommand(1);
  Options o;

  auto add_case = [&](CLI::App* sub, bool with_size = true) {
    sub->add_option("--case", o.case_id, "case id 1..8")->required();
    if (with_size) sub->add_option("--size", o.size, "size parameter n (default: minimal legal size)");
  };
  auto add_ladder = [&](CLI::App* sub) {
    add_case(sub);
    sub->add_option("--lambda", o.lambda, "twist lambda as p/q")->required();
    sub->add_option("--window", o.window, "ladder window a:b")->required();
  };

  CLI::App* catalog = app.add_subcommand("catalog", "the eight table rows");
  catalog->require_subcommand(1);
  CLI::App* catalog_list = catalog->add_subcommand("list", "list the rows");
  catalog_list->add_flag("--json", o.json, "emit JSON");

  CLI::App* bs = app.add_subcommand("bs", "Bernstein-Sato polynomials");
  bs->require_subcommand(1);
  CLI::App* bs_compute = bs->add_subcommand("compute", "compute and certify b(s) for one case");
  add_case(bs_compute);
  bs_compute->add_flag("--json", o.json, "emit the certificate as JSON");
  CLI::App* bs_all = bs->add_subcommand("verify-all", "certify every case");
  bs_all->add_option("--sizes", o.sizes, "default | min")->check(CLI::IsMember({"default", "min"}));
  bs_all->add_flag("--json", o.json, "emit certificates as JSON");

  CLI::App* algebra = app.add_subcommand("algebra", "the algebra A = C<f, theta, Delta>");
  algebra->require_subcommand(1);
  CLI::App* nf = algebra->add_subcommand("nf", "normal form of an expression");
  add_case(nf);
  nf->add_option("expression", o.expression, "expression in f, theta, delta")->required();
  CLI::App* fuzz = algebra->add_subcommand("fuzz", "confluence check of the rewriting system");
  add_case(fuzz);
  fuzz->add_option("--trials", o.trials, "random word triples");
  fuzz->add_option("--seed", o.seed, "random seed");
  fuzz->add_option("--exhaustive", o.exhaustive, "also check every word up to this length");

  CLI::App* module = app.add_subcommand("module", "graded A-modules");
  module->require_subcommand(1);
  CLI::App* ladder = module->add_subcommand("ladder", "ladder module from the presentation");
  add_ladder(ladder);
  ladder->add_flag("--json", o.json, "emit JSON");
  CLI::App* psi = module->add_subcommand("psi", "invariant sections of C[V][1/f] f^lambda");
  add_ladder(psi);
  psi->add_flag("--json", o.json, "emit JSON");
  CLI::App* breaks = module->add_subcommand("breaks", "weights where the lowering edge vanishes");
  add_ladder(breaks);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (catalog_list->parsed()) return cmd_catalog_list(o, out);
    if (bs_compute->parsed()) return cmd_bs_compute(o, out, err);
    if (bs_all->parsed()) return cmd_bs_verify_all(o, out, err);
    if (nf->parsed()) return cmd_algebra_nf(o, out);
    if (fuzz->parsed()) return cmd_algebra_fuzz(o, out);
    if (ladder->parsed()) return cmd_module_ladder(o, out);
    if (psi->parsed()) return cmd_module_psi(o, out);
    if (breaks->parsed()) return cmd_module_breaks(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotProportional& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace capelli
