#include "mvsr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mvsr/error.hpp"
#include "mvsr/limits.hpp"
#include "mvsr/reports.hpp"

namespace mvsr {

namespace {

std::string render_table(const Table& t, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels, const std::string& corner) {
  std::size_t w = corner.size();
  for (const auto& l : row_labels) w = std::max(w, l.size());
  for (const auto& l : col_labels) w = std::max(w, l.size());
  std::ostringstream os;
  os << std::setw(static_cast<int>(w)) << corner << " |";
  for (const auto& l : col_labels) os << ' ' << std::setw(static_cast<int>(w)) << l;
  os << '\n' << std::string(w + 2 + (w + 1) * col_labels.size(), '-') << '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    os << std::setw(static_cast<int>(w)) << row_labels[r] << " |";
    for (std::size_t c = 0; c < t.cols(); ++c)
      os << ' ' << std::setw(static_cast<int>(w)) << col_labels[t(r, c)];
    os << '\n';
  }
  return os.str();
}

template <typename Labelled>
std::vector<std::string> labels_of(const Labelled& a, std::size_t n) {
  std::vector<std::string> out;
  for (Elem i = 0; i < n; ++i) out.push_back(a.label(i));
  return out;
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string semiring_text(const FiniteSemiring& s) {
  const auto l = labels_of(s, s.size());
  return render_table(s.add_table(), l, l, "+") + "\n" + render_table(s.mul_table(), l, l, "*");
}

std::string laws_text(const Json& axioms) {
  std::ostringstream os;
  for (const Json& law : axioms["laws"])
    os << (law["passed"].get<bool>() ? "ok    " : "FAIL  ") << law["law"].get<std::string>() << '\n';
  return os.str();
}

FiniteSemiring semiring_input(const Json& j, const std::string& which) {
  const Algebra a = algebra_from_json(j);
  if (const auto* s = std::get_if<FiniteSemiring>(&a)) return *s;
  if (const auto* m = std::get_if<MvAlgebra>(&a)) {
    if (which == "vee_odot") return reduct_vee_odot(*m);
    if (which == "wedge_oplus") return reduct_wedge_oplus(*m);
    fail(ErrorKind::InvalidArgument, "--which must be vee_odot or wedge_oplus");
  }
  fail(ErrorKind::ParseError, "/kind: expected \"semiring\" or \"mv\"");
}

void apply_config_json(const Json& j, ToolConfig& c, const std::string& source) {
  if (!j.is_object()) fail(ErrorKind::ParseError, source + ": /: expected an object");
  for (const auto& [key, v] : j.items()) {
    const std::string where = source + ": /" + key;
    if (key == "out") {
      if (!v.is_string()) fail(ErrorKind::ParseError, where + ": expected a string");
      c.out = v.get<std::string>();
      continue;
    }
    if (!v.is_number_unsigned()) fail(ErrorKind::ParseError, where + ": expected a nonnegative integer");
    const auto n = v.get<std::uint64_t>();
    if (key == "max_carrier") c.max_carrier = n;
    else if (key == "max_enum") c.max_enum = n;
    else if (key == "seed") c.seed = n;
    else if (key == "n_max") c.n_max = n;
    else fail(ErrorKind::ParseError, where + ": unknown key");
  }
  if (c.max_carrier == 0 || c.max_enum == 0 || c.n_max == 0)
    fail(ErrorKind::ParseError, source + ": bounds must be positive");
}

}  // namespace

ToolConfig config_from_file(const std::string& path) {
  ToolConfig c;
  apply_config_json(read_json_file(path), c, path);
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ToolConfig config;
  try {
    if (const char* env = std::getenv("MVSR_CONFIG"); env && *env) config = config_from_file(env);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitUsage;
  }

  CLI::App app{"Finite MV-algebras, idempotent semirings and their semimodules", "mvsr"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string input, left, right, which = "vee_odot", method = "quotient", domain = "full";
  std::string unit = "1";
  std::size_t n = 0;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> nmax;
  std::optional<std::uint64_t> seed, max_carrier, max_enum;
  std::uint64_t samples = 10000;
  std::optional<std::string> out_path;
  bool table = false;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Write the report to this file");
    sub->add_option("--max-carrier", max_carrier, "Largest carrier any construction may build");
    sub->add_option("--max-enum", max_enum, "Largest enumeration any search may run");
    sub->add_flag("--table", table, "Human-readable output instead of JSON");
  };

  auto* verify = app.add_subcommand("verify", "Check the laws of a semiring, MV-algebra, semimodule or matrix");
  verify->add_option("--input", input, "Algebra JSON")->required();
  common(verify);

  auto* chain = app.add_subcommand("chain", "Emit the k-element Lukasiewicz chain");
  chain->add_option("--n", n, "Number of elements")->required();
  common(chain);

  auto* reduct = app.add_subcommand("reduct", "Emit a semiring reduct of an MV-algebra");
  reduct->add_option("--input", input, "MV-algebra JSON")->required();
  reduct->add_option("--which", which, "vee_odot or wedge_oplus")
      ->check(CLI::IsMember({"vee_odot", "wedge_oplus"}));
  common(reduct);

  auto* idem = app.add_subcommand("idempotents", "List idempotent n x n matrices");
  idem->add_option("--input", input, "Semiring JSON, or MV JSON read through --which")->required();
  idem->add_option("--n", n, "Matrix size")->required();
  idem->add_option("--which", which, "Reduct used for MV input")
      ->check(CLI::IsMember({"vee_odot", "wedge_oplus"}));
  common(idem);

  auto* proj = app.add_subcommand("projective", "Decide projectivity of a semimodule");
  proj->add_option("--input", input, "Semimodule JSON")->required();
  proj->add_option("--n", bound, "Bound on the free rank searched");
  common(proj);

  auto* k0cmd = app.add_subcommand("k0", "Truncated K0 of a semiring");
  k0cmd->add_option("--input", input, "Semiring JSON, or MV JSON read through --which")->required();
  k0cmd->add_option("--nmax", nmax, "Largest matrix size enumerated");
  k0cmd->add_option("--which", which, "Reduct used for MV input")
      ->check(CLI::IsMember({"vee_odot", "wedge_oplus"}));
  common(k0cmd);

  auto* tensor = app.add_subcommand("tensor", "Tensor product of two semimodules");
  tensor->add_option("--left", left, "Semimodule JSON")->required();
  tensor->add_option("--right", right, "Semimodule JSON")->required();
  tensor->add_option("--method", method, "quotient or separating")
      ->check(CLI::IsMember({"quotient", "separating"}));
  common(tensor);

  auto* gammacmd = app.add_subcommand("gamma", "Sampled homomorphism check of gamma");
  gammacmd->add_option("--u", unit, "Strong unit, a positive rational");
  gammacmd->add_option("--samples", samples, "Number of sampled pairs");
  gammacmd->add_option("--seed", seed, "Sampling seed");
  gammacmd->add_option("--domain", domain, "full or nonnegative")
      ->check(CLI::IsMember({"full", "nonnegative"}));
  common(gammacmd);

  auto* homset = app.add_subcommand("homset", "List all homs between two semimodules");
  homset->add_option("--left", left, "Source semimodule JSON")->required();
  homset->add_option("--right", right, "Target semimodule JSON")->required();
  common(homset);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitOk : ExitUsage;
  }

  if (max_carrier) config.max_carrier = *max_carrier;
  if (max_enum) config.max_enum = *max_enum;
  if (seed) config.seed = *seed;
  if (nmax) config.n_max = *nmax;
  if (out_path) config.out = out_path;
  if (config.max_carrier == 0 || config.max_enum == 0 || config.n_max == 0) {
    err << "error: bounds must be positive\n";
    return ExitUsage;
  }

  Json report;
  std::string text;
  int code = ExitOk;
  try {
    const ScopedLimits scoped(Limits{config.max_carrier, config.max_enum});
    const auto law_code = [](bool ok) { return ok ? ExitOk : ExitLawViolation; };

    if (*verify) {
      const VerifyOutcome v = verify_report(algebra_from_json(read_json_file(input)));
      report = v.report;
      code = law_code(v.valid);
      if (table) {
        text = laws_text(report["axioms"]);
        if (report.contains("reducts")) {
          text += "vee_odot reduct:\n" + laws_text(report["reducts"]["vee_odot"]);
          text += "wedge_oplus reduct:\n" + laws_text(report["reducts"]["wedge_oplus"]);
        }
        text += v.valid ? "valid\n" : "laws violated\n";
      }
    } else if (*chain) {
      const MvAlgebra a = lukasiewicz_chain(n);
      report = to_json(a);
      if (table) {
        const auto l = labels_of(a, a.size());
        text = render_table(a.oplus_table(), l, l, "(+)");
      }
    } else if (*reduct) {
      const Json j = read_json_file(input);
      if (!j.is_object() || j.value("kind", "") != "mv")
        fail(ErrorKind::ParseError, input + ": /kind: expected \"mv\"");
      const FiniteSemiring s = semiring_input(j, which);
      report = to_json(s);
      if (table) text = semiring_text(s);
    } else if (*idem) {
      const SemiringPtr s = make_semiring(semiring_input(read_json_file(input), which));
      report = idempotents_report(s, n);
      if (table) {
        const auto l = labels_of(*s, s->size());
        std::ostringstream os;
        for (const Json& m : report["matrices"]) {
          for (const Json& row : m) {
            for (const Json& v : row) os << ' ' << l[v.get<Elem>()];
            os << '\n';
          }
          os << '\n';
        }
        os << report["count"].get<std::size_t>() << " idempotents\n";
        text = os.str();
      }
    } else if (*proj) {
      const FiniteSemimodule m = semimodule_from_json(read_json_file(input));
      report = projective_report(m, bound);
      if (!report["witnesses"]["agree"].get<bool>()) code = ExitLawViolation;
      if (table)
        text = std::string(report["projective"].get<bool>() ? "projective" : "not projective") +
               (code == ExitOk ? "\n" : " (deciders disagree)\n");
    } else if (*k0cmd) {
      const SemiringPtr s = make_semiring(semiring_input(read_json_file(input), which));
      report = k0_report(k0(s, config.n_max));
      if (table) {
        std::ostringstream os;
        os << report["classes"].size() << " classes up to n = " << config.n_max << "\nK0 = "
           << report["group"]["text"].get<std::string>()
           << (report["stability"]["stable"].get<bool>() ? "" : " (not yet stable)") << '\n';
        text = os.str();
      }
    } else if (*tensor) {
      const FiniteSemimodule m = semimodule_from_json(read_json_file(left));
      const FiniteSemimodule k = semimodule_from_json(read_json_file(right));
      const TensorProduct t = tensor_product(
          m, k, method == "quotient" ? TensorMethod::Quotient : TensorMethod::Separating);
      const UniversalProperty up = universal_property(t);
      const AxiomReport laws = check_tensor_laws(t);
      report = tensor_report(t, up);
      report["laws"] = axiom_report_json(laws);
      code = law_code(up.holds() && laws.valid());
      if (table)
        text = render_table(t.tensors, labels_of(m, m.size()), index_labels(t.size()), "x") +
               "universal property " + report["universal_property"].get<std::string>() + "\n";
    } else if (*gammacmd) {
      const GammaReport g = gamma_property_report(
          parse_rational(unit), samples, config.seed,
          domain == "full" ? GammaDomain::Full : GammaDomain::NonNegative);
      report = gamma_report(g);
      code = law_code(g.passed());
      if (table) {
        std::ostringstream os;
        os << "meet failures " << g.meet_failures << "\nsum failures " << g.sum_failures << '\n';
        text = os.str();
      }
    } else if (*homset) {
      const FiniteSemimodule m = semimodule_from_json(read_json_file(left));
      const FiniteSemimodule k = semimodule_from_json(read_json_file(right));
      report = homset_report(m, k, hom_set(m, k));
      if (table) {
        std::ostringstream os;
        for (const Json& h : report["homs"]) {
          for (const Json& v : h) os << ' ' << v.get<Elem>();
          os << '\n';
        }
        os << report["count"].get<std::size_t>() << " homs\n";
        text = os.str();
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::SizeGuard:
      case ErrorKind::EnumGuard:
        return ExitGuard;
      case ErrorKind::NotIdempotent:
      case ErrorKind::IllDefinedAction:
        return ExitLawViolation;
      default:
        return ExitUsage;
    }
  }

  const std::string payload = table ? text : dump_json(report);
  if (config.out) {
    std::ofstream f(*config.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *config.out << '\n';
      return ExitUsage;
    }
    f << payload;
  } else {
    out << payload;
  }
  return code;
}

}  // namespace mvsr
