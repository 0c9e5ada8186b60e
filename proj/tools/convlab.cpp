#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "convlab/algebra.hpp"
#include "convlab/convergence.hpp"
#include "convlab/errors.hpp"
#include "convlab/report.hpp"
#include "convlab/seqclass.hpp"
#include "convlab/submeasure.hpp"
#include "convlab/topology.hpp"
#include "convlab/verify.hpp"

namespace {

using namespace convlab;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// CONVLAB_MAX_ATOMS can only lower the cap.
int atom_cap() {
  const char* env = std::getenv("CONVLAB_MAX_ATOMS");
  if (env == nullptr || *env == '\0') return kMaxAtoms;
  int v = 0;
  try {
    std::size_t used = 0;
    v = std::stoi(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("CONVLAB_MAX_ATOMS is not an integer: ") + env);
  }
  if (v < 1) throw UsageError("CONVLAB_MAX_ATOMS must be at least 1");
  return std::min(v, kMaxAtoms);
}

Carrier checked_carrier(int atoms) {
  const int cap = atom_cap();
  if (atoms < 1 || atoms > cap) {
    throw UsageError("--atoms must lie in [1, " + std::to_string(cap) + "], got " +
                     std::to_string(atoms));
  }
  return Carrier(atoms);
}

struct Options {
  int atoms = kDefaultAtomCap;
  std::uint64_t seed = 1;
  int samples = 1000;
  std::string format = "table";
  std::string seq;
  std::string law = "s";
  bool topology = false;
  std::string submeasure;
};

int cmd_diagram(const Options& o) {
  const Carrier c = checked_carrier(o.atoms);
  const auto format = parse_report_format(o.format);
  const auto report = build_diagram(c);
  std::cout << emit(report, format);
  if (!report.ok()) {
    for (const auto& v : report.violations) std::cerr << "violation: " << v << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

Convergence law_by_name(const Carrier& c, const std::string& law) {
  if (law == "ls") return ls_convergence(c);
  if (law == "li") return li_convergence(c);
  return s_convergence(c);
}

int cmd_converge(const Options& o) {
  const Carrier c = checked_carrier(o.atoms);
  const EPSeq x = parse_sequence(c, o.seq);
  const InfClass cls = inf_class(x);
  const Convergence law = law_by_name(c, o.law);
  ElementSet limits = law(cls);
  std::string via = law.name();
  if (o.topology) {
    limits = lim_topo(synthesize_O_lambda(law), x);
    via = "lim O_" + o.law;
  }
  std::cout << "sequence " << x.to_string() << "\n"
            << "class    " << cls.to_string() << "\n"
            << "law      " << via << "\n"
            << "limits   " << limits.to_string() << "\n"
            << "masks   ";
  for (const auto& e : limits.elements()) std::cout << ' ' << e.mask();
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o) {
  checked_carrier(o.atoms);
  VerifyConfig config;
  config.atoms = o.atoms;
  config.seed = o.seed;
  config.samples = o.samples;
  if (!o.submeasure.empty()) config.submeasure = o.submeasure;
  int passed = 0;
  const auto results = run_verification(config, [&](const CriterionResult& r) {
    if (r.passed) ++passed;
    std::cout << format_result(r) << std::endl;
  });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? kExitOk : kExitFailed;
}

int cmd_submeasure(const Options& o) {
  const Carrier c = checked_carrier(o.atoms);
  std::optional<Submeasure> mu;
  if (o.submeasure == "counting") {
    mu = Submeasure::counting(c);
  } else if (o.submeasure == "truncated") {
    mu = Submeasure::truncated_cardinality(c);
  } else {
    mu = load_submeasure(c, o.submeasure);
  }
  const auto ax = validate_submeasure(*mu);
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "zero at bottom     " << yn(ax.zero_at_bottom) << "\n"
            << "monotone           " << yn(ax.monotone) << "\n"
            << "subadditive        " << yn(ax.subadditive) << "\n"
            << "strictly positive  " << yn(ax.strictly_positive) << "\n"
            << "continuous         " << yn(ax.continuous) << " (" << ax.continuity_note << ")\n";
  if (!ax.is_submeasure()) return kExitFailed;
  std::cout << "triangle           " << yn(check_triangle_inequality(*mu)) << "\n";
  if (c.tabulable()) {
    const auto m = metric_topology(*mu);
    std::cout << "metric topology    " << m.topology.open_count() << " opens"
              << (m.pseudo_metric ? ", pseudo-metric" : "")
              << (m.topology == discrete_topology(c) ? ", discrete" : "") << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential convergences and topologies on finite Boolean algebras"};
  app.require_subcommand(1);
  Options o;

  auto atoms = [&](CLI::App* sub) { sub->add_option("--atoms", o.atoms, "number of atoms n of P(n)"); };

  auto* diagram = app.add_subcommand("diagram", "compare all convergences and topologies");
  atoms(diagram);
  diagram->add_option("--format", o.format, "dot, json or table");

  auto* converge = app.add_subcommand("converge", "limits of one sequence");
  atoms(converge);
  converge->add_option("--seq", o.seq, "sequence literal, e.g. \"[{0};{1},{}]\"")->required();
  converge->add_option("--law", o.law, "ls, li or s")
      ->check(CLI::IsMember({"ls", "li", "s"}));
  converge->add_flag("--topology", o.topology, "limits in the synthesized topology instead");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  atoms(verify);
  verify->add_option("--seed", o.seed, "seed for sampled checks");
  verify->add_option("--samples", o.samples, "samples per randomized check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--submeasure", o.submeasure, "extra submeasure table to check");

  auto* submeasure = app.add_subcommand("submeasure", "check a submeasure table");
  atoms(submeasure);
  submeasure->add_option("--submeasure", o.submeasure, "table file, or counting / truncated")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (diagram->parsed()) return cmd_diagram(o);
    if (converge->parsed()) return cmd_converge(o);
    if (verify->parsed()) return cmd_verify(o);
    return cmd_submeasure(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
