// qforge command line tool: one subcommand per report, see README.md.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qforge/error.hpp"
#include "qforge/report.hpp"

namespace {

struct SubcommandSpec {
  const char* name;
  const char* help;
  bool theta = false;
  bool central = false;
};

constexpr SubcommandSpec kSubcommands[] = {
    {"check", "parse, echelonize and summarize a presentation file"},
    {"hilbert", "graded dimensions up to --maxdeg"},
    {"dual", "quadratic dual presentation"},
    {"overlap", "the overlap space V(x)R meet R(x)V"},
    {"clifford-space", "basis of the space of Clifford maps"},
    {"center", "degree-2 central elements"},
    {"theta-from-central", "Clifford map of the dual induced by a central element", false, true},
    {"deform", "build the deformation E(theta) with its multiplication table", true},
    {"frobenius", "Frobenius form of E(theta)", true},
    {"semisimple", "radical, graded semisimplicity and strong grading of E(theta)", true},
    {"verdict", "isolated-singularity verdict for S/(z)", false, true},
    {"even-part", "even subalgebra of E(theta)", true},
    {"corner-crosscheck", "degree-0 localization against the even part", false, true},
    {"ext", "trivial extension and its isomorphism certificate", true, true},
    {"knorrer", "corner idempotent witness for the double extension", true},
    {"transfer", "semisimplicity transfer across the double extension", true},
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) qforge::fail(qforge::ErrorCode::UsageError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qforge: exact computations with quadratic algebras and Clifford deformations"};
  app.require_subcommand(1);

  bool as_json = false;
  std::optional<std::size_t> max_degree;
  std::optional<std::uint64_t> resource_cap;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_option("--max-degree", max_degree, "truncation degree for reported series and for finiteness searches");
  app.add_option("--resource-cap", resource_cap, "maximum number of words in any word space");

  qforge::CommandOptions opts;
  std::string path;
  std::string theta, central;
  std::optional<std::size_t> maxdeg;
  for (const SubcommandSpec& spec : kSubcommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->fallthrough();
    sub->add_option("file", path, "presentation file")->required();
    if (spec.theta) sub->add_option("--theta", theta, "named clifford vector, or 'zero'");
    if (spec.central) sub->add_option("--central", central, "named central element");
    if (std::string(spec.name) == "hilbert") sub->add_option("--maxdeg", maxdeg, "last degree")->required();
    if (std::string(spec.name) == "center") sub->add_option("--degree", opts.degree, "degree (2)");
    if (std::string(spec.name) == "deform")
      sub->add_flag("--skip-clifford-check", opts.skip_clifford_check, "build even if theta is not Clifford");
    if (std::string(spec.name) == "corner-crosscheck")
      sub->add_flag("--direct", opts.direct, "treat the file as B and --central as w");
    if (std::string(spec.name) == "ext") sub->add_option("--times", opts.times, "1 or 2 extensions");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opts.command = app.get_subcommands().front()->get_name();
  try {
    opts.file_name = path;
    opts.file_text = read_file(path);
    if (!theta.empty()) opts.theta = theta;
    if (!central.empty()) opts.central = central;
    opts.maxdeg = maxdeg;
    opts.max_degree = max_degree;
    opts.limits = qforge::Limits::from_env();
    if (resource_cap) opts.limits.word_cap = *resource_cap;
    opts.limits.degree_cap = max_degree;
    qforge::Json report = qforge::run_command(opts);
    std::cout << qforge::emit_report(report, as_json);
    if (report["status"] == "error")
      std::cerr << "qforge: " << report["error"]["code"].get<std::string>() << ": "
                << report["error"]["message"].get<std::string>() << "\n";
    return qforge::exit_code(report);
  } catch (const qforge::Error& e) {
    qforge::Json report = qforge::error_report(opts.command, e.code(), e.what());
    std::cout << qforge::emit_report(report, as_json);
    std::cerr << "qforge: " << qforge::error_code_name(e.code()) << ": " << e.what() << "\n";
    return qforge::exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "qforge: internal error: " << e.what() << "\n";
    return 2;
  }
}
