// linfiso command-line interface. Talks to the library only through the C API.
//
//   linfiso decide FILE [--mode auto|general] [--json]     exit 0 / 1 / 2
//   linfiso bounds FILE [--per-set] [--json]
//   linfiso projconst FILE [--emit-projection] [--json]
//   linfiso crosscheck [--seed S] [--count C] [--max-n N] [--max-m M]
//                      [--entry-range R] [--rational] [--jobs J] [--json]
//   linfiso gen [--seed S] [--n n] [--m m] [--entry-range R] [--rational]
//               [--kind annihilator|spanning]

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <thread>

#include "linfiso/linfiso.h"

namespace {

constexpr int kExitError = 2;

struct ReportDeleter {
  void operator()(linfiso_report* r) const { linfiso_report_free(r); }
};
struct SubspaceDeleter {
  void operator()(linfiso_subspace* s) const { linfiso_subspace_free(s); }
};
using ReportPtr = std::unique_ptr<linfiso_report, ReportDeleter>;
using SubspacePtr = std::unique_ptr<linfiso_subspace, SubspaceDeleter>;

int report_failure(const std::string& context, linfiso_status status) {
  std::cerr << "linfiso " << context << ": " << linfiso_status_name(status) << ": "
            << linfiso_last_error() << "\n";
  return kExitError;
}

SubspacePtr load(const std::string& path, int& exit_code) {
  linfiso_subspace* raw = nullptr;
  const linfiso_status st = linfiso_subspace_load(path.c_str(), &raw);
  if (st != LINFISO_OK) exit_code = report_failure(path, st);
  return SubspacePtr(raw);
}

void print(const ReportPtr& report, bool json) {
  if (json)
    std::cout << linfiso_report_json(report.get()) << "\n";
  else
    std::cout << linfiso_report_text(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact test for subspaces of l_inf^N isometric to l_inf^n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(linfiso_version()));

  std::string path;
  bool json = false;

  auto* decide = app.add_subcommand("decide", "Decide whether V is isometric to l_inf^n");
  std::string mode = "auto";
  decide->add_option("file", path, "Instance file")->required();
  decide->add_option("--mode", mode, "auto uses closed forms for m = 1, 2")
      ->check(CLI::IsMember({"auto", "general"}));
  decide->add_flag("--json", json, "Machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "Projection constant and best distance bound");
  bool per_set = false;
  bounds->add_option("file", path, "Instance file")->required();
  bounds->add_flag("--per-set", per_set, "List the bound for every admissible set");
  bounds->add_flag("--json", json, "Machine-readable output");

  auto* projconst = app.add_subcommand("projconst", "Exact projection constant by LP");
  bool emit = false;
  projconst->add_option("file", path, "Instance file")->required();
  projconst->add_flag("--emit-projection", emit, "Print Y, P and the LP certificate");
  projconst->add_flag("--json", json, "Machine-readable output");

  linfiso_crosscheck_options cc;
  linfiso_crosscheck_defaults(&cc);
  cc.jobs = std::max(1u, std::thread::hardware_concurrency());
  bool cc_rational = false;
  auto* crosscheck = app.add_subcommand("crosscheck", "Random cross-validation of the decision");
  crosscheck->add_option("--seed", cc.seed, "RNG seed")->capture_default_str();
  crosscheck->add_option("--count", cc.count, "Number of instances")->capture_default_str();
  crosscheck->add_option("--max-n", cc.max_n, "Largest ambient dimension N")->capture_default_str();
  crosscheck->add_option("--max-m", cc.max_m, "Largest codimension m")->capture_default_str();
  crosscheck->add_option("--entry-range", cc.entry_range, "Entries drawn from [-R, R]")
      ->capture_default_str();
  crosscheck->add_flag("--rational", cc_rational, "Divide entries by random denominators");
  crosscheck->add_option("--jobs", cc.jobs, "Worker threads");
  crosscheck->add_flag("--json", json, "Machine-readable output");

  linfiso_gen_options gen;
  linfiso_gen_defaults(&gen);
  bool gen_rational = false;
  std::string kind = "annihilator";
  auto* gen_cmd = app.add_subcommand("gen", "Emit a random full-rank instance");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "Dimension of V")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Codimension of V")->capture_default_str();
  gen_cmd->add_option("--entry-range", gen.entry_range, "Entries drawn from [-R, R]")
      ->capture_default_str();
  gen_cmd->add_flag("--rational", gen_rational, "Divide entries by random denominators");
  gen_cmd->add_option("--kind", kind, "Basis written to the file")
      ->check(CLI::IsMember({"annihilator", "spanning"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  int exit_code = 0;
  linfiso_report* raw = nullptr;

  if (*decide) {
    auto subspace = load(path, exit_code);
    if (!subspace) return exit_code;
    int verdict = 0;
    const auto m = mode == "general" ? LINFISO_MODE_GENERAL : LINFISO_MODE_AUTO;
    const linfiso_status st = linfiso_decide(subspace.get(), m, &verdict, &raw);
    ReportPtr report(raw);
    if (st != LINFISO_OK) return report_failure("decide", st);
    print(report, json);
    return verdict ? 0 : 1;
  }

  if (*bounds) {
    auto subspace = load(path, exit_code);
    if (!subspace) return exit_code;
    const linfiso_status st = linfiso_bounds(subspace.get(), per_set ? 1 : 0, &raw);
    ReportPtr report(raw);
    if (st != LINFISO_OK) return report_failure("bounds", st);
    print(report, json);
    return 0;
  }

  if (*projconst) {
    auto subspace = load(path, exit_code);
    if (!subspace) return exit_code;
    const linfiso_status st = linfiso_projconst(subspace.get(), emit ? 1 : 0, &raw);
    ReportPtr report(raw);
    if (st != LINFISO_OK) return report_failure("projconst", st);
    print(report, json);
    return 0;
  }

  if (*crosscheck) {
    cc.rational_entries = cc_rational ? 1 : 0;
    std::size_t disagreements = 0;
    const linfiso_status st = linfiso_crosscheck(&cc, &disagreements, &raw);
    ReportPtr report(raw);
    if (st != LINFISO_OK) return report_failure("crosscheck", st);
    print(report, json);
    return disagreements == 0 ? 0 : 1;
  }

  if (*gen_cmd) {
    gen.rational_entries = gen_rational ? 1 : 0;
    gen.kind = kind == "spanning" ? LINFISO_BASIS_SPANNING : LINFISO_BASIS_ANNIHILATOR;
    const linfiso_status st = linfiso_generate(&gen, &raw);
    ReportPtr report(raw);
    if (st != LINFISO_OK) return report_failure("gen", st);
    std::cout << linfiso_report_text(report.get());
    return 0;
  }
  return exit_code;
}
