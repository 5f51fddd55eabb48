#include <algorithm>
#include <cmath>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmx/config.hpp"
#include "qmx/io.hpp"
#include "qmx/parallel.hpp"
#include "qmx/runner.hpp"
#include "qmx/suites.hpp"

namespace {

int cmd_verify(const std::string& suite, bool quiet) {
  const std::vector<std::string> names =
      suite == "all" ? qmx::suite_names() : std::vector<std::string>{suite};
  bool all_ok = true;
  for (const std::string& name : names) {
    const qmx::SuiteReport rep = qmx::run_suite(name);
    if (!quiet || !rep.passed()) qmx::print_report(rep, std::cout);
    all_ok = all_ok && rep.passed();
  }
  return all_ok ? 0 : 1;
}

int cmd_inspect(const std::string& path) {
  const qmx::Snapshot snap = qmx::read_snapshot(path);
  std::cout << "dims: " << snap.nx << " x " << snap.ny << " x " << snap.nz
            << "  fields: " << snap.fields.size() << "\n";
  for (const qmx::SnapshotField& f : snap.fields) {
    double lo = 0.0, hi = 0.0, acc = 0.0;
    if (!f.data.empty()) {
      lo = *std::min_element(f.data.begin(), f.data.end());
      hi = *std::max_element(f.data.begin(), f.data.end());
      for (double v : f.data) acc += v * v;
      acc = std::sqrt(acc / static_cast<double>(f.data.size()));
    }
    std::cout << "  " << static_cast<char>(f.tag)
              << (qmx::tag_is_vector(f.tag) ? " (vector)" : " (scalar)")
              << "  min " << qmx::format_g17(lo) << "  max " << qmx::format_g17(hi)
              << "  l2 " << qmx::format_g17(acc) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternion-field electrodynamics toolkit"};
  app.require_subcommand(1);

  int threads = 1;
  bool quiet = false;
  app.add_option("--threads", threads, "worker count for field loops (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", quiet, "suppress non-essential logging");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite,
                     "algebra|identities|convergence|conservation|thermo|all");

  CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario config");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "JSON scenario file")->required();

  CLI::App* inspect = app.add_subcommand("inspect", "summarize a snapshot file");
  std::string snapshot_path;
  inspect->add_option("path", snapshot_path, "snapshot file")->required();

  CLI11_PARSE(app, argc, argv);
  qmx::set_worker_count(threads);

  try {
    if (verify->parsed()) return cmd_verify(suite, quiet);
    if (run_cmd->parsed())
      return qmx::run_scenario(qmx::parse_config_file(config_path), quiet, std::cout);
    return cmd_inspect(snapshot_path);
  } catch (const qmx::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
