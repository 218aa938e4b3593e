// Command-line front end: scenario runs, parameter sweeps, builtin
// reproductions and config validation. Errors go to stderr as a single JSON
// line; exit codes: 0 ok, 1 validation, 2 resource budget, 3 runtime/I/O.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringecho/ringecho.hpp"

namespace {

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("RINGECHO_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

void print_error(const char* kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

void print_result(const std::string& name, const ringecho::RunResult& r) {
  std::cout << name << ": delay=" << r.delay
            << " window_efficiency=" << r.window_efficiency
            << " first_fidelity=" << r.first_fidelity;
  if (r.engine_disagreement >= 0.0) {
    std::cout << " engine_disagreement=" << r.engine_disagreement;
  }
  if (!r.wraparound_ok) {
    std::cout << " WARNING: wraparound fraction " << r.wraparound_fraction
              << " (grid too short; results flagged invalid)";
  }
  std::cout << "\n";
  for (const auto& f : r.files) std::cout << "  wrote " << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ring-resonator array echo simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string builtin_name;
  std::string out_dir = "out";
  int workers = 0;
  bool force = false;

  auto* run_cmd = app.add_subcommand("run", "run one scenario config");
  run_cmd->add_option("config", config_path, "scenario config file")
      ->required();
  run_cmd->add_option("-o,--output", out_dir, "output directory");
  run_cmd->add_option("-w,--workers", workers, "worker threads");

  auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
  sweep_cmd->add_option("config", config_path, "sweep config file")->required();
  sweep_cmd->add_option("-o,--output", out_dir, "output directory");
  sweep_cmd->add_option("-w,--workers", workers, "worker threads");
  sweep_cmd->add_flag("--force", force, "allow sweeps over 10000 cells");

  auto* builtin_cmd =
      app.add_subcommand("builtin", "run a named builtin scenario set");
  builtin_cmd->add_option("name", builtin_name, "builtin name, or 'list'")
      ->required();
  builtin_cmd->add_option("-o,--output", out_dir, "output directory");
  builtin_cmd->add_option("-w,--workers", workers, "worker threads");

  auto* validate_cmd =
      app.add_subcommand("validate", "validate a config without running it");
  validate_cmd->add_option("config", config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const ringecho::SweepRequest request = ringecho::load_config(config_path);
      if (!request.axes.empty()) {
        throw ringecho::ValidationError(
            "config declares a [sweep] section; use the sweep command");
      }
      const auto result = ringecho::run_scenario(request.base, out_dir);
      print_result(request.base.name, result);
    } else if (sweep_cmd->parsed()) {
      ringecho::SweepRequest request = ringecho::load_config(config_path);
      if (force) request.allow_large = true;
      const auto path =
          ringecho::run_sweep(request, out_dir, resolve_workers(workers));
      std::cout << "wrote " << path.string() << "\n";
    } else if (builtin_cmd->parsed()) {
      if (builtin_name == "list") {
        for (const auto& n : ringecho::builtin_names()) std::cout << n << "\n";
        return 0;
      }
      const auto files = ringecho::run_builtin(builtin_name, out_dir,
                                               resolve_workers(workers));
      for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
    } else if (validate_cmd->parsed()) {
      const ringecho::SweepRequest request = ringecho::load_config(config_path);
      (void)ringecho::resolve(request.base);
      std::cout << "ok: " << request.base.name << "\n";
    }
  } catch (const ringecho::ValidationError& e) {
    print_error("validation", e.what());
    return 1;
  } catch (const ringecho::ResourceError& e) {
    print_error("resource", e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("runtime", e.what());
    return 3;
  }
  return 0;
}
