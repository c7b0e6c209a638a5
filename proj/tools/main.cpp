// mflab: run one experiment of the multi-frequency lab and write its report.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mflab/errors.hpp"
#include "mflab/lab/config.hpp"
#include "mflab/lab/suite.hpp"

namespace {

constexpr int kRuntimeError = 1;
constexpr int kUsageError = 2;

const std::vector<std::pair<std::string, std::string>> kFlags{
    {"grid-period", "torus period P (power of two)"},
    {"grid-samples", "samples per period M (power of two, M >= 4P)"},
    {"n-list", "comma-separated N values"},
    {"q", "variation exponent q > 2"},
    {"r", "symbol variation exponent r >= 1"},
    {"t", "entropy integral exponent t"},
    {"tol", "layer tolerance in (0, 1)"},
    {"trials", "trials per N"},
    {"seed", "master seed"},
    {"family", "input family (auto, window-gaussian, signed-exponentials, narrow-atom, delta, haar-atom)"},
    {"out", "output directory"},
    {"format", "csv or csv+svg"},
    {"threads", "worker threads (0 = hardware concurrency)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-frequency variation lab"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", MFLAB_VERSION);

  std::string config_path;
  std::map<std::string, std::string> values;
  for (const auto& id : mflab::lab::experiment_ids()) {
    CLI::App* sub = app.add_subcommand(id, "run the " + id + " experiment");
    sub->add_option("--config", config_path, "key = value file; flags override it")->check(CLI::ExistingFile);
    for (const auto& [name, help] : kFlags) sub->add_option("--" + name, values[name], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  mflab::lab::ExperimentConfig config;
  try {
    CLI::App* sub = app.get_subcommands().front();
    config.experiment = sub->get_name();
    if (!config_path.empty()) mflab::lab::apply_config_file(config, config_path);
    config.experiment = sub->get_name();
    for (const auto& [name, help] : kFlags) {
      if (sub->count("--" + name) > 0) mflab::lab::apply_setting(config, name, values[name]);
    }
    mflab::lab::validate(config);
  } catch (const mflab::Error& e) {
    std::cerr << "mflab: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const mflab::lab::SuiteResult result = mflab::lab::run_suite(config);
    for (const auto& file : result.files) std::cout << file << '\n';
    if (result.has_fit) {
      const auto& fit = result.report.fit;
      std::cout << "alpha=" << fit.alpha << " r2_power=" << fit.r2_power << " beta=" << fit.beta
                << " r2_log=" << fit.r2_log << '\n';
    }
  } catch (const mflab::UsageError& e) {
    std::cerr << "mflab: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "mflab: " << e.what() << '\n';
    return kRuntimeError;
  }
  return 0;
}
