#include "mflab/lab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mflab/errors.hpp"
#include "mflab/io.hpp"

namespace mflab::lab {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid number for " + key + ": '" + value + "'");
  }
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument(value);
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid non-negative integer for " + key + ": '" + value + "'");
  }
}

}  // namespace

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids{"mfcz",   "vq-l2-scaling", "weak11-scaling", "rough-mult-scaling",
                                            "rvar-mult", "layers",     "whitney",        "window-check"};
  return ids;
}

bool is_experiment(const std::string& id) {
  const auto& ids = experiment_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(static_cast<std::size_t>(to_unsigned("n-list", item)));
  }
  if (out.empty()) throw UsageError("n-list is empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void apply_setting(ExperimentConfig& c, const std::string& raw_key, const std::string& raw_value) {
  const std::string key = trim(raw_key);
  const std::string value = trim(raw_value);
  if (key == "experiment") c.experiment = value;
  else if (key == "grid-period") c.grid_period = to_double(key, value);
  else if (key == "grid-samples") c.grid_samples = static_cast<std::size_t>(to_unsigned(key, value));
  else if (key == "n-list") c.n_list = parse_n_list(value);
  else if (key == "q") c.q = to_double(key, value);
  else if (key == "r") c.r = to_double(key, value);
  else if (key == "t") c.t = to_double(key, value);
  else if (key == "tol") c.tol = to_double(key, value);
  else if (key == "trials") c.trials = static_cast<std::size_t>(to_unsigned(key, value));
  else if (key == "seed") c.seed = to_unsigned(key, value);
  else if (key == "family") c.family = value;
  else if (key == "out") c.out = value;
  else if (key == "threads") c.threads = static_cast<std::size_t>(to_unsigned(key, value));
  else if (key == "format") {
    if (value == "csv") c.format = OutputFormat::csv;
    else if (value == "csv+svg") c.format = OutputFormat::csv_svg;
    else throw UsageError("format must be csv or csv+svg, got '" + value + "'");
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

void apply_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
    }
    apply_setting(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void validate(const ExperimentConfig& c) {
  if (!is_experiment(c.experiment)) throw UsageError("unknown experiment '" + c.experiment + "'");
  try {
    (void)c.grid();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (c.trials < 1) throw UsageError("trials must be >= 1");
  if (!(c.q > 2.0)) throw UsageError("q must exceed 2");
  if (!(c.t > 2.0)) throw UsageError("t must exceed 2");
  if (!(c.r >= 1.0)) throw UsageError("r must be >= 1");
  if (!(c.tol > 0.0 && c.tol < 1.0)) throw UsageError("tol must lie in (0, 1)");
  if (c.n_list.empty()) throw UsageError("n-list is empty");
  for (auto n : c.n_list) {
    if (n < 1) throw UsageError("n-list entries must be >= 1");
  }
  static const std::vector<std::string> families{"auto", "window-gaussian", "signed-exponentials", "narrow-atom",
                                                 "delta", "haar-atom"};
  if (std::find(families.begin(), families.end(), c.family) == families.end()) {
    throw UsageError("unknown input family '" + c.family + "'");
  }
}

std::string describe(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "experiment=" << c.experiment << '\n'
      << "grid-period=" << format_number(c.grid_period) << '\n'
      << "grid-samples=" << c.grid_samples << '\n'
      << "n-list=";
  for (std::size_t i = 0; i < c.n_list.size(); ++i) out << (i ? "," : "") << c.n_list[i];
  out << '\n'
      << "q=" << format_number(c.q) << '\n'
      << "r=" << format_number(c.r) << '\n'
      << "t=" << format_number(c.t) << '\n'
      << "tol=" << format_number(c.tol) << '\n'
      << "trials=" << c.trials << '\n'
      << "seed=" << c.seed << '\n'
      << "family=" << c.family << '\n'
      << "out=" << c.out << '\n'
      << "format=" << (c.format == OutputFormat::csv ? "csv" : "csv+svg") << '\n'
      << "threads=" << c.threads << '\n';
  return out.str();
}

}  // namespace mflab::lab
