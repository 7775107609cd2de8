#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwline/coin.hpp"
#include "qwline/rw.hpp"
#include "qwline/state.hpp"

namespace qw::cli {

enum ExitCode {
  exit_ok = 0,
  exit_verification = 1,  // a check exceeded its tolerance
  exit_config = 2,
  exit_domain = 3,  // singular coins and similar model defects
};

/// Named tolerance overrides; unknown names are config errors.
class Tolerances {
 public:
  Tolerances();
  void set(const std::string& name, double value);
  double get(const std::string& name) const;
  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

enum class Command { simulate, eigenstate, cycle_check, period, rw_check, dichotomy };

std::string to_string(Command command);

struct RunConfig {
  Command command;

  // Exactly one model source.
  std::optional<CPhiParams> cphi;
  std::optional<std::vector<Coin>> coins;
  std::optional<std::vector<double>> hopping;
  bool hopping_is_pattern = false;

  Topology topology = Topology::line(0);
  std::optional<Complex> lambda;  // defaults to e^{i phi} for cphi models
  int steps = 0;
  Vec2 psi0{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  std::string initial = "point";  // simulate: "point" or "eigenstate"
  std::optional<int> max_period;  // period defaults to 64, dichotomy to 4
  std::optional<int> scan_width;
  bool dump_states = true;
  std::optional<unsigned> seed;
  std::string name;

  Tolerances tolerances;
};

/// Angles are accepted as raw radians (JSON numbers) or as multiples of pi:
/// "pi", "2pi", "1/3pi", "pi/3", "0.5pi", "-1/2pi".
double parse_angle_text(const std::string& text);

/// Parse and validate a config document (JSON text).
RunConfig parse_config_text(const std::string& text);

/// Execute one run, writing result files under out_dir. Returns an ExitCode.
int run(const RunConfig& config, const std::filesystem::path& out_dir);

/// parse + run with exceptions mapped to exit codes.
int run_config_text(const std::string& text, const std::filesystem::path& out_dir);

/// Resolved command-line options. Exactly one of config_path / sweep_path.
struct Options {
  std::string config_path;
  std::string sweep_path;
  std::string out_dir = "out";
  std::vector<std::string> tolerance_overrides;  // NAME=VALUE items
  std::optional<unsigned> seed;
};

/// Run one config or fan out a sweep of configs concurrently, each into its
/// own subdirectory of out_dir. Returns the worst exit code.
int execute(const Options& options);

/// Full command line: --config/--out/--sweep/--tol/--seed. Used by the
/// qwline binary and callable from tests.
int main_entry(int argc, const char* const* argv);

}  // namespace qw::cli
