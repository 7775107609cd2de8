#include "qwline/run.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "qwline/evolve.hpp"
#include "qwline/transfer.hpp"

namespace qw::cli {

using nlohmann::json;

Tolerances::Tolerances()
    : values_{{"unitarity", 1e-12}, {"residual", 1e-9}, {"uniformity", 1e-9},
              {"product", 1e-10},   {"pairwise", 1e-12}, {"spectral", 1e-9},
              {"period", 1e-9},     {"norm", 1e-10},     {"rw", 1e-12}} {}

void Tolerances::set(const std::string& name, double value) {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  if (!(value > 0.0)) throw std::invalid_argument("tolerance '" + name + "' must be positive");
  it->second = value;
}

double Tolerances::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  return it->second;
}

std::string to_string(Command command) {
  switch (command) {
    case Command::simulate: return "simulate";
    case Command::eigenstate: return "eigenstate";
    case Command::cycle_check: return "cycle-check";
    case Command::period: return "period";
    case Command::rw_check: return "rw-check";
    case Command::dichotomy: return "dichotomy";
  }
  return "?";
}

namespace {

Command command_from_string(const std::string& name) {
  if (name == "simulate") return Command::simulate;
  if (name == "eigenstate") return Command::eigenstate;
  if (name == "cycle-check") return Command::cycle_check;
  if (name == "period") return Command::period;
  if (name == "rw-check") return Command::rw_check;
  if (name == "dichotomy") return Command::dichotomy;
  throw std::invalid_argument("unknown command '" + name + "'");
}

double parse_angle_json(const json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return parse_angle_text(value.get<std::string>());
  throw std::invalid_argument("angle must be a number (radians) or a pi-multiple string");
}

Complex parse_complex_json(const json& value) {
  if (value.is_number()) return Complex(value.get<double>(), 0.0);
  if (value.is_array() && value.size() == 2)
    return Complex(value[0].get<double>(), value[1].get<double>());
  throw std::invalid_argument("complex values are numbers or [re, im] pairs");
}

// lambda accepts an angle string ("1/3pi" -> e^{i pi/3}) on top of the
// complex forms.
Complex parse_lambda_json(const json& value) {
  if (value.is_string()) return std::polar(1.0, parse_angle_text(value.get<std::string>()));
  return parse_complex_json(value);
}

Topology parse_topology_json(const json& value) {
  if (value.is_object() && value.contains("line")) return Topology::line(value.at("line").get<int>());
  if (value.is_object() && value.contains("cycle")) return Topology::cycle(value.at("cycle").get<int>());
  throw std::invalid_argument("topology must be {\"line\": L} or {\"cycle\": m}");
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_field_csv(const std::filesystem::path& path, const SpinorField& field) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "site,mu,reL,imL,reR,imR\n";
  const Topology& topo = field.topology();
  for (int i = 0; i < topo.size(); ++i) {
    int site = topo.site_of(i);
    const Vec2& v = field.amplitudes()[i];
    double mu = std::norm(v(0)) + std::norm(v(1));
    out << site << ',' << format_double(mu) << ',' << format_double(v(0).real()) << ','
        << format_double(v(0).imag()) << ',' << format_double(v(1).real()) << ','
        << format_double(v(1).imag()) << '\n';
  }
}

void write_measure_csv(const std::filesystem::path& path, const Measure& mu) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "site,mu\n";
  const Topology& topo = mu.topology();
  for (int i = 0; i < topo.size(); ++i)
    out << topo.site_of(i) << ',' << format_double(mu.values()[i]) << '\n';
}

struct CheckList {
  json entries = json::array();
  bool all_pass = true;

  void add(const std::string& name, double value, double tolerance) {
    bool pass = value <= tolerance;
    entries.push_back({{"name", name}, {"value", value}, {"tolerance", tolerance}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
  void add_flag(const std::string& name, bool pass) {
    entries.push_back({{"name", name}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
};

void write_summary(const std::filesystem::path& out_dir, const RunConfig& config,
                   const json& parameters, const json& results, const CheckList& checks) {
  json summary = {{"command", to_string(config.command)},
                  {"parameters", parameters},
                  {"results", results},
                  {"checks", checks.entries},
                  {"pass", checks.all_pass}};
  std::ofstream out(out_dir / "summary.json");
  if (!out) throw std::runtime_error("cannot write summary.json");
  out << summary.dump(2) << '\n';
}

CoinSequence make_coin_sequence(const RunConfig& config) {
  if (config.cphi) return CoinSequence::cphi(config.topology, *config.cphi);
  if (config.coins) return CoinSequence::from_coins(config.topology, *config.coins);
  throw std::invalid_argument(to_string(config.command) + " needs a coin model");
}

HoppingSequence make_hopping(const RunConfig& config) {
  if (!config.hopping) throw std::invalid_argument("rw-check needs a hopping model");
  if (config.hopping_is_pattern)
    return HoppingSequence::periodic(config.topology, *config.hopping);
  return HoppingSequence(config.topology, *config.hopping);
}

Complex resolved_lambda(const RunConfig& config) {
  if (config.lambda) return unit_lambda(*config.lambda);
  if (config.cphi) return config.cphi->lambda();
  throw std::invalid_argument("no lambda given and the model does not imply one");
}

bool lambda_is_model_default(const RunConfig& config, Complex lambda) {
  return config.cphi && std::abs(lambda - config.cphi->lambda()) <= 1e-12;
}

json parameters_json(const RunConfig& config, std::optional<Complex> lambda) {
  json parameters;
  parameters["topology"] = config.topology.describe();
  if (config.cphi)
    parameters["cphi"] = {{"theta", config.cphi->theta},
                          {"phi", config.cphi->phi},
                          {"omega0", config.cphi->omega0}};
  if (config.coins) parameters["coins"] = config.coins->size();
  if (config.hopping) parameters["hopping_sites"] = config.hopping->size();
  if (lambda) parameters["lambda"] = {lambda->real(), lambda->imag()};
  if (config.seed) parameters["seed"] = *config.seed;
  return parameters;
}

int finish(const std::filesystem::path& out_dir, const RunConfig& config,
           const json& parameters, const json& results, const CheckList& checks) {
  write_summary(out_dir, config, parameters, results, checks);
  return checks.all_pass ? exit_ok : exit_verification;
}

int cmd_eigenstate(const RunConfig& config, const std::filesystem::path& out_dir) {
  CoinSequence seq = make_coin_sequence(config);
  Complex lambda = resolved_lambda(config);

  SpinorField psi = config.topology.is_line()
                        ? build_eigenstate(seq, lambda, config.psi0, config.topology.half_width())
                        : build_cycle_eigenstate(seq, lambda, config.psi0);
  double residual = eigen_residual(psi, seq, lambda);
  Measure mu = gamma_measure(psi);
  double defect = uniformity_defect(mu);

  write_field_csv(out_dir / "state.csv", psi);

  CheckList checks;
  checks.add("eigen_residual", residual, config.tolerances.get("residual"));
  if (lambda_is_model_default(config, lambda))
    checks.add("uniformity_defect", defect, config.tolerances.get("uniformity"));

  json results = {{"eigen_residual", residual}, {"uniformity_defect", defect}};
  return finish(out_dir, config, parameters_json(config, lambda), results, checks);
}

int cmd_simulate(const RunConfig& config, const std::filesystem::path& out_dir) {
  CoinSequence seq = make_coin_sequence(config);
  bool from_eigenstate = config.initial == "eigenstate";
  if (!from_eigenstate && config.initial != "point")
    throw std::invalid_argument("initial must be \"point\" or \"eigenstate\"");

  std::optional<Complex> lambda;
  SpinorField psi = SpinorField::zero(config.topology);
  if (from_eigenstate) {
    lambda = resolved_lambda(config);
    if (config.topology.is_line()) {
      int l = config.topology.half_width();
      if (config.steps > l - 1)
        throw std::invalid_argument("eigenstate simulate needs steps <= L-1 to keep a "
                                    "checkable interior");
      psi = build_eigenstate(seq, *lambda, config.psi0, l);
    } else {
      psi = build_cycle_eigenstate(seq, *lambda, config.psi0);
    }
  } else {
    psi = SpinorField::point(config.topology, 0, config.psi0);
  }

  EvolutionOperator op(seq);
  json defects = json::array();
  json residuals = json::array();
  json masses = json::array();
  double worst_defect = 0.0, worst_residual = 0.0;
  double initial_mass = gamma_measure(psi).total(), worst_mass_drift = 0.0;

  SpinorField current = psi;
  for (int n = 0; n <= config.steps; ++n) {
    if (n > 0) current = step(current, op);
    Measure mu = gamma_measure(current);
    masses.push_back(mu.total());
    worst_mass_drift = std::max(worst_mass_drift, std::abs(mu.total() - initial_mass));

    std::vector<int> interior = interior_sites(current);
    if (!interior.empty()) {
      double defect = uniformity_defect(mu, interior);
      defects.push_back(defect);
      if (from_eigenstate) worst_defect = std::max(worst_defect, defect);
    } else {
      defects.push_back(nullptr);
    }

    if (from_eigenstate) {
      std::vector<int> checkable;
      if (config.topology.is_line()) {
        int reach = config.topology.half_width() - current.boundary_depth() - 1;
        for (int x = -reach; x <= reach; ++x) checkable.push_back(x);
      } else {
        checkable = config.topology.all_sites();
      }
      double r = eigen_residual(current, seq, *lambda, checkable);
      residuals.push_back(r);
      worst_residual = std::max(worst_residual, r);
    }

    if (config.dump_states) {
      char name[32];
      std::snprintf(name, sizeof name, "state_%04d.csv", n);
      write_field_csv(out_dir / name, current);
    }
  }

  CheckList checks;
  if (from_eigenstate) {
    checks.add("max_eigen_residual", worst_residual, config.tolerances.get("residual"));
    checks.add("max_interior_uniformity_defect", worst_defect,
               config.tolerances.get("uniformity"));
  }
  if (config.topology.is_cycle())
    checks.add("mass_conservation_drift", worst_mass_drift, config.tolerances.get("norm"));

  json results = {{"steps", config.steps},
                  {"initial", config.initial},
                  {"interior_uniformity_defects", defects},
                  {"total_mass", masses}};
  if (from_eigenstate) results["eigen_residuals"] = residuals;
  return finish(out_dir, config, parameters_json(config, lambda), results, checks);
}

int cmd_cycle_check(const RunConfig& config, const std::filesystem::path& out_dir) {
  if (!config.topology.is_cycle())
    throw std::invalid_argument("cycle-check requires a cycle topology");
  CoinSequence seq = make_coin_sequence(config);
  Complex lambda = resolved_lambda(config);
  int m = config.topology.size();

  Mat2 product = cycle_product(seq, lambda);
  double product_defect = max_abs_diff(product, Mat2::Identity());

  CheckList checks;
  checks.add("product_identity_defect", product_defect, config.tolerances.get("product"));

  json results = {{"product_identity_defect", product_defect}};

  if (lambda_is_model_default(config, lambda)) {
    // Consecutive transfer matrices of the phase-gradient family compose to
    // diag(e^{2i phi}, e^{-2i phi}).
    Mat2 diag = Mat2::Zero();
    diag(0, 0) = std::polar(1.0, 2.0 * config.cphi->phi);
    diag(1, 1) = std::polar(1.0, -2.0 * config.cphi->phi);
    double pairwise = 0.0;
    for (int x = 0; x < m; ++x) {
      Mat2 pair = transfer_plus_at(seq, x + 1, lambda).entries *
                  transfer_plus_at(seq, x, lambda).entries;
      pairwise = std::max(pairwise, max_abs_diff(pair, diag));
    }
    checks.add("pairwise_diagonal_defect", pairwise, config.tolerances.get("pairwise"));
    results["pairwise_diagonal_defect"] = pairwise;
  }

  if (m <= 512) {
    Eigen::MatrixXcd dense = dense_cycle_operator(seq);
    double unitarity = (dense.adjoint() * dense - Eigen::MatrixXcd::Identity(2 * m, 2 * m))
                           .cwiseAbs()
                           .maxCoeff();
    double spectral = spectral_distance(dense, lambda);
    SpinorField psi = build_cycle_eigenstate(seq, lambda, config.psi0);
    double residual = eigen_residual(psi, seq, lambda);
    double defect = uniformity_defect(gamma_measure(psi));
    write_field_csv(out_dir / "state.csv", psi);

    checks.add("dense_unitarity_defect", unitarity, config.tolerances.get("unitarity"));
    checks.add("spectral_distance", spectral, config.tolerances.get("spectral"));
    checks.add("eigen_residual", residual, config.tolerances.get("residual"));
    checks.add("uniformity_defect", defect, config.tolerances.get("uniformity"));

    json eigenvalues = json::array();
    for (Complex value : spectrum(dense)) eigenvalues.push_back({value.real(), value.imag()});
    results["dense_eigenvalues"] = eigenvalues;
    results["spectral_distance"] = spectral;
    results["eigen_residual"] = residual;
    results["uniformity_defect"] = defect;
  } else {
    results["dense_oracle"] = "skipped (m > 512)";
  }

  return finish(out_dir, config, parameters_json(config, lambda), results, checks);
}

int cmd_period(const RunConfig& config, const std::filesystem::path& out_dir) {
  if (!config.topology.is_line())
    throw std::invalid_argument("period detection requires a line topology");
  CoinSequence seq = make_coin_sequence(config);
  int max_period = config.max_period.value_or(64);
  int scan_width = config.scan_width.value_or(4 * max_period);
  std::optional<int> period =
      detect_period(seq, max_period, scan_width, config.tolerances.get("period"));

  json results = {{"max_period", max_period}, {"scan_width", scan_width}};
  results["period"] = period ? json(*period) : json(nullptr);

  CheckList checks;  // a "none" answer is a result, not a failure
  return finish(out_dir, config, parameters_json(config, std::nullopt), results, checks);
}

int cmd_rw_check(const RunConfig& config, const std::filesystem::path& out_dir) {
  HoppingSequence hop = make_hopping(config);
  StationarityWitness witness = uniform_stationarity_witness(hop, config.tolerances.get("rw"));

  // Independent confirmation: apply one step to the uniform measure.
  Measure uniform(config.topology, std::vector<double>(config.topology.size(), 1.0));
  Measure stepped = rw_step(uniform, hop);
  double deviation = 0.0;
  for (double value : stepped.values()) deviation = std::max(deviation, std::abs(value - 1.0));
  write_measure_csv(out_dir / "stepped_uniform.csv", stepped);

  json results = {{"is_uniform_stationary", witness.is_uniform_stationary},
                  {"uniform_fixed_point_deviation", deviation}};
  results["violating_site"] =
      witness.violating_site ? json(*witness.violating_site) : json(nullptr);

  CheckList checks;  // classification result, not a tolerance verification
  return finish(out_dir, config, parameters_json(config, std::nullopt), results, checks);
}

int cmd_dichotomy(const RunConfig& config, const std::filesystem::path& out_dir) {
  int max_period = config.max_period.value_or(4);
  double theta = config.cphi ? config.cphi->theta : kPi / 4;
  double omega0 = config.cphi ? config.cphi->omega0 : 0.0;
  if (config.seed) {
    // Seeded draw, kept away from the excluded and degenerate angles.
    std::mt19937 rng(*config.seed);
    std::uniform_real_distribution<double> dist(0.05, kTwoPi - 0.05);
    do {
      theta = dist(rng);
    } while (std::abs(theta - kPi / 2) < 0.05 || std::abs(theta - 3 * kPi / 2) < 0.05 ||
             std::abs(theta - kPi) < 0.05);
  }

  std::vector<DichotomyRow> rows = dichotomy_table(max_period, theta, omega0);

  std::ofstream table(out_dir / "dichotomy.csv");
  if (!table) throw std::runtime_error("cannot write dichotomy.csv");
  table << "period,rw_admits_uniform,qw_admits_uniform\n";
  json row_json = json::array();
  CheckList checks;
  for (const DichotomyRow& row : rows) {
    std::string label = row.period ? std::to_string(*row.period) : "inf";
    table << label << ',' << (row.rw_admits_uniform ? "true" : "false") << ','
          << (row.qw_admits_uniform ? "true" : "false") << '\n';
    row_json.push_back(
        {{"period", row.period ? json(*row.period) : json(nullptr)},
         {"rw_admits_uniform", row.rw_admits_uniform},
         {"qw_admits_uniform", row.qw_admits_uniform},
         {"qw_phi", row.qw_phi},
         {"qw_detected_period", row.qw_detected_period ? json(*row.qw_detected_period) : json(nullptr)},
         {"qw_eigen_residual", row.qw_eigen_residual},
         {"qw_uniformity_defect", row.qw_uniformity_defect}});
    checks.add_flag("qw_witness_period_" + label, row.qw_admits_uniform);
  }

  json results = {{"rows", row_json}, {"theta", theta}, {"omega0", omega0}};
  return finish(out_dir, config, parameters_json(config, std::nullopt), results, checks);
}

}  // namespace

double parse_angle_text(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?|[+-]?\d+\s*/\s*\d+)?\s*[pP][iI]\s*(?:/\s*(\d+(?:\.\d*)?|\.\d+))?\s*$)");
  std::smatch match;
  if (std::regex_match(text, match, pi_form)) {
    double coefficient = 1.0;
    if (match[1].matched) {
      std::string c = match[1].str();
      auto slash = c.find('/');
      if (slash != std::string::npos) {
        double denominator = std::stod(c.substr(slash + 1));
        if (denominator == 0.0) throw std::invalid_argument("zero denominator in angle");
        coefficient = std::stod(c.substr(0, slash)) / denominator;
      } else {
        coefficient = std::stod(c);
      }
    }
    double divisor = 1.0;
    if (match[2].matched) {
      divisor = std::stod(match[2].str());
      if (divisor == 0.0) throw std::invalid_argument("zero divisor in angle");
    }
    return coefficient * kPi / divisor;
  }

  std::size_t consumed = 0;
  double value;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  }
  while (consumed < text.size() && std::isspace(static_cast<unsigned char>(text[consumed])))
    ++consumed;
  if (consumed != text.size())
    throw std::invalid_argument("cannot parse angle '" + text + "'");
  return value;
}

RunConfig parse_config_text(const std::string& text) {
  json document = json::parse(text);
  RunConfig config;
  config.command = command_from_string(document.at("command").get<std::string>());
  config.topology = parse_topology_json(document.at("topology"));

  int sources = 0;
  if (document.contains("model")) {
    const json& model = document.at("model");
    if (model.contains("cphi")) {
      const json& p = model.at("cphi");
      config.cphi = CPhiParams(parse_angle_json(p.at("theta")), parse_angle_json(p.at("phi")),
                               parse_angle_json(p.value("omega0", json(0.0))));
      ++sources;
    }
    if (model.contains("coins")) {
      std::vector<Coin> coins;
      for (const json& entry : model.at("coins"))
        coins.push_back(Coin{parse_complex_json(entry.at("a")), parse_complex_json(entry.at("b")),
                             parse_complex_json(entry.at("c")), parse_complex_json(entry.at("d"))});
      config.coins = std::move(coins);
      ++sources;
    }
    if (model.contains("hopping")) {
      const json& h = model.at("hopping");
      if (h.contains("pattern")) {
        config.hopping = h.at("pattern").get<std::vector<double>>();
        config.hopping_is_pattern = true;
      } else {
        config.hopping = h.at("p").get<std::vector<double>>();
      }
      ++sources;
    }
  }
  if (sources > 1) throw std::invalid_argument("config must give exactly one model source");
  if (sources == 0 && config.command != Command::dichotomy)
    throw std::invalid_argument("config needs a model");

  if (document.contains("lambda") && !document.at("lambda").is_null())
    config.lambda = parse_lambda_json(document.at("lambda"));
  if (document.contains("steps")) config.steps = document.at("steps").get<int>();
  if (config.steps < 0) throw std::invalid_argument("steps must be >= 0");
  if (document.contains("psi0")) {
    const json& p = document.at("psi0");
    if (!p.is_array() || p.size() != 2)
      throw std::invalid_argument("psi0 must be a pair of complex numbers");
    config.psi0 = Vec2(parse_complex_json(p[0]), parse_complex_json(p[1]));
  }
  if (document.contains("initial")) config.initial = document.at("initial").get<std::string>();
  if (document.contains("max_period")) config.max_period = document.at("max_period").get<int>();
  if (document.contains("scan_width")) config.scan_width = document.at("scan_width").get<int>();
  if (document.contains("seed")) config.seed = document.at("seed").get<unsigned>();
  if (document.contains("name")) config.name = document.at("name").get<std::string>();
  if (document.contains("output")) {
    const json& output = document.at("output");
    if (output.contains("dump_states")) config.dump_states = output.at("dump_states").get<bool>();
    if (output.contains("format") && output.at("format").get<std::string>() != "csv")
      throw std::invalid_argument("only the csv output format is supported");
  }
  if (document.contains("tolerances"))
    for (const auto& [name, value] : document.at("tolerances").items())
      config.tolerances.set(name, value.get<double>());

  return config;
}

int run(const RunConfig& config, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  switch (config.command) {
    case Command::simulate: return cmd_simulate(config, out_dir);
    case Command::eigenstate: return cmd_eigenstate(config, out_dir);
    case Command::cycle_check: return cmd_cycle_check(config, out_dir);
    case Command::period: return cmd_period(config, out_dir);
    case Command::rw_check: return cmd_rw_check(config, out_dir);
    case Command::dichotomy: return cmd_dichotomy(config, out_dir);
  }
  throw std::logic_error("unhandled command");
}

namespace {

// Anything thrown while acting on a parsed config: domain errors keep their
// own exit code, everything else counts as a config problem.
int run_parsed(const RunConfig& config, const std::filesystem::path& out_dir) {
  try {
    return run(config, out_dir);
  } catch (const std::domain_error& error) {
    std::cerr << "qwline: domain error: " << error.what() << '\n';
    return exit_domain;
  } catch (const std::exception& error) {
    std::cerr << "qwline: error: " << error.what() << '\n';
    return exit_config;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void apply_overrides(RunConfig& config, const std::vector<std::string>& tolerance_overrides,
                     std::optional<unsigned> seed) {
  for (const std::string& item : tolerance_overrides) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--tol expects NAME=VALUE, got '" + item + "'");
    config.tolerances.set(item.substr(0, eq), std::stod(item.substr(eq + 1)));
  }
  if (seed) config.seed = seed;
}

}  // namespace

int run_config_text(const std::string& text, const std::filesystem::path& out_dir) {
  RunConfig config;
  try {
    config = parse_config_text(text);
  } catch (const std::exception& error) {
    std::cerr << "qwline: config error: " << error.what() << '\n';
    return exit_config;
  }
  return run_parsed(config, out_dir);
}

int execute(const Options& options) {
  if (options.config_path.empty() == options.sweep_path.empty()) {
    std::cerr << "qwline: config error: give exactly one of --config or --sweep\n";
    return exit_config;
  }

  if (!options.config_path.empty()) {
    RunConfig config;
    try {
      config = parse_config_text(read_file(options.config_path));
      apply_overrides(config, options.tolerance_overrides, options.seed);
    } catch (const std::exception& error) {
      std::cerr << "qwline: config error: " << error.what() << '\n';
      return exit_config;
    }
    return run_parsed(config, options.out_dir);
  }

  // Sweep: a JSON array of config file paths (relative to the sweep file) or
  // inline config objects, fanned out concurrently with isolated outputs.
  std::vector<RunConfig> configs;
  std::vector<std::string> names;
  try {
    json entries = json::parse(read_file(options.sweep_path));
    if (!entries.is_array()) throw std::invalid_argument("sweep file must hold a JSON array");
    std::filesystem::path base = std::filesystem::path(options.sweep_path).parent_path();
    int index = 0;
    for (const json& entry : entries) {
      RunConfig config;
      std::string fallback = "run" + std::to_string(index);
      if (entry.is_string()) {
        std::filesystem::path path = base / entry.get<std::string>();
        config = parse_config_text(read_file(path));
        fallback = path.stem().string();
      } else {
        config = parse_config_text(entry.dump());
      }
      apply_overrides(config, options.tolerance_overrides, options.seed);
      configs.push_back(std::move(config));
      names.push_back(configs.back().name.empty() ? fallback : configs.back().name);
      ++index;
    }
  } catch (const std::exception& error) {
    std::cerr << "qwline: config error: " << error.what() << '\n';
    return exit_config;
  }

  std::vector<std::future<int>> futures;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    futures.push_back(std::async(std::launch::async, [&, i] {
      return run_parsed(configs[i], std::filesystem::path(options.out_dir) / names[i]);
    }));
  }
  int worst = exit_ok;
  for (auto& future : futures) worst = std::max(worst, future.get());
  return worst;
}

int main_entry(int argc, const char* const* argv) {
  Options options;
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
      auto need_value = [&](const char* flag) -> std::string {
        if (i + 1 >= args.size())
          throw std::invalid_argument(std::string(flag) + " needs a value");
        return args[++i];
      };
      if (args[i] == "--config") options.config_path = need_value("--config");
      else if (args[i] == "--out") options.out_dir = need_value("--out");
      else if (args[i] == "--sweep") options.sweep_path = need_value("--sweep");
      else if (args[i] == "--tol") options.tolerance_overrides.push_back(need_value("--tol"));
      else if (args[i] == "--seed")
        options.seed = static_cast<unsigned>(std::stoul(need_value("--seed")));
      else throw std::invalid_argument("unknown flag '" + args[i] + "'");
    }
  } catch (const std::exception& error) {
    std::cerr << "qwline: config error: " << error.what() << '\n';
    return exit_config;
  }
  return execute(options);
}

}  // namespace qw::cli
