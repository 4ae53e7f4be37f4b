#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "s2adv/error.hpp"

namespace s2adv::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

const std::vector<std::string> kInitialConditions = {"smooth", "kinks", "discontinuous"};
const std::vector<std::string> kVelocities = {"constant", "cosine-space", "cosine-time"};
const std::vector<std::string> kSchemeNames = {"linear", "linear-proj", "mcubic", "mcubic-proj",
                                               "slerp",  "seno2",       "seno3"};
const std::vector<std::string> kFigures = {"smooth", "kinks", "discontinuous", "convergence-smooth",
                                           "convergence-kinks"};

int csv_digits() {
  if (const char* env = std::getenv("S2ADV_CSV_DIGITS")) {
    const int digits = std::atoi(env);
    if (digits >= 1 && digits <= 17) {
      return digits;
    }
  }
  return 17;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  file << std::setprecision(csv_digits());
  return file;
}

InitialCondition make_initial(const std::string& name) {
  if (name == "smooth") {
    return smooth_initial_condition();
  }
  if (name == "kinks") {
    return kinked_initial_condition();
  }
  if (name == "discontinuous") {
    return discontinuous_initial_condition();
  }
  throw std::invalid_argument("unknown initial condition '" + name + "'");
}

VelocityField make_velocity(const RunFlags& flags) {
  if (flags.velocity == "constant") {
    return VelocityField::constant(flags.speed);
  }
  if (flags.velocity == "cosine-space") {
    return VelocityField::reversible_cosine(flags.period, CosineMode::space);
  }
  if (flags.velocity == "cosine-time") {
    return VelocityField::reversible_cosine(flags.period, CosineMode::time);
  }
  throw std::invalid_argument("unknown velocity '" + flags.velocity + "'");
}

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

json config_json(const RunFlags& flags) {
  return {{"ic", flags.ic},           {"velocity", flags.velocity},
          {"scheme", flags.scheme},   {"n", flags.n},
          {"t_final", flags.t_final}, {"dt", flags.dt},
          {"substep", flags.substep}, {"speed", flags.speed},
          {"period", flags.period},   {"variation_samples", flags.variation_samples}};
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream s;
  s << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

class Manifest {
 public:
  explicit Manifest(fs::path dir) : dir_(std::move(dir)), start_(std::chrono::steady_clock::now()) {
    fs::create_directories(dir_);
    doc_["output_dir"] = fs::absolute(dir_).string();
    doc_["files"] = json::array();
    doc_["timings"] = json::object();
  }

  json& doc() { return doc_; }

  fs::path file(const std::string& name) {
    doc_["files"].push_back(name);
    return dir_ / name;
  }

  void time(const std::string& label, double seconds) { doc_["timings"][label] = seconds; }

  void write() {
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    doc_["timings"]["total_seconds"] = total;
    doc_["finished_at"] = timestamp();
    std::ofstream file(dir_ / "manifest.json");
    file << doc_.dump(2) << '\n';
  }

 private:
  fs::path dir_;
  std::chrono::steady_clock::time_point start_;
  json doc_;
};

std::string format_order(const std::optional<double>& order) {
  if (!order) {
    return "";
  }
  std::ostringstream s;
  s << std::setprecision(6) << *order;
  return s.str();
}

std::string format_slope(const ConvergenceSummary& summary) {
  if (!summary.slope) {
    return "excluded";
  }
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << *summary.slope;
  return s.str();
}

json summary_json(const ErrorReport& report) {
  auto one = [](const ConvergenceSummary& s) {
    json j;
    j["slope"] = s.slope ? json(*s.slope) : json(nullptr);
    j["excluded"] = s.excluded;
    return j;
  };
  return {{"l1", one(report.l1)}, {"l2", one(report.l2)}};
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

void add_run_options(CLI::App& app, RunFlags& flags, bool with_n) {
  app.add_option("--ic", flags.ic, "Initial condition")
      ->check(CLI::IsMember(kInitialConditions))
      ->capture_default_str();
  app.add_option("--velocity", flags.velocity, "Velocity field")
      ->check(CLI::IsMember(kVelocities))
      ->capture_default_str();
  app.add_option("--scheme", flags.scheme, "Interpolation scheme")
      ->check(CLI::IsMember(kSchemeNames))
      ->capture_default_str();
  if (with_n) {
    app.add_option("--n", flags.n, "Number of mesh nodes (>= 8)")->capture_default_str();
  }
  app.add_option("--tfinal", flags.t_final, "Final time")->capture_default_str();
  app.add_option("--dt", flags.dt, "Macro time step (flow map length)")->capture_default_str();
  app.add_option("--substep", flags.substep, "RK4 substep")->capture_default_str();
  app.add_option("--speed", flags.speed, "Speed of the constant velocity field")->capture_default_str();
  app.add_option("--period", flags.period, "Period T of the reversible cosine velocity")
      ->capture_default_str();
  app.add_option("--variation-samples", flags.variation_samples, "Samples per SENO variation")
      ->capture_default_str();
  app.add_option("--out", flags.out, "Output directory")->capture_default_str();
}

}  // namespace

SolverConfig resolve_config(const RunFlags& flags) {
  SolverConfig config;
  config.n = flags.n;
  config.t_final = flags.t_final;
  config.dt_macro = flags.dt;
  config.substep = flags.substep;
  config.velocity = make_velocity(flags);
  const auto scheme = parse_scheme(flags.scheme);
  if (!scheme) {
    throw std::invalid_argument("unknown scheme '" + flags.scheme + "'");
  }
  config.scheme = *scheme;
  config.initial = make_initial(flags.ic);
  config.variation_samples = flags.variation_samples;
  config.validate();
  return config;
}

void write_curve_csv(const fs::path& path, const SphereCurve& curve) {
  std::ofstream file = open_output(path);
  file << "s,x,y,z,norm\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Vec3& p = curve[i];
    file << curve.node(i) << ',' << p.x() << ',' << p.y() << ',' << p.z() << ',' << p.norm() << '\n';
  }
}

void write_error_csv(const fs::path& path, const ErrorReport& report) {
  std::ofstream file = open_output(path);
  file << "N,E1,order1,E2,order2\n";
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& row = report.rows[k];
    const auto o1 = k < report.l1.order.size() ? report.l1.order[k] : std::nullopt;
    const auto o2 = k < report.l2.order.size() ? report.l2.order[k] : std::nullopt;
    file << row.n << ',' << row.e1 << ',' << format_order(o1) << ',' << row.e2 << ','
         << format_order(o2) << '\n';
  }
}

SphereCurve read_curve_csv(const fs::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::string line;
  std::getline(file, line);
  std::vector<Vec3> points;
  while (std::getline(file, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::array<double, 5> values{};
    for (double& v : values) {
      std::getline(row, cell, ',');
      v = std::stod(cell);
    }
    points.emplace_back(values[1], values[2], values[3]);
  }
  return SphereCurve(std::move(points));
}

ErrorReport convergence_sweep(const ConvergeFlags& flags) {
  if (!is_power_of_two(flags.n_min) || !is_power_of_two(flags.n_max) || flags.n_min > flags.n_max) {
    throw std::invalid_argument("--nmin and --nmax must be powers of two with nmin <= nmax");
  }
  if (flags.mask != "none" && flags.mask != "kink") {
    throw std::invalid_argument("--mask must be 'none' or 'kink'");
  }
  ErrorReport report;
  for (std::size_t n = flags.n_min; n <= flags.n_max; n *= 2) {
    RunFlags run_flags = flags.run;
    run_flags.n = n;
    const SolverConfig config = resolve_config(run_flags);
    const Snapshot final_state = run(config, nullptr);
    const SphereCurve exact = global_solve(config);
    if (flags.mask == "kink") {
      report.rows.push_back({n, masked_error(final_state.curve, exact, default_kink_mask, ErrorNorm::l1),
                             masked_error(final_state.curve, exact, default_kink_mask, ErrorNorm::l2)});
    } else {
      report.rows.push_back({n, error_l1(final_state.curve, exact), error_l2(final_state.curve, exact)});
    }
  }
  report.finalize();
  return report;
}

int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (flags.snapshots != "all" && flags.snapshots != "final") {
      throw std::invalid_argument("--snapshots must be 'all' or 'final'");
    }
    const SolverConfig config = resolve_config(flags);
    Manifest manifest(flags.out);
    manifest.doc()["command"] = "run";
    manifest.doc()["config"] = config_json(flags);
    const bool all = flags.snapshots == "all";
    const std::size_t steps = config.step_count();
    const auto start = std::chrono::steady_clock::now();
    run(config, [&](const Snapshot& snap) {
      if (all || snap.step == steps) {
        std::ostringstream name;
        name << "snapshot_" << std::setw(4) << std::setfill('0') << snap.step << ".csv";
        write_curve_csv(manifest.file(name.str()), snap.curve);
      }
    });
    manifest.time("solve_seconds",
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    manifest.write();
    out << "wrote " << manifest.doc()["files"].size() << " snapshot(s) to " << flags.out << '\n';
    return kSuccess;
  });
}

int cmd_converge(const ConvergeFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    resolve_config(flags.run);  // validate shared flags before the sweep
    Manifest manifest(flags.run.out);
    manifest.doc()["command"] = "converge";
    manifest.doc()["config"] = config_json(flags.run);
    manifest.doc()["config"]["nmin"] = flags.n_min;
    manifest.doc()["config"]["nmax"] = flags.n_max;
    manifest.doc()["config"]["mask"] = flags.mask;
    const auto start = std::chrono::steady_clock::now();
    const ErrorReport report = convergence_sweep(flags);
    manifest.time("sweep_seconds",
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    write_error_csv(manifest.file("errors.csv"), report);
    manifest.doc()["summary"] = summary_json(report);
    manifest.write();
    out << flags.run.scheme << ": slope_l1=" << format_slope(report.l1)
        << " slope_l2=" << format_slope(report.l2) << '\n';
    return kSuccess;
  });
}

int cmd_figure(const std::string& name, const std::string& out_dir, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    RunFlags base;
    base.out = out_dir;
    bool sweep = false;
    ConvergeFlags sweep_flags;
    if (name == "smooth" || name == "convergence-smooth") {
      base.ic = "smooth";
      base.velocity = "cosine-time";
      base.n = 128;
      sweep = name == "convergence-smooth";
      sweep_flags.n_min = 64;
      sweep_flags.n_max = 4096;
    } else if (name == "kinks" || name == "convergence-kinks") {
      base.ic = "kinks";
      base.velocity = "cosine-time";
      base.n = 128;
      sweep = name == "convergence-kinks";
      sweep_flags.n_min = 128;
      sweep_flags.n_max = 2048;
      sweep_flags.mask = "kink";
    } else if (name == "discontinuous") {
      base.ic = "discontinuous";
      base.velocity = "constant";
      base.speed = 1.0;
      base.n = 512;
    } else {
      throw std::invalid_argument("unknown figure '" + name + "'");
    }

    Manifest manifest(out_dir);
    manifest.doc()["command"] = "figure";
    manifest.doc()["figure"] = name;
    manifest.doc()["config"] = config_json(base);
    const SolverConfig reference = resolve_config(base);
    write_curve_csv(manifest.file("exact.csv"), global_solve(reference));

    for (const Scheme scheme : kAllSchemes) {
      RunFlags flags = base;
      flags.scheme = std::string(scheme_name(scheme));
      const auto start = std::chrono::steady_clock::now();
      if (sweep) {
        sweep_flags.run = flags;
        const ErrorReport report = convergence_sweep(sweep_flags);
        write_error_csv(manifest.file("errors_" + flags.scheme + ".csv"), report);
        manifest.doc()["summary"][flags.scheme] = summary_json(report);
        out << flags.scheme << ": slope_l1=" << format_slope(report.l1)
            << " slope_l2=" << format_slope(report.l2) << '\n';
      } else {
        const Snapshot final_state = run(resolve_config(flags), nullptr);
        write_curve_csv(manifest.file(flags.scheme + ".csv"), final_state.curve);
      }
      manifest.time(flags.scheme,
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    manifest.write();
    out << "figure " << name << ": wrote " << manifest.doc()["files"].size() << " CSV file(s) to "
        << out_dir << '\n';
    return kSuccess;
  });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-Lagrangian advection of sphere-valued curves"};
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Run one simulation and write snapshot CSVs");
  add_run_options(*run_cmd, run_flags, true);
  run_cmd->add_option("--snapshots", run_flags.snapshots, "Snapshot cadence")
      ->check(CLI::IsMember({"all", "final"}))
      ->capture_default_str();

  ConvergeFlags converge_flags;
  auto* converge_cmd = app.add_subcommand("converge", "Mesh-refinement sweep with error table");
  add_run_options(*converge_cmd, converge_flags.run, false);
  converge_cmd->add_option("--nmin", converge_flags.n_min, "Coarsest mesh (power of two)")
      ->capture_default_str();
  converge_cmd->add_option("--nmax", converge_flags.n_max, "Finest mesh (power of two)")
      ->capture_default_str();
  converge_cmd->add_option("--mask", converge_flags.mask, "Error mask")
      ->check(CLI::IsMember({"none", "kink"}))
      ->capture_default_str();

  std::string figure_name;
  std::string figure_out = "s2adv_figure";
  auto* figure_cmd = app.add_subcommand("figure", "Reproduce the data behind a figure preset");
  figure_cmd->add_option("name", figure_name, "Preset name")->required();
  figure_cmd->add_option("--out", figure_out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (run_cmd->parsed()) {
    return cmd_run(run_flags, out, err);
  }
  if (converge_cmd->parsed()) {
    return cmd_converge(converge_flags, out, err);
  }
  if (std::find(kFigures.begin(), kFigures.end(), figure_name) == kFigures.end()) {
    err << "error: unknown figure '" << figure_name << "'\n";
    return kUsageError;
  }
  return cmd_figure(figure_name, figure_out, out, err);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  return main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace s2adv::cli
