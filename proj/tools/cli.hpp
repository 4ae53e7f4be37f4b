#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "s2adv/metrics.hpp"
#include "s2adv/solver.hpp"

namespace s2adv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kIoError = 1,
  kUsageError = 2,
  kNumericalError = 3,
};

/// Flags shared by `run`, `converge` and the figure presets.
struct RunFlags {
  std::string ic = "smooth";
  std::string velocity = "cosine-time";
  std::string scheme = "seno3";
  std::size_t n = 128;
  double t_final = 4.0;
  double dt = 0.1;
  double substep = 1e-3;
  double speed = 1.0;
  double period = 4.0;
  int variation_samples = 16;
  std::string out = "s2adv_out";
  std::string snapshots = "all";
};

struct ConvergeFlags {
  RunFlags run;
  std::size_t n_min = 64;
  std::size_t n_max = 4096;
  std::string mask = "none";
};

/// Builds a validated solver configuration; throws std::invalid_argument.
SolverConfig resolve_config(const RunFlags& flags);

/// Snapshot CSV: header `s,x,y,z,norm`, one row per node. Digits default to
/// 17 significant and can be overridden with S2ADV_CSV_DIGITS.
void write_curve_csv(const std::filesystem::path& path, const SphereCurve& curve);

/// Error CSV: header `N,E1,order1,E2,order2`; order cells are empty on the
/// first row and wherever an order is undefined.
void write_error_csv(const std::filesystem::path& path, const ErrorReport& report);

/// Reads a snapshot CSV back into a curve (x, y, z columns).
SphereCurve read_curve_csv(const std::filesystem::path& path);

/// Runs a mesh sweep n_min, 2 n_min, ..., n_max against the global
/// Lagrangian reference solution.
ErrorReport convergence_sweep(const ConvergeFlags& flags);

/// Each command reports progress on `out` and failures on `err`, and
/// returns 0, 2 (invalid flags) or 3 (numerical domain error).
int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err);
int cmd_converge(const ConvergeFlags& flags, std::ostream& out, std::ostream& err);
int cmd_figure(const std::string& name, const std::string& out_dir, std::ostream& out,
               std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s2adv::cli
