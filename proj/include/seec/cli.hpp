#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seec/criterion.hpp"

namespace seec::cli {

enum class Format { csv, json, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

struct SweepSpec {
  std::vector<std::pair<int, int>> modes{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  double eta_min = 0.0;
  double eta_max = 2.0;
  int steps = 201;
  Format format = Format::csv;
  std::optional<std::string> svg_path;
  std::optional<std::string> out_path;
};

struct GridSpec {
  int n_max = 5;
  int m_max = 5;
  Format format = Format::csv;
  std::optional<std::string> out_path;
};

struct WavefunctionSpec {
  int n = 0;
  int m = 0;
  double eta = 0.0;
  Space space = Space::position;
  RotationBranch branch = RotationBranch::plus45;
  double u_min = -4.0;
  double u_max = 4.0;
  int steps = 41;
  Format format = Format::csv;
  std::optional<std::string> out_path;
};

struct VerifySpec {
  int n_max = 8;
  double eta = 0.5;
  Format format = Format::text;
  std::optional<std::string> out_path;
};

struct SweepRow {
  double eta;
  int n;
  int m;
  double f;
  bool entangled;
};

/// Twelve significant digits, '.' decimal separator, locale independent.
std::string format_number(double value);

/// "n:m[,n:m...]"
std::vector<std::pair<int, int>> parse_modes(const std::string& text);

void validate(const SweepSpec& spec);
void validate(const GridSpec& spec);

std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec);
std::string render_sweep(const std::vector<SweepRow>& rows, Format format);
std::string render_sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string render_threshold(const GridSpec& spec);
std::string render_criterion(const EntropyReport& report);
std::string render_diagonalization(const CoupledHamiltonian<double>& h);
std::string render_wavefunction(const WavefunctionSpec& spec);

struct VerifyOutcome {
  bool passed;
  std::string table;
  std::string json;
};

VerifyOutcome run_verify(const VerifySpec& spec);

/// Writes to a sibling temporary file and renames it into place, so `path`
/// is either untouched or complete.
void write_atomic(const std::string& path, const std::string& content);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seec::cli
