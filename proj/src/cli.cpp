#include "seec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace seec::cli {
namespace {

using json = nlohmann::ordered_json;
using Consts = MathConstants<double>;

/// JSON numbers carry the same 12 significant digits as the CSV output.
double rounded(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Format parse_format(const std::string& text, std::initializer_list<Format> allowed) {
  Format f;
  if (text == "csv") {
    f = Format::csv;
  } else if (text == "json") {
    f = Format::json;
  } else if (text == "text") {
    f = Format::text;
  } else {
    throw std::invalid_argument("unknown format '" + text + "'");
  }
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw std::invalid_argument("format '" + text + "' not supported by this command");
  }
  return f;
}

void emit(const std::optional<std::string>& path, const std::string& content, std::ostream& out) {
  if (path) {
    write_atomic(*path, content);
  } else {
    out << content;
  }
}

double relative_delta(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // no "-0"
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", value);
  return buf.data();
}

std::vector<std::pair<int, int>> parse_modes(const std::string& text) {
  std::vector<std::pair<int, int>> modes;
  std::string item;
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("bad mode '" + item + "', expected n:m");
    }
    return v;
  };
  for (std::size_t start = 0; start <= text.size();) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    item = text.substr(start, comma - start);
    start = comma + 1;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad mode '" + item + "', expected n:m");
    const std::string_view view(item);
    modes.emplace_back(parse_int(view.substr(0, colon)), parse_int(view.substr(colon + 1)));
  }
  if (modes.empty()) throw std::invalid_argument("no modes given");
  return modes;
}

void validate(const SweepSpec& spec) {
  if (spec.modes.empty()) throw std::invalid_argument("sweep: no modes given");
  for (const auto& [n, m] : spec.modes) {
    if (n < 0 || m < 0 || n > kMaxQuantumNumber || m > kMaxQuantumNumber) {
      throw std::invalid_argument("sweep: mode " + std::to_string(n) + ":" + std::to_string(m) +
                                  " outside [0, " + std::to_string(kMaxQuantumNumber) + "]");
    }
  }
  if (!std::isfinite(spec.eta_min) || !std::isfinite(spec.eta_max)) {
    throw std::invalid_argument("sweep: eta bounds must be finite");
  }
  if (!(spec.eta_min < spec.eta_max)) throw std::invalid_argument("sweep: need eta-min < eta-max");
  if (spec.steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (spec.format != Format::csv && spec.format != Format::json) {
    throw std::invalid_argument("sweep: format must be csv or json");
  }
}

void validate(const GridSpec& spec) {
  if (spec.n_max < 0 || spec.m_max < 0) throw std::invalid_argument("threshold: n-max, m-max must be >= 0");
  if (spec.n_max > kMaxQuantumNumber || spec.m_max > kMaxQuantumNumber) {
    throw std::invalid_argument("threshold: n-max, m-max must be <= " +
                                std::to_string(kMaxQuantumNumber));
  }
  if (spec.format != Format::csv && spec.format != Format::json) {
    throw std::invalid_argument("threshold: format must be csv or json");
  }
}

std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<SweepRow> rows;
  rows.reserve(spec.modes.size() * static_cast<std::size_t>(spec.steps));
  const double span = spec.eta_max - spec.eta_min;
  for (const auto& [n, m] : spec.modes) {
    for (int i = 0; i < spec.steps; ++i) {
      const double eta =
          i == spec.steps - 1 ? spec.eta_max : spec.eta_min + span * i / (spec.steps - 1);
      const EntropyReport r = criterion_f(n, m, eta);
      rows.push_back({eta, n, m, r.f, r.entangled});
    }
  }
  return rows;
}

std::string render_sweep(const std::vector<SweepRow>& rows, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const SweepRow& r : rows) {
      arr.push_back({{"eta", rounded(r.eta)},
                     {"n", r.n},
                     {"m", r.m},
                     {"f", rounded(r.f)},
                     {"entangled", r.entangled}});
    }
    return dump(arr);
  }
  std::string csv = "eta,n,m,f,entangled\n";
  for (const SweepRow& r : rows) {
    csv += format_number(r.eta) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           format_number(r.f) + "," + (r.entangled ? "true" : "false") + "\n";
  }
  return csv;
}

std::string render_sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  constexpr double left = 70.0, right = 770.0, top = 30.0, bottom = 540.0;
  constexpr std::array<const char*, 8> palette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                               "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  double f_lo = 0.0, f_hi = 0.0;
  for (const SweepRow& r : rows) {
    f_lo = std::min(f_lo, r.f);
    f_hi = std::max(f_hi, r.f);
  }
  if (f_hi - f_lo < 1e-12) f_hi = f_lo + 1.0;
  auto px = [&](double eta) {
    return left + (right - left) * (eta - spec.eta_min) / (spec.eta_max - spec.eta_min);
  };
  auto py = [&](double f) { return bottom - (bottom - top) * (f - f_lo) / (f_hi - f_lo); };
  auto fixed = [](double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return std::string(buf.data());
  };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
      "height=\"600\">\n"
      "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  svg += "<line x1=\"" + fixed(left) + "\" y1=\"" + fixed(bottom) + "\" x2=\"" + fixed(right) +
         "\" y2=\"" + fixed(bottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fixed(left) + "\" y1=\"" + fixed(top) + "\" x2=\"" + fixed(left) +
         "\" y2=\"" + fixed(bottom) + "\" stroke=\"black\"/>\n";
  svg += "<line class=\"zero\" x1=\"" + fixed(left) + "\" y1=\"" + fixed(py(0.0)) + "\" x2=\"" +
         fixed(right) + "\" y2=\"" + fixed(py(0.0)) +
         "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  svg += "<text x=\"420\" y=\"585\" text-anchor=\"middle\">eta</text>\n";
  svg += "<text x=\"20\" y=\"285\" text-anchor=\"middle\">f</text>\n";
  svg += "<text x=\"" + fixed(left) + "\" y=\"560\" text-anchor=\"middle\">" +
         format_number(spec.eta_min) + "</text>\n";
  svg += "<text x=\"" + fixed(right) + "\" y=\"560\" text-anchor=\"middle\">" +
         format_number(spec.eta_max) + "</text>\n";
  svg += "<text x=\"65\" y=\"" + fixed(top + 4) + "\" text-anchor=\"end\">" + format_number(f_hi) +
         "</text>\n";
  svg += "<text x=\"65\" y=\"" + fixed(bottom + 4) + "\" text-anchor=\"end\">" +
         format_number(f_lo) + "</text>\n";

  std::size_t series = 0;
  for (const auto& [n, m] : spec.modes) {
    const char* color = palette[series % palette.size()];
    std::string points;
    for (const SweepRow& r : rows) {
      if (r.n != n || r.m != m) continue;
      if (!points.empty()) points += ' ';
      points += fixed(px(r.eta)) + "," + fixed(py(r.f));
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" points=\"" + points +
           "\"/>\n";
    svg += "<text x=\"680\" y=\"" + fixed(top + 20.0 * (series + 1)) + "\" fill=\"" +
           std::string(color) + "\">n=" + std::to_string(n) + ", m=" + std::to_string(m) +
           "</text>\n";
    ++series;
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_threshold(const GridSpec& spec) {
  validate(spec);
  if (spec.format == Format::json) {
    json arr = json::array();
    for (int n = 0; n <= spec.n_max; ++n) {
      for (int m = 0; m <= spec.m_max; ++m) {
        arr.push_back({{"n", n}, {"m", m}, {"eta0", rounded(threshold_eta0(n, m))}});
      }
    }
    return dump(arr);
  }
  std::string csv = "n,m,eta0\n";
  for (int n = 0; n <= spec.n_max; ++n) {
    for (int m = 0; m <= spec.m_max; ++m) {
      csv += std::to_string(n) + "," + std::to_string(m) + "," +
             format_number(threshold_eta0(n, m)) + "\n";
    }
  }
  return csv;
}

std::string render_criterion(const EntropyReport& r) {
  const json j{{"n", r.n},
               {"m", r.m},
               {"eta", rounded(r.eta)},
               {"H_w_minus", rounded(r.H_w_minus)},
               {"H_v_plus", rounded(r.H_v_plus)},
               {"f", rounded(r.f)},
               {"eta0", rounded(r.eta0)},
               {"entangled", r.entangled},
               {"alt_f", rounded(r.alt_f)},
               {"oracle_delta", rounded(r.oracle_delta)},
               {"closed_form_valid", r.closed_form_valid}};
  return dump(j);
}

std::string render_diagonalization(const CoupledHamiltonian<double>& h) {
  const DiagonalizedSystem<double> d = diagonalize(h);
  const Couplings<double> back = reconstruct(d);
  const double scale = std::max({std::abs(h.A), std::abs(h.B), std::abs(h.C)});
  const double err = std::max({std::abs(back.A - h.A), std::abs(back.B - h.B),
                               std::abs(back.C - h.C)}) /
                     scale;
  const json j{{"M", rounded(d.M)},
               {"K", rounded(d.K)},
               {"omega", rounded(d.omega)},
               {"eta", rounded(d.eta)},
               {"alpha_deg", rounded(d.alpha * 180.0 / Consts::pi)},
               {"degenerate_branch", d.degenerate_branch},
               {"roundtrip_error", rounded(err)}};
  return dump(j);
}

std::string render_wavefunction(const WavefunctionSpec& spec) {
  if (spec.steps < 2) throw std::invalid_argument("wavefunction: steps must be at least 2");
  if (!(spec.u_min < spec.u_max)) throw std::invalid_argument("wavefunction: need u-min < u-max");
  const ModePair mode = ModePair::make(spec.n, spec.m);
  const double span = spec.u_max - spec.u_min;
  auto grid = [&](int i) {
    return i == spec.steps - 1 ? spec.u_max : spec.u_min + span * i / (spec.steps - 1);
  };
  json arr = json::array();
  std::string csv = "u_plus,u_minus,value\n";
  for (int i = 0; i < spec.steps; ++i) {
    for (int k = 0; k < spec.steps; ++k) {
      const double up = grid(i);
      const double um = grid(k);
      const double value = wavefunction(mode, spec.eta, spec.space, up, um, spec.branch);
      if (spec.format == Format::json) {
        arr.push_back({{"u_plus", rounded(up)}, {"u_minus", rounded(um)}, {"value", rounded(value)}});
      } else {
        csv += format_number(up) + "," + format_number(um) + "," + format_number(value) + "\n";
      }
    }
  }
  return spec.format == Format::json ? dump(arr) : csv;
}

VerifyOutcome run_verify(const VerifySpec& spec) {
  if (spec.n_max < 0 || spec.n_max > 12) throw std::invalid_argument("verify: n-max must be in [0, 12]");
  if (!std::isfinite(spec.eta)) throw std::invalid_argument("verify: eta must be finite");

  constexpr double kIntegralTol = 1e-10;
  constexpr double kConvergenceTol = 1e-9;
  constexpr double kAnalyticTol = 1e-9;
  constexpr double kNormTol = 1e-8;
  constexpr double kEntropyTol = 1e-8;

  bool passed = true;
  std::ostringstream table;
  table << std::scientific << std::setprecision(3);
  json integrals = json::array();
  json normalization = json::array();
  json entropies = json::array();
  json pairing = json::array();
  json rotation = json::array();

  auto mark = [&](bool ok) {
    passed = passed && ok;
    return ok ? "ok" : "FAIL";
  };

  const auto legendre = gauss_legendre_rule<double>(kDefaultPanelOrder);
  const auto legendre_fine = gauss_legendre_rule<double>(2 * kDefaultPanelOrder);

  table << "closed-form integrals vs quadrature (relative deltas)\n"
        << "   n        dI0        dI1        dI2   dI3(conv)   dI3(V_n)   V_n path\n";
  for (int n = 0; n <= spec.n_max; ++n) {
    const HermiteOrder order(n);
    const auto gh = gauss_hermite_rule<double>(n + 2);
    const double norm2 = std::exp(ln_hermite_norm2(n));
    const double i1 = integrate_gauss_hermite(
        [&](double z) { const double h = hermite_eval(order, z); return h * h; }, gh);
    const double i2 = -integrate_gauss_hermite(
        [&](double z) { const double h = hermite_eval(order, z); return z * z * h * h; }, gh);
    // I0 is the same integral over the traced-out mode
    const double d_i0 = std::abs(i1 - norm2) / norm2;
    const double d_i1 = d_i0;
    const double d_i2 = std::abs(i2 + norm2 * (n + 0.5)) / (norm2 * (n + 0.5));
    const double conv = std::abs(entropy_integral_normalized(order, legendre) -
                                 entropy_integral_normalized(order, legendre_fine));
    const ClosedFormI3 closed = closed_form_entropy_integral(n);
    const double d_closed = relative_delta(closed.value, closed.quadrature);

    double v_delta = 0.0;
    if (n > 0) {
      const auto roots = hermite_roots<double>(order);
      for (Eigen::Index k = 0; k < roots.size(); ++k) {
        const double x = roots.roots(k);
        v_delta = std::max(v_delta, relative_delta(log_potential(order, x).value,
                                                   log_potential_numeric(order, x)));
      }
    }

    const bool ok = d_i0 <= kIntegralTol && d_i1 <= kIntegralTol && d_i2 <= kIntegralTol &&
                    conv <= kConvergenceTol;
    const char* status = mark(ok);
    const char* path = closed.valid ? "ok" : "EXPERIMENTAL";
    table << std::setw(4) << n << std::setw(11) << d_i0 << std::setw(11) << d_i1 << std::setw(11)
          << d_i2 << std::setw(12) << conv << std::setw(11) << d_closed << "   " << path
          << (ok ? "" : "   FAIL") << "\n";
    json row{{"n", n},          {"dI0", d_i0},        {"dI1", d_i1},
             {"dI2", d_i2},     {"dI3_convergence", conv}, {"dI3_closed_form", d_closed},
             {"dV_n_max", v_delta}, {"closed_form_path", path}, {"status", status}};
    if (n == 1) {
      const double analytic = 4.0 * Consts::sqrt_pi * (1.0 - Consts::euler_gamma / 2.0);
      const double d = std::abs(entropy_integral(1) - analytic);
      row["dI3_analytic"] = d;
      const bool analytic_ok = d <= kAnalyticTol;
      mark(analytic_ok);
      table << "       I3(1) vs 4 sqrt(pi)(1 - gamma/2): " << d << (analytic_ok ? "   ok" : "   FAIL")
            << "\n";
    }
    integrals.push_back(row);
  }

  table << "\nmarginal normalization residuals max |int w - 1|, |int v - 1| over eta in {0, 0.5, 1}\n";
  for (int n = 0; n <= spec.n_max; ++n) {
    for (int m = 0; m <= spec.n_max; ++m) {
      double worst = 0.0;
      for (const double eta : {0.0, 0.5, 1.0}) {
        worst = std::max(worst, std::abs(marginal_mass_numeric(Marginal::w_minus, n, m, eta) - 1.0));
        worst = std::max(worst, std::abs(marginal_mass_numeric(Marginal::v_plus, n, m, eta) - 1.0));
      }
      const bool ok = worst <= kNormTol;
      mark(ok);
      normalization.push_back({{"n", n}, {"m", m}, {"residual", worst}, {"status", ok ? "ok" : "FAIL"}});
      if (!ok) table << "  (" << n << "," << m << ") residual " << worst << "   FAIL\n";
    }
  }
  table << "  worst residual over " << normalization.size() << " pairs: ";
  double worst_norm = 0.0;
  for (const auto& row : normalization) worst_norm = std::max(worst_norm, row["residual"].get<double>());
  table << worst_norm << "\n";

  table << "\nentropies at eta = " << format_number(spec.eta) << "\n"
        << "   n   m   expanded-vs-direct  closed-form-delta  V_n path       f - alt_f   f(+45) - f(-45)\n";
  for (int n = 0; n <= spec.n_max; ++n) {
    for (int m = 0; m <= spec.n_max; ++m) {
      const EntropyReport r = criterion_f(n, m, spec.eta);
      const double direct = std::abs(r.H_w_minus - marginal_entropy_numeric(Marginal::w_minus, n, m, spec.eta)) +
                            std::abs(r.H_v_plus - marginal_entropy_numeric(Marginal::v_plus, n, m, spec.eta));
      const bool ok = direct <= kEntropyTol;
      mark(ok);
      const char* path = r.closed_form_valid ? "ok" : "EXPERIMENTAL";
      const EntropyReport minus = criterion_f(n, m, spec.eta, RotationBranch::minus45);
      table << std::setw(4) << n << std::setw(4) << m << std::setw(21) << direct << std::setw(19)
            << r.oracle_delta << "  " << std::setw(12) << std::left << path << std::right
            << std::setw(12) << (r.f - r.alt_f) << std::setw(18) << (r.f - minus.f)
            << (ok ? "" : "   FAIL") << "\n";
      entropies.push_back({{"n", n},
                           {"m", m},
                           {"eta", spec.eta},
                           {"expanded_vs_direct", direct},
                           {"closed_form_delta", r.oracle_delta},
                           {"closed_form_path", path},
                           {"status", ok ? "ok" : "FAIL"}});
      pairing.push_back({{"n", n},
                         {"m", m},
                         {"eta", spec.eta},
                         {"f", r.f},
                         {"alt_f", r.alt_f},
                         {"difference", r.f - r.alt_f}});
      rotation.push_back({{"n", n},
                          {"m", m},
                          {"eta", spec.eta},
                          {"f_plus45", r.f},
                          {"f_minus45", minus.f},
                          {"difference", r.f - minus.f}});
    }
  }
  table << "\n" << (passed ? "verify: all normative checks passed" : "verify: FAILED") << "\n";

  const json report{{"n_max", spec.n_max},
                    {"eta", spec.eta},
                    {"passed", passed},
                    {"integrals", integrals},
                    {"normalization", normalization},
                    {"entropies", entropies},
                    {"pairing", pairing},
                    {"rotation_branch", rotation}};
  return {passed, table.str(), dump(report)};
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    file << content;
    file.flush();
    if (!file) {
      file.close();
      fs::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into " + path + ": " + ec.message());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shannon entropic entanglement criterion for coupled harmonic oscillators", "seec"};
  app.require_subcommand(1);

  std::optional<std::string> out_path;
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output file (default: standard output)");
  };

  std::string format_text;

  SweepSpec sweep;
  std::string modes_text = "0:0,1:1,2:2,3:3";
  auto* sweep_cmd = app.add_subcommand("sweep", "f(eta) over a grid of eta for several modes");
  sweep_cmd->add_option("--modes", modes_text, "Modes n:m[,n:m...]");
  sweep_cmd->add_option("--eta-min", sweep.eta_min);
  sweep_cmd->add_option("--eta-max", sweep.eta_max);
  sweep_cmd->add_option("--steps", sweep.steps);
  sweep_cmd->add_option("--format", format_text, "csv|json");
  sweep_cmd->add_option("--svg", sweep.svg_path, "Also write an SVG line plot");
  add_out(sweep_cmd);

  GridSpec grid;
  auto* threshold_cmd = app.add_subcommand("threshold", "threshold eta0 for all n <= n-max, m <= m-max");
  threshold_cmd->add_option("--n-max", grid.n_max);
  threshold_cmd->add_option("--m-max", grid.m_max);
  threshold_cmd->add_option("--format", format_text, "csv|json");
  add_out(threshold_cmd);

  int n = 0, m = 0;
  double eta = 0.0;
  auto* criterion_cmd = app.add_subcommand("criterion", "entropy report for one (n, m, eta)");
  criterion_cmd->add_option("--n", n);
  criterion_cmd->add_option("--m", m);
  criterion_cmd->add_option("--eta", eta);
  add_out(criterion_cmd);

  CoupledHamiltonian<double> h{1.0, 1.0, 1.0, 1.0, 0.0};
  auto* diag_cmd = app.add_subcommand("diagonalize", "normal modes of the coupled Hamiltonian");
  diag_cmd->add_option("--m1", h.m1);
  diag_cmd->add_option("--m2", h.m2);
  diag_cmd->add_option("--A", h.A)->required();
  diag_cmd->add_option("--B", h.B)->required();
  diag_cmd->add_option("--C", h.C)->required();
  add_out(diag_cmd);

  VerifySpec verify;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check closed forms against quadrature");
  verify_cmd->add_option("--n-max", verify.n_max);
  verify_cmd->add_option("--eta", verify.eta, "eta for the entropy and pairing checks");
  verify_cmd->add_option("--format", format_text, "text|json");
  add_out(verify_cmd);

  WavefunctionSpec wave;
  std::string space_text = "position";
  double alpha_deg = 45.0;
  auto* wave_cmd = app.add_subcommand("wavefunction", "eigenfunction samples on a (u+, u-) grid");
  wave_cmd->add_option("--n", wave.n);
  wave_cmd->add_option("--m", wave.m);
  wave_cmd->add_option("--eta", wave.eta);
  wave_cmd->add_option("--space", space_text, "position|momentum");
  wave_cmd->add_option("--alpha-deg", alpha_deg, "rotation angle, 45 or -45");
  wave_cmd->add_option("--u-min", wave.u_min);
  wave_cmd->add_option("--u-max", wave.u_max);
  wave_cmd->add_option("--steps", wave.steps);
  wave_cmd->add_option("--format", format_text, "csv|json");
  add_out(wave_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) {
      sweep.modes = parse_modes(modes_text);
      sweep.format = format_text.empty() ? Format::csv : parse_format(format_text, {Format::csv, Format::json});
      sweep.out_path = out_path;
      const auto rows = evaluate_sweep(sweep);
      const std::string data = render_sweep(rows, sweep.format);
      const std::string svg = sweep.svg_path ? render_sweep_svg(sweep, rows) : std::string();
      emit(sweep.out_path, data, out);
      if (sweep.svg_path) write_atomic(*sweep.svg_path, svg);
    } else if (threshold_cmd->parsed()) {
      grid.format = format_text.empty() ? Format::csv : parse_format(format_text, {Format::csv, Format::json});
      emit(out_path, render_threshold(grid), out);
    } else if (criterion_cmd->parsed()) {
      emit(out_path, render_criterion(criterion_f(n, m, eta)), out);
    } else if (diag_cmd->parsed()) {
      emit(out_path, render_diagonalization(h), out);
    } else if (verify_cmd->parsed()) {
      verify.format = format_text.empty() ? Format::text : parse_format(format_text, {Format::text, Format::json});
      verify.out_path = out_path;
      const VerifyOutcome outcome = run_verify(verify);
      out << (verify.format == Format::json ? outcome.json : outcome.table);
      if (verify.out_path) write_atomic(*verify.out_path, outcome.json);
      if (!outcome.passed) {
        err << "verify: normative check failed\n";
        return kExitVerifyFailed;
      }
    } else if (wave_cmd->parsed()) {
      if (space_text == "position") {
        wave.space = Space::position;
      } else if (space_text == "momentum") {
        wave.space = Space::momentum;
      } else {
        throw std::invalid_argument("wavefunction: space must be position or momentum");
      }
      if (alpha_deg == 45.0) {
        wave.branch = RotationBranch::plus45;
      } else if (alpha_deg == -45.0) {
        wave.branch = RotationBranch::minus45;
      } else {
        throw UnsupportedRegime("wavefunction: only alpha = +-45 degrees is supported");
      }
      wave.format = format_text.empty() ? Format::csv : parse_format(format_text, {Format::csv, Format::json});
      wave.out_path = out_path;
      emit(wave.out_path, render_wavefunction(wave), out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace seec::cli
