// vpair CLI: reproduces the asymptotic-entanglement experiments as
// deterministic CSV/JSON artifacts. Time is measured in units of 1/gamma.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "vpair/asymptotics.hpp"
#include "vpair/dynamics.hpp"
#include "vpair/measures.hpp"
#include "vpair/states.hpp"

namespace {

using namespace vpair;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  double gamma = 1.0;
  double omega = 0.0;
  double t_final = 40.0;
  double dt = 1e-3;
  int samples = 0;  // per-subcommand default applied after parsing
  std::uint64_t seed = 1;
  double tol = 1e-10;
  std::string preset = "small";
  std::string state_path;
  std::string out_path;
};

std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

SystemParams params_from(const RunConfig& cfg) {
  if (cfg.preset == "large") return SystemParams::large_separation(cfg.gamma);
  return SystemParams::small_separation(cfg.omega, cfg.gamma);
}

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& subcommand,
            const RunConfig& cfg) {
    out_.open(path);
    if (!out_) throw ValidationError("cannot write output file: " + path);
    out_ << "# vpair " << subcommand << "\n";
    out_ << "# gamma=" << fmt12(cfg.gamma) << " omega=" << fmt12(cfg.omega)
         << " preset=" << cfg.preset << " t_final=" << fmt12(cfg.t_final)
         << " dt=" << fmt12(cfg.dt) << " samples=" << cfg.samples
         << " seed=" << cfg.seed << " tol=" << fmt12(cfg.tol) << "\n";
  }

  void comment(const std::string& line) { out_ << "# " << line << "\n"; }

  void columns(const std::string& names) { out_ << names << "\n"; }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ",";
      out_ << cells[i];
    }
    out_ << "\n";
  }

  void close(const std::string& path) {
    out_.flush();
    if (!out_) throw ValidationError("failed writing output file: " + path);
  }

 private:
  std::ofstream out_;
};

// counter-based stream: sample i depends only on (seed, i), so sweeps stay
// deterministic under any execution order
struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

DensityMatrix dirichlet_diagonal(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng{seed ^ (0xD1B54A32D192ED03ull * (index + 1))};
  std::array<double, kDim> d{};
  double sum = 0.0;
  for (auto& v : d) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  ComplexMatrix m(kDim, kDim);
  for (int i = 0; i < kDim; ++i) m(i, i) = d[i] / sum;
  return require_density(m);
}

const RegionBoundary& shared_region_boundary() {
  static const RegionBoundary boundary(10000);
  return boundary;
}

// --- subcommands ----------------------------------------------------------

void run_fig1(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "fig1", cfg);
  csv.comment("asymptotic negativity of cos(phi)|1_A 2_B> + sin(phi)|1_A 3_B>");
  csv.columns("phi,negativity");
  const double half_pi = std::acos(-1.0) / 2.0;
  for (int i = 0; i <= 200; ++i) {
    const double phi = half_pi * i / 200.0;
    const double n = negativity(asymptotic_state(superposition_state(phi)));
    csv.row({fmt12(phi), fmt12(n)});
  }
  csv.close(cfg.out_path);
}

void run_fig2(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "fig2", cfg);
  csv.comment("asymptotic negativity of two-state mixtures vs mixing p");
  csv.comment("columns: p | |1,2>&|1,3> | |1,1>&|1,3> | |1,3>&|2,3>");
  csv.columns("p,neg_mix_12_13,neg_mix_11_13,neg_mix_13_23");
  const std::array<std::pair<BasisIndex, BasisIndex>, 3> families = {
      std::pair{BasisIndex(1, 2), BasisIndex(1, 3)},
      std::pair{BasisIndex(1, 1), BasisIndex(1, 3)},
      std::pair{BasisIndex(1, 3), BasisIndex(2, 3)},
  };
  for (int i = 0; i <= 200; ++i) {
    const double p = i / 200.0;
    std::vector<std::string> cells = {fmt12(p)};
    for (const auto& [first, second] : families)
      cells.push_back(fmt12(
          negativity(asymptotic_state(mixture_two(first, second, p)))));
    csv.row(cells);
  }
  csv.close(cfg.out_path);
}

void append_curve_rows(CsvWriter& csv, BoundaryCurve which,
                       const std::string& name, int rows) {
  const auto [lo, hi] = boundary_curve_domain(which);
  for (int i = 0; i < rows; ++i) {
    const double s = lo + (hi - lo) * i / (rows - 1);
    const auto pt = boundary_curve(which, s);
    csv.row({name, fmt12(pt.s), fmt12(pt.linear_entropy),
             fmt12(pt.negativity)});
  }
}

void run_curves(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "curves", cfg);
  csv.comment("boundary curves of the asymptotic entropy-negativity region");
  csv.columns("curve,s,linear_entropy,negativity");
  append_curve_rows(csv, BoundaryCurve::k1, "k1", cfg.samples);
  append_curve_rows(csv, BoundaryCurve::k2, "k2", cfg.samples);
  append_curve_rows(csv, BoundaryCurve::k3, "k3", cfg.samples);
  csv.close(cfg.out_path);
}

void run_region_sample(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "region-sample", cfg);
  csv.comment("asymptotes of Dirichlet-uniform diagonal initial states");
  csv.columns("index,linear_entropy,negativity,membership,distance");
  for (int i = 0; i < cfg.samples; ++i) {
    const auto rho = dirichlet_diagonal(cfg.seed, i);
    const auto as = asymptotic_state(rho);
    const double sl = linear_entropy(as);
    const double n = negativity(as);
    const auto mem = shared_region_boundary().classify(sl, n);
    csv.row({std::to_string(i), fmt12(sl), fmt12(n),
             std::string(to_string(mem.cls)), fmt12(mem.distance)});
  }
  csv.close(cfg.out_path);
}

void run_fig3(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "fig3", cfg);
  csv.comment("series k1/k2/k3: boundary curves (param = s)");
  csv.comment("series sample: asymptotes of random diagonal states "
              "(param = index)");
  csv.columns("series,param,linear_entropy,negativity");
  const int curve_rows = 1000;
  for (auto [which, name] :
       {std::pair{BoundaryCurve::k1, "k1"}, {BoundaryCurve::k2, "k2"},
        {BoundaryCurve::k3, "k3"}}) {
    const auto [lo, hi] = boundary_curve_domain(which);
    for (int i = 0; i < curve_rows; ++i) {
      const double s = lo + (hi - lo) * i / (curve_rows - 1);
      const auto pt = boundary_curve(which, s);
      csv.row({name, fmt12(pt.s), fmt12(pt.linear_entropy),
               fmt12(pt.negativity)});
    }
  }
  for (int i = 0; i < cfg.samples; ++i) {
    const auto as = asymptotic_state(dirichlet_diagonal(cfg.seed, i));
    csv.row({"sample", std::to_string(i), fmt12(linear_entropy(as)),
             fmt12(negativity(as))});
  }
  csv.close(cfg.out_path);
}

void run_fig4(const RunConfig& cfg) {
  CsvWriter csv(cfg.out_path, "fig4", cfg);
  csv.comment("bound-entangled initial family rho_a on a = 0.01..0.99");
  csv.columns(
      "a,asymptotic_negativity,initial_realignment_negativity,"
      "initial_min_pt_eigenvalue");
  for (int i = 1; i <= 99; ++i) {
    const double a = i / 100.0;
    const auto rho = bound_entangled_state(a);
    const auto report = measure_report(rho, cfg.tol);
    const double asym_neg = negativity(asymptotic_state(rho));
    csv.row({fmt12(a), fmt12(asym_neg), fmt12(report.realignment_negativity),
             fmt12(report.min_pt_eigenvalue)});
  }
  csv.close(cfg.out_path);
}

void run_spectrum(const RunConfig& cfg) {
  const auto analysis = stationary_analysis(params_from(cfg));
  CsvWriter csv(cfg.out_path, "spectrum", cfg);
  csv.comment("kernel_dimension=" + std::to_string(analysis.kernel_dimension));
  csv.comment("spectral_abscissa=" + fmt12(analysis.spectral_abscissa));
  csv.comment("purely_imaginary_count=" +
              std::to_string(analysis.purely_imaginary.size()));
  csv.columns("index,re,im");
  for (std::size_t i = 0; i < analysis.eigenvalues.size(); ++i)
    csv.row({std::to_string(i), fmt12(analysis.eigenvalues[i].real()),
             fmt12(analysis.eigenvalues[i].imag())});
  csv.close(cfg.out_path);
}

void run_evolve(const RunConfig& cfg) {
  const auto rho0 = load_density(cfg.state_path);
  const auto result = evolve(rho0, cfg.t_final, cfg.dt, params_from(cfg));
  save_density(result.state, cfg.out_path);
}

void run_asymptotic(const RunConfig& cfg) {
  const auto rho0 = load_density(cfg.state_path);
  save_density(asymptotic_state(rho0), cfg.out_path);
}

void run_measures(const RunConfig& cfg) {
  const auto rho = load_density(cfg.state_path);
  const auto report = measure_report(rho, cfg.tol);
  nlohmann::json j;
  j["negativity"] = report.negativity;
  j["realignment_negativity"] = report.realignment_negativity;
  j["linear_entropy"] = report.linear_entropy;
  j["ppt"] = report.ppt;
  j["min_pt_eigenvalue"] = report.min_pt_eigenvalue;
  const std::string text = j.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw ValidationError("cannot write output file: " + cfg.out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dissipative dynamics and asymptotic entanglement of two "
               "V-type three-level atoms in a common vacuum"};
  app.require_subcommand(1);

  RunConfig cfg;
  struct Sub {
    CLI::App* cmd;
    std::string name;
    bool needs_state;
    int default_samples;
    std::string default_out;
  };
  std::vector<Sub> subs;

  auto add_sub = [&](const std::string& name, const std::string& desc,
                     bool needs_state, int default_samples,
                     const std::string& default_out) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--gamma", cfg.gamma, "single-atom decay rate");
    cmd->add_option("--omega", cfg.omega,
                    "dipole-dipole shift (small-separation preset)");
    cmd->add_option("--t-final", cfg.t_final, "integration time in 1/gamma");
    cmd->add_option("--dt", cfg.dt, "integrator step in 1/gamma");
    cmd->add_option("--samples", cfg.samples, "sample or row count");
    cmd->add_option("--seed", cfg.seed, "random-stream seed");
    cmd->add_option("--tol", cfg.tol, "PPT tolerance");
    cmd->add_option("--preset", cfg.preset, "coupling regime")
        ->check(CLI::IsMember({"small", "large"}));
    cmd->add_option("--state", cfg.state_path, "input density-matrix JSON");
    cmd->add_option("--out", cfg.out_path, "output path");
    subs.push_back({cmd, name, needs_state, default_samples, default_out});
  };

  add_sub("evolve", "integrate the master equation from a state file", true, 1,
          "evolved.json");
  add_sub("asymptotic", "closed-form asymptotic state of a state file", true, 1,
          "asymptotic.json");
  add_sub("measures", "entanglement and mixedness report for a state file",
          true, 1, "");
  add_sub("fig1", "asymptotic negativity of the superposition family", false,
          201, "fig1.csv");
  add_sub("fig2", "asymptotic negativity of three mixture families", false,
          201, "fig2.csv");
  add_sub("fig3", "region boundary curves plus a diagonal-state scatter",
          false, 2000, "fig3.csv");
  add_sub("fig4", "bound-entangled family: PPT check and negativities", false,
          99, "fig4.csv");
  add_sub("curves", "boundary curves k1, k2, k3", false, 1000, "curves.csv");
  add_sub("region-sample", "membership of random diagonal-state asymptotes",
          false, 2000, "region-sample.csv");
  add_sub("spectrum", "Liouvillian eigenvalues and kernel dimension", false, 1,
          "spectrum.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "vpair: " << e.what() << "\n";
    return kExitUsage;
  }

  const Sub* active = nullptr;
  for (const auto& sub : subs)
    if (sub.cmd->parsed()) active = &sub;
  if (active == nullptr) {
    std::cerr << "vpair: no subcommand\n";
    return kExitUsage;
  }

  // config validation (usage errors)
  if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) {
    std::cerr << "vpair: --gamma must be positive\n";
    return kExitUsage;
  }
  if (!std::isfinite(cfg.omega)) {
    std::cerr << "vpair: --omega must be finite\n";
    return kExitUsage;
  }
  if (!(cfg.t_final >= 0.0) || !(cfg.dt > 0.0) ||
      (cfg.t_final > 0.0 && cfg.dt >= cfg.t_final)) {
    std::cerr << "vpair: need 0 < --dt < --t-final\n";
    return kExitUsage;
  }
  if (cfg.samples == 0) cfg.samples = active->default_samples;
  if (cfg.samples < 1) {
    std::cerr << "vpair: --samples must be >= 1\n";
    return kExitUsage;
  }
  if ((active->name == "curves" || active->name == "fig3") && cfg.samples < 2) {
    std::cerr << "vpair: --samples must be >= 2 for curve output\n";
    return kExitUsage;
  }
  if (!(cfg.tol > 0.0)) {
    std::cerr << "vpair: --tol must be positive\n";
    return kExitUsage;
  }
  if (active->needs_state && cfg.state_path.empty()) {
    std::cerr << "vpair: " << active->name << " requires --state\n";
    return kExitUsage;
  }
  if (cfg.out_path.empty()) cfg.out_path = active->default_out;

  try {
    if (active->name == "evolve") run_evolve(cfg);
    else if (active->name == "asymptotic") run_asymptotic(cfg);
    else if (active->name == "measures") run_measures(cfg);
    else if (active->name == "fig1") run_fig1(cfg);
    else if (active->name == "fig2") run_fig2(cfg);
    else if (active->name == "fig3") run_fig3(cfg);
    else if (active->name == "fig4") run_fig4(cfg);
    else if (active->name == "curves") run_curves(cfg);
    else if (active->name == "region-sample") run_region_sample(cfg);
    else if (active->name == "spectrum") run_spectrum(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "vpair: " << e.what() << "\n";
    return kExitInput;
  } catch (const NumericalError& e) {
    std::cerr << "vpair: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "vpair: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
