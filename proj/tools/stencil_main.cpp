// stencil: command-line front end for the stencil-composition toolkit.
// Subcommands cover stencil construction and analysis, von Neumann stability,
// operator assembly, spectra/sparsity reports, and the PDE experiments.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "stencilkit/cahn_hilliard.hpp"
#include "stencilkit/experiments.hpp"
#include "stencilkit/generators.hpp"
#include "stencilkit/io.hpp"
#include "stencilkit/linalg.hpp"
#include "stencilkit/runtime.hpp"
#include "stencilkit/stability.hpp"
#include "stencilkit/taylor.hpp"

namespace sk = stencilkit;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct GridOptions {
  int dim = 2;
  int n = 0;
  double h = 1.0;
  double origin = 0.0;
  std::string bc = "periodic";

  sk::GridSpec to_spec() const {
    sk::GridSpec g;
    g.dim = dim;
    g.n.assign(static_cast<size_t>(dim), n);
    g.h = h;
    g.origin.assign(static_cast<size_t>(dim), origin);
    sk::BoundaryKind kind;
    if (bc == "periodic")
      kind = sk::BoundaryKind::periodic;
    else if (bc == "simply-supported" || bc == "simply_supported")
      kind = sk::BoundaryKind::simply_supported;
    else
      throw CLI::ValidationError("--bc", "expected 'periodic' or 'simply-supported'");
    g.bc.assign(static_cast<size_t>(dim), kind);
    g.validate();
    return g;
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& g, bool with_bc = true) {
  cmd->add_option("--dim", g.dim, "Grid dimension")->capture_default_str();
  cmd->add_option("--n", g.n, "Points per axis")->required();
  cmd->add_option("--h", g.h, "Grid spacing")->capture_default_str();
  cmd->add_option("--origin", g.origin, "Coordinate of grid index 0")->capture_default_str();
  if (with_bc)
    cmd->add_option("--bc", g.bc, "Boundary handling: periodic | simply-supported")
        ->capture_default_str();
}

sk::Stencil load_stencil(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty())
    throw CLI::ValidationError("--builtin/--stencil", "give one source, not both");
  if (!builtin.empty()) return sk::builtin_stencil(builtin);
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw sk::Error(sk::Errc::invalid_argument, "cannot read stencil file " + file);
    json j;
    in >> j;
    return sk::stencil_from_json(j);
  }
  throw CLI::ValidationError("--builtin/--stencil", "a stencil source is required");
}

void add_stencil_source(CLI::App* cmd, std::string& builtin, std::string& file) {
  std::ostringstream names;
  for (const auto& n : sk::builtin_stencil_names()) names << n << " ";
  cmd->add_option("--builtin", builtin, "Named stencil: " + names.str());
  cmd->add_option("--stencil", file, "Stencil JSON file");
}

fs::path out_path(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  return fs::path(dir) / name;
}

std::string fit_json(const sk::ConvergenceFit& fit) {
  json j;
  j["slope"] = fit.slope;
  j["coefficient"] = fit.coefficient;
  j["fit_residual"] = fit.fit_residual;
  return j.dump(2);
}

void write_fit_csv(const std::string& path, const sk::ConvergenceFit& fit) {
  std::vector<std::vector<double>> rows;
  for (const auto& [h, err] : fit.samples) rows.push_back({h, err});
  sk::write_csv(path, {"h", "error"}, rows);
}

void write_field_csv(const std::string& path, const sk::CahnHilliardState& s) {
  const auto& g = s.grid;
  std::vector<std::string> header;
  for (int a = 0; a < g.dim; ++a) header.push_back(std::string(1, static_cast<char>('x' + a)));
  header.push_back("c");
  std::vector<std::vector<double>> rows;
  rows.reserve(s.c.size());
  std::vector<int> un(static_cast<size_t>(g.dim));
  for (int a = 0; a < g.dim; ++a) un[static_cast<size_t>(a)] = g.unknowns_per_axis(a);
  for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(s.c.size()); ++idx) {
    std::vector<double> row;
    std::int64_t rem = idx;
    for (int a = 0; a < g.dim; ++a) {
      row.push_back(g.coordinate(a, static_cast<int>(rem % un[static_cast<size_t>(a)])));
      rem /= un[static_cast<size_t>(a)];
    }
    row.push_back(s.c[static_cast<size_t>(idx)]);
    rows.push_back(std::move(row));
  }
  sk::write_csv(path, header, rows);
}

void write_field_binary(const std::string& base, const sk::CahnHilliardState& s) {
  std::ofstream bin(base + ".bin", std::ios::binary);
  bin.write(reinterpret_cast<const char*>(s.c.data()),
            static_cast<std::streamsize>(s.c.size() * sizeof(double)));
  json header;
  header["dim"] = s.grid.dim;
  header["n"] = s.grid.n;
  header["h"] = s.grid.h;
  header["t"] = s.t;
  header["layout"] = "x-fastest float64";
  sk::write_text_file(base + ".json", header.dump(2) + "\n");
}

/// Flat {"option": value} or {"<subcommand>": {"option": value}} config,
/// injected as command-line tokens so unknown keys are rejected by the parser.
std::vector<std::string> config_tokens(const std::string& path, const std::string& subcommand) {
  std::vector<std::string> tokens;
  auto push_value = [&tokens](const std::string& key, const json& v) {
    if (v.is_boolean()) {
      if (v.get<bool>()) tokens.push_back("--" + key);
      return;
    }
    tokens.push_back("--" + key);
    if (v.is_array()) {
      for (const auto& item : v) tokens.push_back(item.is_string() ? item.get<std::string>() : item.dump());
    } else if (v.is_string()) {
      tokens.push_back(v.get<std::string>());
    } else {
      tokens.push_back(v.dump());
    }
  };

  std::ifstream in(path);
  if (!in) throw sk::Error(sk::Errc::invalid_argument, "cannot read config file " + path);

  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    json j;
    in >> j;
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        if (key != subcommand) continue;
        for (const auto& [k2, v2] : value.items()) push_value(k2, v2);
      } else {
        push_value(key, value);
      }
    }
    return tokens;
  }

  // minimal TOML: [section] headers plus key = value lines
  std::string line, section;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[') {
      section = line.substr(1, line.find(']') - 1);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw sk::Error(sk::Errc::invalid_argument, "config line without '=': " + line);
    if (!section.empty() && section != subcommand) continue;
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t\""));
      s.erase(s.find_last_not_of(" \t\"") + 1);
    };
    trim(key);
    trim(value);
    if (value == "true") {
      tokens.push_back("--" + key);
    } else if (value != "false") {
      tokens.push_back("--" + key);
      // arrays like [1, 2, 3]
      if (!value.empty() && value.front() == '[') {
        std::stringstream ss(value.substr(1, value.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
          trim(item);
          if (!item.empty()) tokens.push_back(item);
        }
      } else {
        tokens.push_back(value);
      }
    }
  }
  return tokens;
}

}  // namespace

int main(int argc, char** argv) {
  sk::apply_thread_cap_from_env();

  CLI::App app{"stencil: exact finite-difference stencil algebra, stability analysis, "
               "and PDE experiment harness"};
  app.require_subcommand(1);

  std::string output_dir = ".";
  std::string config_file;
  int threads = 0;
  std::uint64_t seed = 20240801;
  app.add_option("--output-dir", output_dir, "Directory for emitted artifacts")
      ->capture_default_str();
  app.add_option("--config", config_file, "JSON or TOML file with option defaults");
  app.add_option("--threads", threads, "Cap OpenMP threads (0 = leave as configured)");
  app.add_option("--seed", seed, "Seed for randomized algorithms")->capture_default_str();

  // ---- make / analyze -------------------------------------------------
  struct {
    int p = 1, q = 2;
    std::string style = "centered";
    int terms = 0;
  } mk;
  auto add_make_options = [&](CLI::App* cmd) {
    cmd->add_option("--p", mk.p, "Derivative order")->required();
    cmd->add_option("--q", mk.q, "Requested order of accuracy")->capture_default_str();
    cmd->add_option("--style", mk.style, "centered | forward | backward")->capture_default_str();
    cmd->add_option("--terms", mk.terms, "Series terms to print (0 = through the error term)");
  };
  CLI::App* cmd_make = app.add_subcommand("make", "Generate a standard stencil and report it");
  add_make_options(cmd_make);
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "Print a stencil's Taylor series and report");
  add_make_options(cmd_analyze);
  std::string an_builtin, an_file;
  add_stencil_source(cmd_analyze, an_builtin, an_file);
  cmd_analyze->get_option("--p")->required(false);

  // ---- compose ---------------------------------------------------------
  std::string comp_inner_b, comp_inner_f, comp_outer_b, comp_outer_f, comp_out;
  CLI::App* cmd_compose = app.add_subcommand("compose", "Compose two stencils and check accuracy");
  cmd_compose->add_option("--inner", comp_inner_b, "Inner stencil (builtin name)");
  cmd_compose->add_option("--inner-file", comp_inner_f, "Inner stencil JSON file");
  cmd_compose->add_option("--outer", comp_outer_b, "Outer stencil (builtin name)");
  cmd_compose->add_option("--outer-file", comp_outer_f, "Outer stencil JSON file");
  cmd_compose->add_option("--out", comp_out, "Write the composed stencil JSON here");

  // ---- stability --------------------------------------------------------
  std::string st_builtin, st_file, st_sign = "-";
  CLI::App* cmd_stab = app.add_subcommand("stability", "Forward-Euler von Neumann analysis");
  add_stencil_source(cmd_stab, st_builtin, st_file);
  cmd_stab->add_option("--sign", st_sign, "Sign of the operator in d/dt f = sign * L f: + or -")
      ->capture_default_str();

  // ---- assemble ----------------------------------------------------------
  GridOptions as_grid;
  std::string as_builtin, as_file, as_out = "operator.mtx";
  CLI::App* cmd_asm = app.add_subcommand("assemble", "Assemble a stencil into a sparse operator");
  add_stencil_source(cmd_asm, as_builtin, as_file);
  add_grid_options(cmd_asm, as_grid);
  cmd_asm->add_option("--out", as_out, "Matrix Market output filename")->capture_default_str();

  // ---- spectrum ----------------------------------------------------------
  GridOptions sp_grid;
  std::string sp_builtin, sp_file;
  double sp_shift = 0.0, sp_scale = 1.0;
  double sp_power_tol = 0.0;
  CLI::App* cmd_spec = app.add_subcommand("spectrum", "Analytic periodic spectrum (and CSV)");
  add_stencil_source(cmd_spec, sp_builtin, sp_file);
  add_grid_options(cmd_spec, sp_grid, false);
  cmd_spec->add_option("--affine-shift", sp_shift, "Report shift + scale*lambda")->capture_default_str();
  cmd_spec->add_option("--affine-scale", sp_scale, "Report shift + scale*lambda")->capture_default_str();
  cmd_spec->add_option("--power-check", sp_power_tol,
                       "Also run power iteration to this relative tolerance");

  // ---- sparsity ----------------------------------------------------------
  std::vector<double> sparsity_h = {8, 4, 2, 1, 0.5};
  double sparsity_extent = 200.0;
  CLI::App* cmd_sparse = app.add_subcommand("sparsity", "Laplacian/bi-Laplacian sparsity table");
  cmd_sparse->add_option("--h-ladder", sparsity_h, "Grid spacings")->capture_default_str();
  cmd_sparse->add_option("--extent", sparsity_extent, "Periodic domain edge length")
      ->capture_default_str();

  // ---- convergence experiments -------------------------------------------
  std::vector<double> c1_ladder, c2_ladder;
  CLI::App* cmd_c1 = app.add_subcommand("converge-1d", "Composed third-derivative convergence");
  cmd_c1->add_option("--h-ladder", c1_ladder, "Spacings (default 2^-2 .. 2^-8)");
  CLI::App* cmd_c2 = app.add_subcommand("converge-2d", "Mixed-derivative convergence");
  cmd_c2->add_option("--h-ladder", c2_ladder, "Spacings (default 1/2 1/3 1/4 1/6 1/8)");

  std::vector<int> bh_ladder = {8, 16, 32, 64};
  double bh_tol = 1e-10;
  CLI::App* cmd_bh = app.add_subcommand("biharmonic", "Simply-supported plate convergence");
  cmd_bh->add_option("--intervals", bh_ladder, "Intervals per axis")->capture_default_str();
  cmd_bh->add_option("--rel-tol", bh_tol, "Solver relative tolerance")->capture_default_str();

  // ---- cahn-hilliard -------------------------------------------------------
  sk::ChBenchmarkOptions ch;
  bool ch_binary = false;
  CLI::App* cmd_ch = app.add_subcommand("cahn-hilliard", "Spinodal decomposition benchmark");
  cmd_ch->add_option("--dim", ch.dim, "2 or 3")->capture_default_str();
  cmd_ch->add_option("--n", ch.n, "Points per axis")->capture_default_str();
  cmd_ch->add_option("--h", ch.h, "Grid spacing")->capture_default_str();
  cmd_ch->add_option("--dt", ch.dt, "Time step")->capture_default_str();
  cmd_ch->add_option("--t-end", ch.t_end, "Final time")->capture_default_str();
  cmd_ch->add_option("--order", ch.order, "IMEX order: 1 or 2")->capture_default_str();
  cmd_ch->add_option("--energy-every", ch.energy_every, "Record energy every k steps")
      ->capture_default_str();
  cmd_ch->add_option("--snapshot-every", ch.snapshot_every, "Write a field CSV every k steps");
  cmd_ch->add_flag("--binary", ch_binary, "Also dump the final field as raw float64 + JSON header");

  // ---- ch-temporal -----------------------------------------------------------
  int cht_dim = 2, cht_n = 32;
  double cht_tend = 10.0, cht_ref_dt = 1.0 / 1024.0;
  std::vector<int> cht_orders = {1, 2};
  std::vector<double> cht_ladder;
  CLI::App* cmd_cht = app.add_subcommand("ch-temporal", "IMEX temporal convergence study");
  cmd_cht->add_option("--dim", cht_dim)->capture_default_str();
  cmd_cht->add_option("--n", cht_n, "Points per axis")->capture_default_str();
  cmd_cht->add_option("--t-end", cht_tend)->capture_default_str();
  cmd_cht->add_option("--ref-dt", cht_ref_dt, "Reference time step")->capture_default_str();
  cmd_cht->add_option("--orders", cht_orders, "Scheme orders to fit")->capture_default_str();
  cmd_cht->add_option("--dt-ladder", cht_ladder, "Time steps (default 1/2 .. 1/32)");

  // config injection: re-parse with tokens spliced in after the subcommand name
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) {
        std::string sub;
        for (const auto& a : args)
          if (!a.empty() && a[0] != '-' && app.get_subcommand_no_throw(a) != nullptr) {
            sub = a;
            break;
          }
        auto tokens = config_tokens(args[i + 1], sub);
        // insert right after the subcommand so explicit flags still win
        auto pos = args.end();
        for (auto it = args.begin(); it != args.end(); ++it)
          if (*it == sub) {
            pos = it + 1;
            break;
          }
        args.insert(pos, tokens.begin(), tokens.end());
        break;
      }
    }

    std::vector<char*> cargs;
    cargs.push_back(argv[0]);
    for (auto& a : args) cargs.push_back(a.data());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (threads > 0) sk::set_thread_count(threads);

  try {
    if (cmd_make->parsed() || cmd_analyze->parsed()) {
      sk::Stencil s = [&] {
        if (cmd_analyze->parsed() && (!an_builtin.empty() || !an_file.empty()))
          return load_stencil(an_builtin, an_file);
        return sk::make({.derivative = mk.p,
                         .accuracy = mk.q,
                         .style = sk::style_from_string(mk.style)});
      }();
      sk::StencilReport rep = sk::analyze(s);
      const int terms = mk.terms > 0 ? mk.terms : rep.accuracy + 1;
      std::cout << sk::format_series(sk::expand(s, std::max(8, terms + rep.accuracy + 2)), terms)
                << "\n";
      json out;
      out["stencil"] = sk::stencil_to_json(s);
      out["report"] = sk::report_to_json(rep);
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_compose->parsed()) {
      sk::Stencil inner = load_stencil(comp_inner_b, comp_inner_f);
      sk::Stencil outer = load_stencil(comp_outer_b, comp_outer_f);
      sk::Stencil composed = sk::compose(inner, outer);
      json out;
      out["composed"] = sk::stencil_to_json(composed);
      if (inner.dim() == 1) {
        sk::AccuracyCheck chk = sk::min_accuracy_check(inner, outer);
        out["accuracy"] = {{"q_inner", chk.report_a.accuracy},
                           {"q_outer", chk.report_b.accuracy},
                           {"q_composed", chk.report_composed.accuracy},
                           {"min_rule_holds", chk.min_rule_holds},
                           {"coefficient_identity", chk.coefficient_identity}};
      }
      std::cout << out.dump(2) << "\n";
      if (!comp_out.empty())
        sk::write_text_file(out_path(output_dir, comp_out).string(),
                            sk::stencil_to_json(composed).dump(2) + "\n");
      return 0;
    }

    if (cmd_stab->parsed()) {
      sk::Stencil s = load_stencil(st_builtin, st_file);
      const int sign = st_sign == "+" ? 1 : (st_sign == "-" ? -1 : 0);
      if (sign == 0) throw sk::Error(sk::Errc::invalid_argument, "--sign must be + or -");
      sk::StabilityReport rep = sk::max_stable_dt(s, sign, {std::numbers::pi, std::numbers::pi / 2});
      std::cout << sk::stability_to_json(rep).dump(2) << "\n";
      sk::write_text_file(out_path(output_dir, "stability.json").string(),
                          sk::stability_to_json(rep).dump(2) + "\n");
      std::vector<std::vector<double>> rows;
      const int samples = 1024;
      for (int k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / samples;
        const double growth = std::abs(1.0 + rep.alpha * sign * sk::symbol(s, theta).real());
        rows.push_back({theta, growth});
      }
      sk::write_csv(out_path(output_dir, "amplification.csv").string(), {"theta", "growth"}, rows);
      return 0;
    }

    if (cmd_asm->parsed()) {
      sk::Stencil s = load_stencil(as_builtin, as_file);
      sk::CsrMatrix m = sk::assemble(s, as_grid.to_spec());
      auto [nnz, pct] = sk::sparsity_report(m);
      json out;
      out["rows"] = m.rows;
      out["nnz"] = nnz;
      out["fill_percent"] = pct;
      std::cout << out.dump(2) << "\n";
      sk::write_matrix_market(out_path(output_dir, as_out).string(), m);
      return 0;
    }

    if (cmd_spec->parsed()) {
      sk::Stencil s = load_stencil(sp_builtin, sp_file);
      sp_grid.bc = "periodic";
      sk::SpectrumReport rep = sk::periodic_spectrum(s, sp_grid.to_spec(), sp_shift, sp_scale);
      json out;
      out["spectral_radius"] = rep.spectral_radius;
      out["symbol_radius"] = rep.symbol_radius;
      out["condition_estimate"] = rep.condition_estimate;
      if (sp_power_tol > 0) {
        sk::CsrMatrix m = sk::assemble(s, sp_grid.to_spec());
        if (sp_shift != 0.0 || sp_scale != 1.0) {
          for (auto& v : m.values) v *= sp_scale;
          m = sk::identity_plus_scaled(m, 1.0);  // only shift=1 scale=dt form is exposed
        }
        out["power_iteration"] = sk::power_iteration(m, sp_power_tol, seed);
      }
      std::cout << out.dump(2) << "\n";
      sk::write_spectrum_csv(out_path(output_dir, "spectrum.csv").string(), rep);
      return 0;
    }

    if (cmd_sparse->parsed()) {
      const sk::Stencil lap = sk::laplacian(2, 2);
      const sk::Stencil bilap = sk::compose(lap, lap);
      std::vector<std::vector<double>> rows;
      printf("%8s %12s %14s %10s %14s %10s\n", "h", "size", "lap nnz", "lap %", "bilap nnz",
             "bilap %");
      for (double h : sparsity_h) {
        const int n = static_cast<int>(sparsity_extent / h);
        sk::GridSpec g = sk::make_periodic_grid(2, n, h);
        auto [nnz_l, pct_l] = sk::sparsity_report(sk::assemble(lap, g));
        auto [nnz_b, pct_b] = sk::sparsity_report(sk::assemble(bilap, g));
        printf("%8g %12lld %14lld %10g %14lld %10g\n", h,
               static_cast<long long>(g.unknown_count()), static_cast<long long>(nnz_l), pct_l,
               static_cast<long long>(nnz_b), pct_b);
        rows.push_back({h, static_cast<double>(g.unknown_count()), static_cast<double>(nnz_l),
                        pct_l, static_cast<double>(nnz_b), pct_b});
      }
      sk::write_csv(out_path(output_dir, "sparsity.csv").string(),
                    {"h", "unknowns", "laplacian_nnz", "laplacian_pct", "bilaplacian_nnz",
                     "bilaplacian_pct"},
                    rows);
      return 0;
    }

    if (cmd_c1->parsed()) {
      sk::ConvergenceFit fit = sk::converge_1d(c1_ladder);
      std::cout << fit_json(fit) << "\n";
      write_fit_csv(out_path(output_dir, "converge_1d.csv").string(), fit);
      return 0;
    }
    if (cmd_c2->parsed()) {
      sk::ConvergenceFit fit = sk::converge_2d(c2_ladder);
      std::cout << fit_json(fit) << "\n";
      write_fit_csv(out_path(output_dir, "converge_2d.csv").string(), fit);
      return 0;
    }
    if (cmd_bh->parsed()) {
      sk::BiharmonicResult res = sk::biharmonic_solve(bh_ladder, bh_tol);
      std::cout << fit_json(res.fit) << "\n";
      write_fit_csv(out_path(output_dir, "biharmonic.csv").string(), res.fit);
      return 0;
    }

    if (cmd_ch->parsed()) {
      if (ch.n == 0) ch.n = ch.dim == 2 ? 100 : 32;
      int snapshot_index = 0;
      if (ch.snapshot_every > 0)
        ch.snapshot_hook = [&](const sk::CahnHilliardState& s, int step) {
          char name[64];
          std::snprintf(name, sizeof(name), "field_%06d.csv", step);
          write_field_csv(out_path(output_dir, name).string(), s);
          ++snapshot_index;
        };
      sk::ChBenchmarkResult res = sk::ch_benchmark(ch);

      std::vector<std::vector<double>> energy_rows;
      for (const auto& [t, F] : res.state.energy_history) energy_rows.push_back({t, F});
      sk::write_csv(out_path(output_dir, "energy.csv").string(), {"t", "F"}, energy_rows);
      write_field_csv(out_path(output_dir, "field_final.csv").string(), res.state);
      if (ch_binary) write_field_binary(out_path(output_dir, "field_final").string(), res.state);

      json out;
      out["mass_initial"] = res.mass_initial;
      out["mass_final"] = res.mass_final;
      out["mass_rel_drift_max"] = res.mass_rel_drift_max;
      out["c_min"] = res.c_min;
      out["c_max"] = res.c_max;
      out["energy_monotone_after_first"] = res.energy_monotone_after_first;
      out["final_energy"] = res.state.energy_history.back().second;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_cht->parsed()) {
      auto fits = sk::ch_temporal_convergence(cht_dim, cht_orders, cht_n, cht_tend,
                                              cht_ladder, cht_ref_dt);
      json out = json::array();
      for (const auto& f : fits) {
        json j;
        j["order"] = f.order;
        j["slope"] = f.fit.slope;
        j["coefficient"] = f.fit.coefficient;
        j["fit_residual"] = f.fit.fit_residual;
        out.push_back(j);
        char name[64];
        std::snprintf(name, sizeof(name), "ch_temporal_order%d.csv", f.order);
        std::vector<std::vector<double>> rows;
        for (const auto& [dt, err] : f.fit.samples) rows.push_back({dt, err});
        sk::write_csv(out_path(output_dir, name).string(), {"dt", "error"}, rows);
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    std::cerr << "error: no subcommand handled\n";
    return 2;
  } catch (const sk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
