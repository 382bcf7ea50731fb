// cgrp: two ideal-gas Euler domains joined by a generator interface.
//
//   cgrp run <cfg>            simulate and dump snapshot CSVs
//   cgrp convergence <cfg>    refinement study against a synchronized
//                             per-step coupled-RP reference
//   cgrp riemann              exact two-state Riemann star state
//   cgrp couple               coupled interface star pair
//   cgrp grp                  interface time derivatives from states+slopes
//
// Exit codes: 0 success, 2 validation/usage errors, 3 numerical failures.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cgrp/config.hpp"
#include "cgrp/convergence.hpp"
#include "cgrp/coupled_grp.hpp"
#include "cgrp/csv.hpp"
#include "cgrp/driver.hpp"
#include "cgrp/errors.hpp"

namespace {

using namespace cgrp;

struct StatePairArgs {
  PrimState wl, wr;
  double gamma = 1.4;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rho-l", wl.rho, "left density")->required();
    cmd->add_option("--u-l", wl.u, "left velocity")->required();
    cmd->add_option("--p-l", wl.p, "left pressure")->required();
    cmd->add_option("--rho-r", wr.rho, "right density")->required();
    cmd->add_option("--u-r", wr.u, "right velocity")->required();
    cmd->add_option("--p-r", wr.p, "right pressure")->required();
    cmd->add_option("--gamma", gamma, "adiabatic exponent");
  }
  GasParams gas() const { return GasParams{gamma, 277.13333}; }
};

const char* wave_name(WaveType w) {
  return w == WaveType::shock ? "shock" : "rarefaction";
}

void print_kv(const char* key, double v) {
  std::printf("%-22s %.10g\n", key, v);
}

void print_wave(const char* key, WaveType w, const WaveSpeeds& s) {
  std::printf("%-22s %s (head %.10g, tail %.10g)\n", key, wave_name(w),
              s.head, s.tail);
}

int cmd_riemann(const StatePairArgs& a) {
  const RiemannSolution sol = exact_rp(a.wl, a.wr, a.gas());
  print_kv("p_star", sol.p_star);
  print_kv("u_star", sol.u_star);
  print_kv("rho_star_l", sol.rho_star_l);
  print_kv("rho_star_r", sol.rho_star_r);
  print_wave("left_wave", sol.left_wave, sol.left_speeds);
  print_wave("right_wave", sol.right_wave, sol.right_speeds);
  return 0;
}

int cmd_couple(const StatePairArgs& a, double outtake) {
  const CoupledStarState s =
      solve_coupled_rp(a.wl, a.wr, CouplingData{outtake, 0.0}, a.gas());
  std::printf("left trace   rho_bar %.10g  u_bar %.10g  p_bar %.10g\n",
              s.left_trace.rho, s.left_trace.u, s.left_trace.p);
  std::printf("right trace  rho     %.10g  u     %.10g  p     %.10g\n",
              s.right_trace.rho, s.right_trace.u, s.right_trace.p);
  print_kv("rho_right_of_contact", s.rho_right_of_contact);
  print_wave("left_wave", s.left_wave, s.left_speeds);
  print_wave("right_wave", s.right_wave, s.right_speeds);
  return 0;
}

int cmd_grp(const StatePairArgs& a, const SideSlopes& sl, const SideSlopes& sr,
            bool coupled, double outtake, double outtake_rate) {
  if (!coupled) {
    const GrpDerivatives d = solve_single_grp(a.wl, a.wr, sl, sr, a.gas());
    print_kv("drho_dt", d.d_rho_dt);
    print_kv("du_dt", d.d_u_dt);
    print_kv("dp_dt", d.d_p_dt);
    return 0;
  }
  const CoupledGrpResult r = solve_coupled_grp(
      a.wl, a.wr, sl, sr, CouplingData{outtake, outtake_rate}, a.gas());
  std::printf("left trace   drho_dt %.10g  du_dt %.10g  dp_dt %.10g\n",
              r.derivs.d_rhobar_dt, r.derivs.d_ubar_dt, r.derivs.d_pbar_dt);
  std::printf("right trace  drho_dt %.10g  du_dt %.10g  dp_dt %.10g\n",
              r.derivs.d_rho_dt, r.derivs.d_u_dt, r.derivs.d_p_dt);
  print_kv("det", r.det);
  return 0;
}

int cmd_run(const std::string& cfg_path, int level_override, bool concurrent,
            bool reference) {
  SimConfig cfg = load_config(cfg_path);
  if (level_override >= 0) cfg.level = level_override;

  DriverOptions opt;
  opt.c_cfl = cfg.c_cfl;
  opt.concurrent = concurrent;

  const OuttakeProfile outtake = make_outtake(cfg.outtake);
  const TwoDomainState init = build_state(cfg, cfg.level);
  const RunResult res =
      (reference ? run_reference : run)(init, outtake, cfg.t_end,
                                        snapshot_schedule(cfg), opt, cfg.gas);
  const std::vector<std::string> files =
      write_run_csv(cfg.output_dir, res, cfg.gas);

  std::printf("%s run, level %d: %zu snapshots -> %s\n",
              reference ? "reference" : "windowed", cfg.level, files.size(),
              cfg.output_dir.c_str());
  std::printf("interface solves       %ld\n", res.interface_solves);
  print_kv("max |psi|", res.max_psi);
  print_kv("det range min", res.min_det);
  print_kv("det range max", res.max_det);
  print_kv("mass drift (rel)", res.mass_drift);
  return 0;
}

int cmd_convergence(const std::string& cfg_path, const std::string& levels,
                    int ref_level, std::string csv_path) {
  int lo = 0, hi = 0;
  if (std::sscanf(levels.c_str(), "%d..%d", &lo, &hi) != 2)
    throw ValidationError("--levels expects a..b, got " + levels);

  const SimConfig cfg = load_config(cfg_path);
  const ConvergenceReport rep = convergence_study(cfg, lo, hi, ref_level);

  std::printf("%-6s %-14s %s\n", "level", "err", "eoc");
  for (const ConvergenceRow& r : rep.rows)
    std::printf("%-6d %-14.6g %.4g\n", r.level, r.err, r.eoc);

  if (csv_path.empty()) csv_path = cfg.output_dir + "/convergence.csv";
  namespace fs = std::filesystem;
  const fs::path parent = fs::path(csv_path).parent_path();
  if (!parent.empty()) {
    std::error_code ec;
    fs::create_directories(parent, ec);
  }
  std::ofstream out(csv_path);
  if (!out)
    throw ValidationError("cannot open " + csv_path + " for writing");
  write_convergence_csv(out, rep);
  std::printf("wrote %s\n", csv_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled gas-generator interface simulator"};
  app.require_subcommand(1);

  std::string run_cfg;
  int run_level = -1;
  bool run_concurrent = false, run_reference_mode = false;
  CLI::App* run_cmd = app.add_subcommand("run", "simulate a config");
  run_cmd->add_option("cfg", run_cfg, "config file")->required();
  run_cmd->add_option("--level", run_level, "override resolution level");
  run_cmd->add_flag("--concurrent", run_concurrent,
                    "step the domains on separate threads");
  run_cmd->add_flag("--reference", run_reference_mode,
                    "synchronized per-step coupled-RP mode");

  std::string conv_cfg, conv_levels = "3..6", conv_csv;
  int conv_ref = 8;
  CLI::App* conv_cmd = app.add_subcommand("convergence", "refinement study");
  conv_cmd->add_option("cfg", conv_cfg, "config file")->required();
  conv_cmd->add_option("--levels", conv_levels, "level range a..b");
  conv_cmd->add_option("--ref-level", conv_ref, "reference level");
  conv_cmd->add_option("--csv", conv_csv, "convergence CSV path");

  StatePairArgs rp_args;
  CLI::App* rp_cmd = app.add_subcommand("riemann", "exact Riemann star state");
  rp_args.attach(rp_cmd);

  StatePairArgs cp_args;
  double cp_outtake = 0.0;
  CLI::App* cp_cmd = app.add_subcommand("couple", "coupled star pair");
  cp_args.attach(cp_cmd);
  cp_cmd->add_option("--outtake", cp_outtake, "mass outtake E >= 0")
      ->required();

  StatePairArgs grp_args;
  SideSlopes grp_sl, grp_sr;
  bool grp_coupled = false;
  double grp_outtake = 0.0, grp_rate = 0.0;
  CLI::App* grp_cmd =
      app.add_subcommand("grp", "interface time derivatives");
  grp_args.attach(grp_cmd);
  grp_cmd->add_option("--drho-l", grp_sl.d_rho_dx, "left d rho/dx")
      ->required();
  grp_cmd->add_option("--du-l", grp_sl.d_u_dx, "left du/dx")->required();
  grp_cmd->add_option("--dp-l", grp_sl.d_p_dx, "left dp/dx")->required();
  grp_cmd->add_option("--drho-r", grp_sr.d_rho_dx, "right d rho/dx")
      ->required();
  grp_cmd->add_option("--du-r", grp_sr.d_u_dx, "right du/dx")->required();
  grp_cmd->add_option("--dp-r", grp_sr.d_p_dx, "right dp/dx")->required();
  grp_cmd->add_flag("--coupled", grp_coupled,
                    "solve the generator-coupled problem");
  grp_cmd->add_option("--outtake", grp_outtake, "mass outtake E >= 0");
  grp_cmd->add_option("--outtake-rate", grp_rate, "dE/dt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (run_cmd->parsed())
      return cmd_run(run_cfg, run_level, run_concurrent, run_reference_mode);
    if (conv_cmd->parsed())
      return cmd_convergence(conv_cfg, conv_levels, conv_ref, conv_csv);
    if (rp_cmd->parsed()) return cmd_riemann(rp_args);
    if (cp_cmd->parsed()) return cmd_couple(cp_args, cp_outtake);
    if (grp_cmd->parsed())
      return cmd_grp(grp_args, grp_sl, grp_sr, grp_coupled, grp_outtake,
                     grp_rate);
  } catch (const SolverError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.kind() == SolverError::Kind::validation ? 2 : 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
