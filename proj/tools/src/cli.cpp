#include "shuffle_spectra_cli/cli.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manifest.hpp"
#include "shuffle_spectra/chain.hpp"
#include "shuffle_spectra/errors.hpp"
#include "shuffle_spectra/mixing.hpp"
#include "shuffle_spectra/montecarlo.hpp"
#include "shuffle_spectra/spectrum.hpp"

namespace shuffle_spectra::cli {

namespace {

using nlohmann::json;

struct SpectrumArgs {
  int n = 0;
  int k = 1;
  std::string mode = "auto";
};

struct VerifyArgs {
  int n = 0;
  int k = 1;
  double tol = 1e-8;
};

struct GridArgs {
  long t_min = 0;
  std::optional<long> t_max;
  long t_step = 1;
};

struct L2CurveArgs {
  int n = 0;
  int k = 1;
  GridArgs grid;
  std::string mode = "float";
  std::optional<int> trunc_m;
  double constant_c = 0.0;
  bool skip_upper = false;
};

struct TvExactArgs {
  int n = 0;
  int k = 1;
  long t_max = 0;
  std::string mode = "float";
};

struct BoundsArgs {
  int n = 0;
  double k = 1.0;
  double gamma = 1.0;
  double c = 0.0;
  double d = 1.0;
};

struct SimulateArgs {
  int n = 0;
  int k = 1;
  std::optional<long> t;
  GridArgs grid;
  long trials = 1000;
  std::uint64_t seed = 0;
  bool floor_block = false;
};

json optional_json(const auto& value) { return value ? json(*value) : json(nullptr); }

NumericMode resolve_mode(const std::string& mode, int n, int k) {
  return mode == "auto" ? default_mode(n, k) : parse_numeric_mode(mode);
}

std::vector<long> make_grid(const GridArgs& grid) {
  if (!grid.t_max) throw DomainError("--t-max is required");
  if (grid.t_min < 0) throw DomainError("--t-min must be non-negative");
  if (grid.t_step < 1) throw DomainError("--t-step must be at least 1");
  if (*grid.t_max < grid.t_min) throw DomainError("--t-max must be at least --t-min");
  std::vector<long> out;
  for (long t = grid.t_min; t <= *grid.t_max; t += grid.t_step) out.push_back(t);
  return out;
}

void add_grid_options(CLI::App* sub, GridArgs& grid) {
  sub->add_option("--t-min", grid.t_min, "First step count")->capture_default_str();
  sub->add_option("--t-max", grid.t_max, "Last step count");
  sub->add_option("--t-step", grid.t_step, "Grid spacing")->capture_default_str();
}

json grid_json(const GridArgs& grid) {
  return {{"t_min", grid.t_min}, {"t_max", optional_json(grid.t_max)}, {"t_step", grid.t_step}};
}

void cmd_spectrum(RunContext& ctx, const SpectrumArgs& args) {
  ctx.parameters.update({{"n", args.n}, {"k", args.k}, {"mode", args.mode}});
  SpectrumOptions options;
  options.mode = resolve_mode(args.mode, args.n, args.k);
  options.with_decomposition = true;
  std::ostringstream csv;
  csv << "shape,tableau_index,eigenvalue,multiplicity,f0,f_plus\n";
  for (const auto& entry : formula_spectrum(args.n, args.k, options)) {
    csv << entry.shape.to_string() << ',' << entry.tableau_index << ',' << entry.eigenvalue.to_decimal(17) << ','
        << entry.multiplicity.get_str() << ',' << entry.f0.to_decimal(17) << ',' << entry.f_plus.to_decimal(17)
        << '\n';
  }
  write_output(ctx, "spectrum.csv", csv.str());
}

void cmd_verify(RunContext& ctx, const VerifyArgs& args) {
  ctx.parameters.update({{"n", args.n}, {"k", args.k}, {"tol", args.tol}});
  const SpectrumComparison cmp = compare_spectra(args.n, args.k, args.tol);
  json report;
  report["n"] = cmp.n;
  report["k"] = cmp.k;
  report["tol"] = cmp.tol;
  report["matched"] = cmp.matched;
  report["mismatches"] = json::array();
  for (const auto& m : cmp.mismatches) {
    report["mismatches"].push_back({{"formula", m.formula}, {"oracle", m.oracle}, {"gap", m.gap}});
  }
  report["max_abs_eig_formula"] = cmp.max_abs_eig_formula;
  report["max_abs_eig_oracle"] = cmp.max_abs_eig_oracle;
  if (args.n >= 2) {
    const double hook = first_row_hook_eig(args.n, args.n, args.k, default_mode(args.n, args.k)).to_double();
    const double claim = 1.0 - 1.0 / (args.n + 1.0);
    report["hook_claim"] = {{"eig_t_n", hook}, {"one_minus_inverse_n_plus_1", claim}, {"holds", hook > claim}};
  }
  write_output(ctx, "verify.json", report.dump(2) + "\n");
}

void cmd_l2curve(RunContext& ctx, const L2CurveArgs& args) {
  ctx.parameters.update({{"n", args.n},
                         {"k", args.k},
                         {"mode", args.mode},
                         {"trunc_m", optional_json(args.trunc_m)},
                         {"constant_c", args.constant_c},
                         {"skip_upper", args.skip_upper}});
  ctx.parameters.update(grid_json(args.grid));
  const std::vector<long> grid = make_grid(args.grid);
  const NumericMode mode = parse_numeric_mode(args.mode);

  std::optional<DistanceCurve> upper;
  if (!args.skip_upper) upper = l2_upper_sq(args.n, args.k, grid, mode);
  const DistanceCurve lower = l2_lower_sq(args.n, args.k, grid, mode);
  std::optional<BoundedUpperCurve> bounded;
  if (args.trunc_m) bounded = l2_upper_sq_bounded(args.n, args.k, grid, *args.trunc_m, args.constant_c);

  std::ostringstream csv;
  csv << 't';
  if (upper) csv << ",l2_upper_sq";
  csv << ",l2_lower_sq";
  if (bounded) csv << ",l2_upper_sq_bounded";
  csv << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv << grid[i];
    if (upper) csv << ',' << upper->rows()[i].value.to_decimal(17);
    csv << ',' << lower.rows()[i].value.to_decimal(17);
    if (bounded) csv << ',' << bounded->curve.rows()[i].value.to_decimal(17);
    csv << '\n';
  }
  write_output(ctx, "l2curve.csv", csv.str());

  if (bounded) {
    std::ostringstream strata;
    strata << "t,m,value\n";
    for (const auto& row : bounded->strata) {
      strata << row.t << ',' << (row.m == 0 ? std::string("tail") : std::to_string(row.m)) << ','
             << row.value.to_decimal(17) << '\n';
    }
    write_output(ctx, "l2curve_strata.csv", strata.str());
  }
}

void cmd_tvexact(RunContext& ctx, const TvExactArgs& args) {
  ctx.parameters.update({{"n", args.n}, {"k", args.k}, {"t_max", args.t_max}, {"mode", args.mode}});
  const DistanceCurve curve = exact_distances(args.n, args.k, args.t_max, parse_numeric_mode(args.mode));
  const auto tv = curve.channel(Channel::tv_exact);
  const auto l2 = curve.channel(Channel::l2_exact);
  std::ostringstream csv;
  csv << "t,tv,l2_sq\n";
  for (std::size_t i = 0; i < tv.size(); ++i) {
    csv << tv[i].t << ',' << tv[i].value.to_decimal(17) << ',' << l2[i].value.to_decimal(17) << '\n';
  }
  write_output(ctx, "tvexact.csv", csv.str());
}

void cmd_bounds(RunContext& ctx, const BoundsArgs& args) {
  ctx.parameters.update({{"n", args.n}, {"k", args.k}, {"gamma", args.gamma}, {"c", args.c}, {"d", args.d}});
  const ThresholdSet set = thresholds(args.n, args.k, args.gamma, args.c, args.d);
  const std::string asymptotic = args.c > 4.0 ? format_double(tv_lower_asymptotic(args.c)) : "nan";
  std::ostringstream csv;
  csv << "general_upper,gamma_upper,l2_lower_general,l2_lower_gamma,tv_lower,large_k_order,tv_lower_asymptotic\n";
  csv << format_double(set.general_upper) << ',' << format_double(set.gamma_upper) << ','
      << format_double(set.l2_lower_general) << ',' << format_double(set.l2_lower_gamma) << ','
      << format_double(set.tv_lower) << ',' << format_double(set.large_k_order) << ',' << asymptotic << '\n';
  write_output(ctx, "bounds.csv", csv.str());
}

void cmd_simulate(RunContext& ctx, const SimulateArgs& args) {
  ctx.parameters.update({{"n", args.n},
                         {"k", args.k},
                         {"t", optional_json(args.t)},
                         {"trials", args.trials},
                         {"seed", args.seed},
                         {"floor_block", args.floor_block}});
  ctx.parameters.update(grid_json(args.grid));
  const std::vector<long> grid = args.t ? std::vector<long>{*args.t} : make_grid(args.grid);
  const Rational reference = u_bn(args.n, watched_block(args.n, args.k, args.floor_block));
  const std::string reference_text = format_double(reference.get_d());

  std::ostringstream csv;
  csv << "t,estimate,stderr,exact_ubn,tv_lower\n";
  for (long t : grid) {
    SimConfig cfg;
    cfg.n = args.n;
    cfg.k = args.k;
    cfg.t = t;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.floor_block = args.floor_block;
    const Estimate est = untouched_statistic(cfg);
    csv << t << ',' << format_double(est.estimate) << ',' << format_double(est.standard_error) << ','
        << reference_text << ',' << format_double(est.estimate - reference.get_d()) << '\n';
  }
  write_output(ctx, "simulate.csv", csv.str());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum and mixing bounds for the one-sided k-transposition shuffle", "shuffle-spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_dir = "out";
  app.add_option("--out", out_dir, "Directory for output files")->capture_default_str();

  SpectrumArgs spectrum;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue of every standard Young tableau");
  spectrum_cmd->add_option("--n", spectrum.n, "Deck size")->required();
  spectrum_cmd->add_option("--k", spectrum.k, "Transpositions per step")->required();
  spectrum_cmd->add_option("--mode", spectrum.mode, "exact, float or auto")
      ->check(CLI::IsMember({"auto", "exact", "float"}))
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the formula spectrum with the matrix oracle");
  verify_cmd->add_option("--n", verify.n, "Deck size")->required();
  verify_cmd->add_option("--k", verify.k, "Transpositions per step")->required();
  verify_cmd->add_option("--tol", verify.tol, "Matching tolerance")->capture_default_str();

  L2CurveArgs l2;
  auto* l2_cmd = app.add_subcommand("l2curve", "Spectral l2 upper and lower curves");
  l2_cmd->add_option("--n", l2.n, "Deck size")->required();
  l2_cmd->add_option("--k", l2.k, "Transpositions per step")->required();
  add_grid_options(l2_cmd, l2.grid);
  l2_cmd->add_option("--mode", l2.mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  l2_cmd->add_option("--trunc-m", l2.trunc_m, "Add the stratified upper curve with strata m <= M");
  l2_cmd->add_option("--constant-c", l2.constant_c, "Constant in the small-deficit eigenvalue bound")
      ->capture_default_str();
  l2_cmd->add_flag("--skip-upper", l2.skip_upper, "Omit the full-enumeration upper curve");

  TvExactArgs tv;
  auto* tv_cmd = app.add_subcommand("tvexact", "Exact TV and l2 distances at small n");
  tv_cmd->add_option("--n", tv.n, "Deck size")->required();
  tv_cmd->add_option("--k", tv.k, "Transpositions per step")->required();
  tv_cmd->add_option("--t-max", tv.t_max, "Last step count")->required();
  tv_cmd->add_option("--mode", tv.mode, "exact or float")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Threshold times");
  bounds_cmd->add_option("--n", bounds.n, "Deck size")->required();
  bounds_cmd->add_option("--k", bounds.k, "Transpositions per step")->capture_default_str();
  bounds_cmd->add_option("--gamma", bounds.gamma, "Exponent with k = n^gamma")->capture_default_str();
  bounds_cmd->add_option("--c", bounds.c, "Window constant")->capture_default_str();
  bounds_cmd->add_option("--d", bounds.d, "Constant of the large-k order")->capture_default_str();

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Untouched-card estimate of the TV lower bound");
  sim_cmd->add_option("--n", sim.n, "Deck size")->required();
  sim_cmd->add_option("--k", sim.k, "Transpositions per step")->required();
  sim_cmd->add_option("--t", sim.t, "Single step count");
  add_grid_options(sim_cmd, sim.grid);
  sim_cmd->add_option("--trials", sim.trials, "Trials per step count")->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  sim_cmd->add_flag("--floor-block", sim.floor_block, "Watch floor(n/m) cards instead of ceil(n/m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  RunContext ctx;
  ctx.out_dir = out_dir;
  ctx.parameters["out"] = out_dir;
  try {
    if (*spectrum_cmd) {
      ctx.command = "spectrum";
      cmd_spectrum(ctx, spectrum);
    } else if (*verify_cmd) {
      ctx.command = "verify";
      cmd_verify(ctx, verify);
    } else if (*l2_cmd) {
      ctx.command = "l2curve";
      cmd_l2curve(ctx, l2);
    } else if (*tv_cmd) {
      ctx.command = "tvexact";
      cmd_tvexact(ctx, tv);
    } else if (*bounds_cmd) {
      ctx.command = "bounds";
      cmd_bounds(ctx, bounds);
    } else if (*sim_cmd) {
      ctx.command = "simulate";
      cmd_simulate(ctx, sim);
    }
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out << "wrote " << ctx.command << " outputs to " << ctx.out_dir.string() << '\n';
  return kSuccess;
}

}  // namespace shuffle_spectra::cli
