#include "hartree/cli.hpp"
#include "hartree/configurations.hpp"
#include "hartree/errors.hpp"
#include "hartree/landscape.hpp"
#include "hartree/ring_kernel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

namespace hartree::cli {

namespace fs = std::filesystem;

namespace {

std::string model_name(RingSumModel m) { return m == RingSumModel::Exact ? "exact" : "asymptotic"; }

RingSumModel parse_model(const std::string& s) {
  if (s == "exact") return RingSumModel::Exact;
  if (s == "asymptotic") return RingSumModel::Asymptotic;
  throw Error(ErrorKind::Validation, "ring_sum_model must be 'asymptotic' or 'exact', got '" + s + "'");
}

json check(double value, double tolerance, bool pass) {
  return {{"value", value}, {"tolerance", tolerance}, {"pass", pass}};
}

json error_section(const std::exception& e) { return {{"status", "error"}, {"error", e.what()}}; }

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << text;
}

bool no_k(const RunConfig& c, std::ostream& log) {
  if (!c.ks.empty()) return false;
  log << "nothing to do: no k values given (pass --k 6,8 or set \"k\" in the config)\n";
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Context {
  RadialProfile w;
  GroundStateStats stats;
};

Context ground_state(const RunConfig& c, std::ostream& log) {
  Context ctx;
  ctx.w = cached_ground_state(c, log);
  ctx.stats = ground_state_stats(ctx.w);
  return ctx;
}

json ground_state_json(const Context& ctx) {
  const auto& s = ctx.stats;
  json j = {{"grid", ctx.w.grid}, {"stats", s}};
  j["checks"] = {{"nehari_residual", check(s.nehari_residual, 1e-4, s.nehari_residual < 1e-4)},
                 {"pohozaev_residual", check(s.pohozaev_residual, 1e-4, s.pohozaev_residual < 1e-4)},
                 {"M_over_K_minus_3", check(s.M_w / s.K_w - 3.0, 1e-3, std::abs(s.M_w / s.K_w / 3.0 - 1.0) < 1e-3)},
                 {"P_over_K_minus_4", check(s.P_w / s.K_w - 4.0, 1e-3, std::abs(s.P_w / s.K_w / 4.0 - 1.0) < 1e-3)}};
  j["tail_rate"] = ctx.w.tail_rate;
  j["tail_amplitude"] = ctx.w.tail_amplitude;
  const double rb = std::min(15.0, 0.7 * ctx.w.grid.r_max), ra = rb * 2.0 / 3.0;
  json decay = json::array();
  for (auto law : {DecayLaw::Exponential, DecayLaw::CoulombCorrected}) {
    const auto d = decay_report(ctx.w, ra, rb, law);
    decay.push_back({{"law", law == DecayLaw::Exponential ? "w r e^r" : "w r^(1 - M/2) e^r"},
                     {"window", {d.r_a, d.r_b}},
                     {"mean", d.mean},
                     {"relative_variation", d.relative_variation}});
  }
  j["decay"] = decay;
  j["warnings"] = ctx.w.warnings;
  return j;
}

ReducedConstants constants_for(const RunConfig& c, const Context& ctx) { return compute_constants(c.params, ctx.stats); }

SearchRegion region_for(const ReducedConstants& k) { return default_region(k); }

json probe_json(const RunConfig& c, long k, const PeakRadii& pr, const BumpSet& bumps) {
  auto energy = [&](double r, double rho) {
    return pairwise_energy(build_config(static_cast<int>(k), r, rho, c.variant), c.params, bumps).total;
  };
  const double e0 = energy(pr.r_star, pr.rho_star);
  json probes = json::array();
  int dominated = 0;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy) {
      if (dx == 0 && dy == 0) continue;
      const double e = energy(pr.r_star * (1.0 + 0.05 * dx), pr.rho_star * (1.0 + 0.05 * dy));
      dominated += e < e0;
      probes.push_back({{"direction", {dx, dy}}, {"energy", e}, {"dominated", e < e0}});
    }
  return {{"relative_step", 0.05}, {"energy_at_peak", e0}, {"probes", probes}, {"dominated", dominated},
          {"pass", dominated == 8}};
}

json expansion_json(const RunConfig& c, long k, const BumpSet& bumps, const ReducedConstants& rc) {
  const double r = c.r.value_or(25.0), rho = c.rho.value_or(25.0);
  check_envelope(static_cast<int>(k), c.grid, c.allow_large);
  const PeakConfig cfg = build_config(static_cast<int>(k), r, rho, c.variant);
  const AnsatzFields f = assemble_ansatz(cfg, c.params, bumps, c.grid);
  const GridInteraction gi = grid_interaction_energy(f, bumps);
  const PairwiseEnergy pw = pairwise_energy(cfg, c.params, bumps);
  const double rel = std::abs(gi.interaction - pw.interaction()) / std::abs(pw.interaction());
  const double cross_grid = gi.full.cross_13 + gi.full.cross_23;
  const double cross_pred = -static_cast<double>(k) * std::numbers::pi * rc.D2 * g_sum(r, rho, k);
  json j = {{"k", k},
            {"r", r},
            {"rho", rho},
            {"grid", {{"box_half_width", c.grid.box_half_width}, {"n_per_axis", c.grid.n_per_axis}}},
            {"grid_energy", gi.full},
            {"isolated_sum", gi.isolated_sum},
            {"grid_interaction", gi.interaction},
            {"pairwise", pw},
            {"asymptotic_energy",
             {{"asymptotic", asymptotic_energy(r, rho, k, rc, c.params, RingSumModel::Asymptotic)},
              {"exact", asymptotic_energy(r, rho, k, rc, c.params, RingSumModel::Exact)}}},
            {"interaction_relative_error", check(rel, 0.05, rel < 0.05)}};
  if (cross_pred != 0.0) {
    const double crel = std::abs(cross_grid - cross_pred) / std::abs(cross_pred);
    j["cross_term"] = {{"grid", cross_grid},
                       {"predicted", cross_pred},
                       {"relative_error", check(crel, 0.10, crel < 0.10)}};
  }
  return j;
}

}  // namespace

json to_json(const RunConfig& c) {
  json ks = c.ks;
  json j = {{"params", c.params},
            {"radial", c.radial},
            {"solver", {{"tolerance", c.solver.tolerance}, {"max_iterations", c.solver.max_iterations}}},
            {"grid", {{"box_half_width", c.grid.box_half_width}, {"n_per_axis", c.grid.n_per_axis}}},
            {"k", ks},
            {"variant", to_string(c.variant)},
            {"ring_sum_model", model_name(c.ring_model)},
            {"radius_rule", {{"C_r", c.radius_rule.C_r}, {"C_rho", c.radius_rule.C_rho}}},
            {"patch",
             {{"half_width", c.patch.half_width},
              {"n_per_axis", c.patch.n_per_axis},
              {"ball_radius", c.patch.ball_radius}}},
            {"scan_n", c.scan_n},
            {"verify_expansion", c.verify_expansion},
            {"allow_large", c.allow_large}};
  if (c.r) j["r"] = *c.r;
  if (c.rho) j["rho"] = *c.rho;
  return j;
}

RunConfig load_run_config(const fs::path& path) {
  const json j = read_json_file(path);
  RunConfig c;
  try {
    if (j.contains("params")) c.params = j.at("params").get<SystemParams>();
    if (j.contains("radial")) {
      c.radial.r_max = j["radial"].value("r_max", c.radial.r_max);
      c.radial.n_points = j["radial"].value("n_points", c.radial.n_points);
    }
    if (j.contains("solver")) {
      c.solver.tolerance = j["solver"].value("tolerance", c.solver.tolerance);
      c.solver.max_iterations = j["solver"].value("max_iterations", c.solver.max_iterations);
    }
    if (j.contains("grid")) {
      c.grid.box_half_width = j["grid"].value("box_half_width", c.grid.box_half_width);
      c.grid.n_per_axis = j["grid"].value("n_per_axis", c.grid.n_per_axis);
    }
    if (j.contains("k")) c.ks = j.at("k").get<std::vector<int>>();
    if (j.contains("variant")) c.variant = parse_variant(j.at("variant").get<std::string>());
    if (j.contains("ring_sum_model")) c.ring_model = parse_model(j.at("ring_sum_model").get<std::string>());
    if (j.contains("r")) c.r = j.at("r").get<double>();
    if (j.contains("rho")) c.rho = j.at("rho").get<double>();
    if (j.contains("radius_rule")) {
      c.radius_rule.C_r = j["radius_rule"].value("C_r", c.radius_rule.C_r);
      c.radius_rule.C_rho = j["radius_rule"].value("C_rho", c.radius_rule.C_rho);
    }
    if (j.contains("patch")) {
      c.patch.half_width = j["patch"].value("half_width", c.patch.half_width);
      c.patch.n_per_axis = j["patch"].value("n_per_axis", c.patch.n_per_axis);
      c.patch.ball_radius = j["patch"].value("ball_radius", c.patch.ball_radius);
    }
    c.scan_n = j.value("scan_n", c.scan_n);
    c.verify_expansion = j.value("verify_expansion", c.verify_expansion);
    c.allow_large = j.value("allow_large", c.allow_large);
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
    if (j.contains("cache")) c.cache_dir = j.at("cache").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, path.string() + ": " + e.what());
  }
  return c;
}

void validate(const RunConfig& c) {
  c.params.validate();
  for (int k : c.ks)
    if (k < 2) throw Error(ErrorKind::Validation, "every k must be at least 2", k);
  if (c.scan_n < 2) throw Error(ErrorKind::Validation, "scan_n must be at least 2", c.scan_n);
  if (c.r && !(*c.r > 0.0)) throw Error(ErrorKind::Validation, "r must be positive", *c.r);
  if (c.rho && !(*c.rho > 0.0)) throw Error(ErrorKind::Validation, "rho must be positive", *c.rho);
  if (!(c.radius_rule.C_r > 0.0) || !(c.radius_rule.C_rho > 0.0))
    throw Error(ErrorKind::Validation, "radius rule constants must be positive");
  try {
    c.radial.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Validation, e.what());
  }
}

RadialProfile cached_ground_state(const RunConfig& c, std::ostream& log) {
  std::ostringstream name;
  name << "w_rmax" << c.radial.r_max << "_n" << c.radial.n_points << ".csv";
  const fs::path path = c.cache_dir / name.str();
  if (fs::exists(path)) {
    try {
      RadialProfile w = read_profile_cache(path, c.radial);
      fit_tail(w);
      return w;
    } catch (const Error& e) {
      log << "warning: " << e.what() << "; re-solving ground state\n";
    }
  }
  RadialProfile w = solve_ground_state(c.radial, c.solver);
  fs::create_directories(c.cache_dir);
  write_profile_cache(w, path);
  return w;
}

int cmd_ground_state(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const Context ctx = ground_state(c, log);
  const json j = ground_state_json(ctx);
  write_json_file(j, c.out_dir / "ground_state.json");
  out << j.dump(2) << '\n';
  const bool ok = j["checks"]["nehari_residual"]["pass"].get<bool>() &&
                  j["checks"]["pohozaev_residual"]["pass"].get<bool>();
  if (!ok) log << "error: ground-state identity suite failed\n";
  return ok ? 0 : 1;
}

int cmd_constants(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const Context ctx = ground_state(c, log);
  const json j = {{"constants", constants_for(c, ctx)},
                  {"sync", sync_coefficients(c.params.mu[0], c.params.mu[1], c.params.beta[0])},
                  {"domain", domain_membership(c.params.mu[0], c.params.mu[1], c.params.beta[0])}};
  write_json_file(j, c.out_dir / "constants.json");
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_landscape(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  const Context ctx = ground_state(c, log);
  const ReducedConstants rc = constants_for(c, ctx);
  const CaseVerdict verdict = theorem_conditions(c.params, rc);
  json all = json::array();
  for (int k : c.ks) {
    const SearchRegion region = region_for(rc);
    json j = {{"k", k}, {"ring_sum_model", model_name(c.ring_model)}, {"verdict", verdict}};
    try {
      const MaximizerResult res = maximize_f(k, rc, region, c.ring_model);
      j["maximizer"] = res;
      if (res.converged) j["peak_radii"] = peak_radii(k, rc, res);
    } catch (const std::exception& e) {
      j["maximizer"] = error_section(e);
    }
    const LandscapeGrid scan = landscape_scan(k, rc, {region, c.scan_n, c.scan_n}, c.ring_model);
    std::ostringstream csv;
    csv.precision(17);
    csv << "x,y,f\n";
    for (Eigen::Index i = 0; i < scan.x.size(); ++i)
      for (Eigen::Index q = 0; q < scan.y.size(); ++q) csv << scan.x[i] << ',' << scan.y[q] << ',' << scan.f(i, q) << '\n';
    const fs::path csv_path = c.out_dir / ("landscape_k" + std::to_string(k) + ".csv");
    write_text(csv_path, csv.str());
    j["scan_csv"] = csv_path.filename().string();
    j["scan_region"] = {region.x_lo, region.x_hi, region.y_lo, region.y_hi};
    write_json_file(j, c.out_dir / ("landscape_k" + std::to_string(k) + ".json"));
    all.push_back(j);
  }
  out << all.dump(2) << '\n';
  return 0;
}

int cmd_verify_expansion(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  for (int k : c.ks) check_envelope(k, c.grid, c.allow_large);
  const Context ctx = ground_state(c, log);
  const ReducedConstants rc = constants_for(c, ctx);
  const BumpSet bumps = make_bumps(ctx.w, c.params);
  json rows = json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "k,r,rho,grid_total,isolated_sum,grid_interaction,pairwise_interaction,relative_error,cross_grid,"
         "cross_predicted\n";
  bool ok = true;
  for (int k : c.ks) {
    const json j = expansion_json(c, k, bumps, rc);
    ok = ok && j["interaction_relative_error"]["pass"].get<bool>() &&
         (!j.contains("cross_term") || j["cross_term"]["relative_error"]["pass"].get<bool>());
    csv << k << ',' << fmt(j["r"]) << ',' << fmt(j["rho"]) << ',' << fmt(j["grid_energy"]["total"]) << ','
        << fmt(j["isolated_sum"]) << ',' << fmt(j["grid_interaction"]) << ','
        << fmt(j["pairwise"]["interaction"]) << ',' << fmt(j["interaction_relative_error"]["value"]) << ','
        << (j.contains("cross_term") ? fmt(j["cross_term"]["grid"]) : "") << ','
        << (j.contains("cross_term") ? fmt(j["cross_term"]["predicted"]) : "") << '\n';
    rows.push_back(j);
  }
  write_text(c.out_dir / "verify_expansion.csv", csv.str());
  const json summary = {{"rows", rows}, {"tolerances", {{"interaction", 0.05}, {"cross_term", 0.10}}}, {"pass", ok}};
  write_json_file(summary, c.out_dir / "verify_expansion.json");
  out << summary.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_residual_scaling(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  const Context ctx = ground_state(c, log);
  const BumpSet bumps = make_bumps(ctx.w, c.params);
  const ResidualStudy st = residual_scaling_study(c.ks, c.radius_rule, c.params, bumps, c.patch, c.variant);
  std::ostringstream csv;
  csv.precision(17);
  csv << "k,r,rho,residual,under_resolved,note\n";
  json rows = json::array();
  for (const auto& r : st.rows) {
    csv << r.k << ',' << r.r << ',' << r.rho << ',' << r.residual << ',' << (r.under_resolved ? 1 : 0) << ",\""
        << r.note << "\"\n";
    rows.push_back({{"k", r.k},
                    {"r", r.r},
                    {"rho", r.rho},
                    {"residual", r.residual},
                    {"under_resolved", r.under_resolved},
                    {"note", r.note}});
  }
  write_text(c.out_dir / "residual_scaling.csv", csv.str());
  const json j = {{"rows", rows},
                  {"fitted_exponent", st.rows.size() >= 2 ? json(st.fitted_exponent) : json()},
                  {"radius_rule", {{"C_r", c.radius_rule.C_r}, {"C_rho", c.radius_rule.C_rho}}},
                  {"patch",
                   {{"half_width", c.patch.half_width},
                    {"n_per_axis", c.patch.n_per_axis},
                    {"ball_radius", c.patch.ball_radius}}},
                  {"flag_rules", {{"min_ball_radius", 8.0}, {"max_spacing", 0.5}}}};
  write_json_file(j, c.out_dir / "residual_scaling.json");
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_construct(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  for (int k : c.ks) check_envelope(k, c.grid, c.allow_large);
  const Context ctx = ground_state(c, log);
  const BumpSet bumps = make_bumps(ctx.w, c.params);
  json all = json::array();
  for (int k : c.ks) {
    const PeakConfig cfg = build_config(k, c.r.value_or(25.0), c.rho.value_or(25.0), c.variant);
    const AnsatzFields f = assemble_ansatz(cfg, c.params, bumps, c.grid);
    const std::string stem = "construct_k" + std::to_string(k) + "_" + to_string(c.variant);
    fs::create_directories(c.out_dir);
    json fields = json::object();
    const Field3D* us[3] = {&f.u1, &f.u2, &f.u3};
    const double rot[3] = {cfg.inner_rotation_sign(), cfg.inner_rotation_sign(), cfg.outer_rotation_sign()};
    const double par[3] = {1.0, 1.0, cfg.outer_x2_parity()};
    for (int i = 0; i < 3; ++i) {
      const std::string name = "u" + std::to_string(i + 1);
      write_field(*us[i], c.out_dir / (stem + "_" + name));
      const double dev = symmetry_deviation(*us[i], k, rot[i], par[i]);
      fields[name] = {{"file", stem + "_" + name + ".bin"},
                      {"max_abs", us[i]->max_abs()},
                      {"symmetry_deviation", dev},
                      {"symmetry_tolerance", 1e-3 * us[i]->max_abs()},
                      {"symmetric", dev <= 1e-3 * us[i]->max_abs()}};
    }
    const json j = {{"config", cfg}, {"fields", fields}};
    write_json_file(j, c.out_dir / (stem + ".json"));
    all.push_back(j);
  }
  out << all.dump(2) << '\n';
  return 0;
}

int cmd_report(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  const Context ctx = ground_state(c, log);
  json reports = json::array();
  bool all_ok = true;
  for (int k : c.ks) {
    json rep = {{"k", k}, {"variant", to_string(c.variant)}, {"config", to_json(c)}};
    json status = json::object();
    rep["ground_state"] = ground_state_json(ctx);
    status["ground_state"] = rep["ground_state"]["checks"]["nehari_residual"]["pass"];
    std::optional<ReducedConstants> rc;
    try {
      rc = constants_for(c, ctx);
      rep["constants"] = *rc;
      status["constants"] = true;
    } catch (const std::exception& e) {
      rep["constants"] = error_section(e);
      status["constants"] = false;
    }
    if (rc) {
      const CaseVerdict v = theorem_conditions(c.params, *rc);
      rep["verdict"] = v;
      status["verdict"] = v.theorem_case != TheoremCase::None;
      try {
        const MaximizerResult res = maximize_f(k, *rc, region_for(*rc), c.ring_model);
        rep["maximizer"] = res;
        rep["maximizer"]["ring_sum_model"] = model_name(c.ring_model);
        status["maximizer"] = res.converged;
        if (res.converged) {
          const PeakRadii pr = peak_radii(k, *rc, res);
          rep["peak_radii"] = pr;
          status["peak_radii"] = pr.in_window;
          const BumpSet bumps = make_bumps(ctx.w, c.params);
          try {
            rep["probe"] = probe_json(c, k, pr, bumps);
            status["probe"] = rep["probe"]["pass"];
          } catch (const std::exception& e) {
            rep["probe"] = error_section(e);
            status["probe"] = false;
          }
          if (c.verify_expansion) {
            try {
              rep["expansion_check"] = expansion_json(c, k, bumps, *rc);
              status["expansion_check"] = rep["expansion_check"]["interaction_relative_error"]["pass"];
            } catch (const std::exception& e) {
              rep["expansion_check"] = error_section(e);
              status["expansion_check"] = false;
            }
          }
        }
      } catch (const std::exception& e) {
        rep["maximizer"] = error_section(e);
        status["maximizer"] = false;
      }
    }
    bool ok = true;
    for (const auto& [key, val] : status.items()) ok = ok && val.get<bool>();
    status["all"] = ok;
    all_ok = all_ok && ok;
    rep["status"] = status;
    write_json_file(rep, c.out_dir / ("report_k" + std::to_string(k) + "_" + to_string(c.variant) + ".json"));
    reports.push_back(rep);
  }
  out << reports.dump(2) << '\n';
  return all_ok ? 0 : 1;
}

int cmd_ring_kernel(const RunConfig& c, double x, double y, std::ostream& out, std::ostream& log) {
  if (no_k(c, log)) return 0;
  std::ostringstream csv;
  csv.precision(17);
  csv << "k,x,y,g,lower_bound,upper_bound_distance,upper_bound_log,log_asymptote,sandwich_holds\n";
  for (int k : c.ks) {
    const RingSumReport r = ring_bounds(x, y, k);
    csv << k << ',' << x << ',' << y << ',' << r.value << ',' << r.lower_bound << ',' << r.upper_bound_distance << ','
        << r.upper_bound_log << ',' << r.log_asymptote << ',' << (r.sandwich_holds ? 1 : 0) << '\n';
  }
  write_text(c.out_dir / "ring_kernel.csv", csv.str());
  out << csv.str();
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Multi-peak ansatz construction and reduced-energy analysis for a three-component Hartree system"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, variant, ring_model, out_dir, cache_dir;
  std::vector<int> ks;
  bool allow_large = false, verify = false;
  std::optional<double> r, rho, box, r_max;
  std::optional<int> n_axis, n_radial, scan_n;
  double x = 1.0, y = 2.0;

  app.add_option("--config", config_path, "JSON run document");
  app.add_option("--k", ks, "peak counts, comma separated")->delimiter(',');
  app.add_option("--variant", variant, "PPP, AAA, PPA or AAP");
  app.add_option("--ring-model", ring_model, "asymptotic or exact same-ring sums");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--cache", cache_dir, "ground-state cache directory");
  app.add_flag("--allow-large", allow_large, "lift the k <= 8, L <= 40, n <= 192 envelope");
  app.add_option("--r", r, "inner ring radius");
  app.add_option("--rho", rho, "outer ring radius");
  app.add_option("--box", box, "3D box half width");
  app.add_option("--n", n_axis, "3D nodes per axis");
  app.add_option("--r-max", r_max, "radial grid extent");
  app.add_option("--n-radial", n_radial, "radial grid intervals");
  app.add_option("--scan-n", scan_n, "landscape scan points per axis");
  app.add_flag("--verify-expansion", verify, "report: include the grid expansion check");

  auto* gs = app.add_subcommand("ground-state", "solve (or load) w and check its identities");
  auto* cons = app.add_subcommand("constants", "print all reduced-energy constants");
  auto* land = app.add_subcommand("landscape", "theorem verdict, maximizer and landscape scan per k");
  auto* ver = app.add_subcommand("verify-expansion", "3D grid energy against the pairwise expansion");
  auto* res = app.add_subcommand("residual-scaling", "per-peak PDE residual across k");
  auto* con = app.add_subcommand("construct", "assemble the ansatz fields and dump them");
  auto* rep = app.add_subcommand("report", "composite report per (k, variant)");
  auto* ring = app.add_subcommand("ring-kernel", "ring sum and its bounds as CSV");
  ring->add_option("--x", x, "first radius");
  ring->add_option("--y", y, "second radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    RunConfig c = config_path.empty() ? RunConfig{} : load_run_config(config_path);
    if (!ks.empty()) c.ks = ks;
    if (!variant.empty()) c.variant = parse_variant(variant);
    if (!ring_model.empty()) c.ring_model = parse_model(ring_model);
    if (!out_dir.empty()) c.out_dir = out_dir;
    if (!cache_dir.empty()) c.cache_dir = cache_dir;
    if (allow_large) c.allow_large = true;
    if (verify) c.verify_expansion = true;
    if (r) c.r = r;
    if (rho) c.rho = rho;
    if (box) c.grid.box_half_width = *box;
    if (n_axis) c.grid.n_per_axis = *n_axis;
    if (r_max) c.radial.r_max = *r_max;
    if (n_radial) c.radial.n_points = *n_radial;
    if (scan_n) c.scan_n = *scan_n;
    validate(c);

    fs::create_directories(c.out_dir);
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    write_json_file({{"timestamp", stamp}, {"command", app.get_subcommands().front()->get_name()}, {"config", to_json(c)}},
                    c.out_dir / "run_info.json");

    if (gs->parsed()) return cmd_ground_state(c, std::cout, std::cerr);
    if (cons->parsed()) return cmd_constants(c, std::cout, std::cerr);
    if (land->parsed()) return cmd_landscape(c, std::cout, std::cerr);
    if (ver->parsed()) return cmd_verify_expansion(c, std::cout, std::cerr);
    if (res->parsed()) return cmd_residual_scaling(c, std::cout, std::cerr);
    if (con->parsed()) return cmd_construct(c, std::cout, std::cerr);
    if (rep->parsed()) return cmd_report(c, std::cout, std::cerr);
    if (ring->parsed()) return cmd_ring_kernel(c, x, y, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Validation ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace hartree::cli
