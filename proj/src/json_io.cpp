#include "hartree/json_io.hpp"
#include "hartree/errors.hpp"

#include <fstream>

namespace hartree {

void to_json(json& j, const PotentialSpec& p) {
  j = {{"a", p.a}, {"m", p.m}, {"theta", p.theta}, {"lambda", p.lambda}};
}

void to_json(json& j, const SystemParams& p) {
  j = {{"mu", {p.mu[0], p.mu[1], p.mu[2]}},
       {"beta", {p.beta[0], p.beta[1], p.beta[2]}},
       {"lambda", p.lambda},
       {"potentials", {p.potentials[0], p.potentials[1], p.potentials[2]}}};
}

void from_json(const json& j, SystemParams& p) {
  try {
    const auto& mu = j.at("mu");
    const auto& beta = j.at("beta");
    if (mu.size() != 3 || beta.size() != 3) throw Error(ErrorKind::Validation, "mu and beta need three entries");
    for (int i = 0; i < 3; ++i) {
      p.mu[i] = mu.at(i).get<double>();
      p.beta[i] = beta.at(i).get<double>();
    }
    p.lambda = j.value("lambda", 1.0);
    for (int i = 0; i < 3; ++i) p.potentials[i] = PotentialSpec{0.0, 0.5, 2.0, i < 2 ? 1.0 : p.lambda};
    if (j.contains("potentials")) {
      const auto& pots = j.at("potentials");
      if (pots.size() != 3) throw Error(ErrorKind::Validation, "potentials needs three entries");
      for (int i = 0; i < 3; ++i) {
        auto& s = p.potentials[i];
        s.a = pots[i].value("a", 0.0);
        s.m = pots[i].value("m", 0.5);
        s.theta = pots[i].value("theta", 2.0);
        s.lambda = pots[i].value("lambda", s.lambda);
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, std::string("malformed parameter document: ") + e.what());
  }
}

void to_json(json& j, const PeakConfig& c) {
  j = {{"k", c.k}, {"r", c.r}, {"rho", c.rho}, {"variant", to_string(c.variant)}};
}

PeakConfig peak_config_from_json(const json& j) {
  try {
    return build_config(j.at("k").get<int>(), j.at("r").get<double>(), j.at("rho").get<double>(),
                        parse_variant(j.value("variant", std::string("PPP"))));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, std::string("malformed configuration document: ") + e.what());
  }
}

void to_json(json& j, const RadialGrid& g) { j = {{"r_max", g.r_max}, {"n_points", g.n_points}}; }

void to_json(json& j, const GroundStateStats& s) {
  j = {{"K_w", s.K_w},
       {"M_w", s.M_w},
       {"P_w", s.P_w},
       {"E_w", s.E_w},
       {"nehari_residual", s.nehari_residual},
       {"pohozaev_residual", s.pohozaev_residual},
       {"degenerate", s.degenerate}};
}

void to_json(json& j, const SyncCoefficients& s) {
  j = {{"alpha", s.alpha}, {"gamma", s.gamma}, {"system_residual", s.system_residual}};
}

void to_json(json& j, const DomainVerdict& v) {
  j = {{"member", v.member}, {"branch", to_string(v.branch)}, {"caveat", v.caveat}};
}

void to_json(json& j, const ReducedConstants& c) {
  j = {{"M_w", c.M_w},
       {"K_w", c.K_w},
       {"P_w", c.P_w},
       {"C_w", c.C_w},
       {"alpha", c.alpha},
       {"gamma", c.gamma},
       {"A0", c.A0},
       {"A_tilde", c.A_tilde},
       {"B1", c.B1},
       {"B2", c.B2},
       {"B3", c.B3},
       {"D0", c.D0},
       {"D1", c.D1},
       {"D2", c.D2},
       {"Lambda", c.Lambda},
       {"m", c.m},
       {"m_order", to_string(c.order)},
       {"d1", c.d1},
       {"d2", c.d2},
       {"f1_at_d1", c.f1_at_d1},
       {"f2_at_d2", c.f2_at_d2},
       {"valid_for_theorem", c.valid_for_theorem},
       {"notes", c.notes}};
  j["provenance"] = {
      {"M_w", "int w^2, radial trapezoid"},
      {"K_w", "int |grad w|^2, radial quadrature consistent with the solver"},
      {"P_w", "int phi_w w^2"},
      {"C_w", "M_w^2 (far field of the two-center integral)"},
      {"alpha", "solution of mu1 a^2 + b12 g^2 = 1, b12 a^2 + mu2 g^2 = 1"},
      {"gamma", "as alpha"},
      {"A0", "(1/4)(alpha^2 + gamma^2) P_w"},
      {"A_tilde", "lambda^{3/2} P_w / (4 mu3)"},
      {"B1", "(1/2) alpha^2 M_w"},
      {"B2", "(1/2) gamma^2 M_w"},
      {"B3", "(1/2) (sqrt(lambda) / mu3) M_w"},
      {"D0", "(1/4)(mu1 alpha^4 + mu2 gamma^4 + 2 b12 alpha^2 gamma^2) C_w / pi"},
      {"D1", "(1/4)(lambda / mu3) C_w / pi"},
      {"D2", "((b13 alpha^2 + b23 gamma^2) / 2)(sqrt(lambda) / mu3) C_w / pi"},
      {"Lambda", "a3 (alpha^2 + gamma^2) / (w12 sqrt(lambda)), w12 by m ordering"},
      {"d1", "(D0 / (lead12 m))^{1/(1-m)}"},
      {"d2", "(D1 / (a3 B3 m))^{1/(1-m)}"},
      {"f1_at_d1", "(1-m) lead12^{1/(1-m)} (m / D0)^{m/(1-m)}"},
      {"f2_at_d2", "(1-m) (a3 B3)^{1/(1-m)} (m / D1)^{m/(1-m)}"}};
}

void to_json(json& j, const CaseVerdict& v) {
  json dual = json::array();
  for (auto c : v.dual) dual.push_back(to_string(c));
  j = {{"theorem_case", to_string(v.theorem_case)},
       {"dual", dual},
       {"reasons", v.reasons},
       {"beta0_caveat", v.beta0_caveat}};
}

void to_json(json& j, const MaximizerResult& r) {
  j = {{"x_star", r.x_star},
       {"y_star", r.y_star},
       {"f_value", r.f_value},
       {"gradient", {r.grad_x, r.grad_y}},
       {"gradient_tolerance", 1e-8},
       {"interior_margin", r.interior_margin},
       {"starts_converged", r.starts_converged},
       {"converged", r.converged}};
}

void to_json(json& j, const PeakRadii& p) {
  j = {{"r_star", p.r_star},     {"rho_star", p.rho_star},   {"scale", p.scale},
       {"C1", p.C1},             {"C2", p.C2},               {"window", {p.window_lo, p.window_hi}},
       {"in_window", p.in_window}};
}

void to_json(json& j, const EnergyBreakdown& e) {
  j = {{"kinetic_and_potential", e.kinetic_and_potential},
       {"self_interaction", e.self_interaction},
       {"cross_12", e.cross_12},
       {"cross_13", e.cross_13},
       {"cross_23", e.cross_23},
       {"total", e.total}};
}

void to_json(json& j, const PairwiseEnergy& e) {
  j = {{"self", e.self},   {"potential", e.potential},     {"ring12", e.ring12},
       {"ring3", e.ring3}, {"cross", e.cross},             {"interaction", e.interaction()},
       {"total", e.total}, {"overlap_error_bar", e.overlap_error_bar}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Validation, path.string() + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace hartree
