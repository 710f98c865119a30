// Copyright 2026 The qnot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qnot/error.hpp"
#include "qnot/feasibility.hpp"
#include "qnot/io.hpp"
#include "qnot/optimizer.hpp"
#include "qnot/simulator.hpp"
#include "qnot/synthesis.hpp"

namespace qnot::cli {

namespace {

using io::json;

struct Config {
  std::string command;
  std::string input;
  std::string machine;
  std::string output;
  std::vector<double> gammas;
  std::vector<double> phases;
  std::uint64_t shots = 100000;
  std::uint64_t seed = 42;
  std::size_t resolution = 1000;
  std::string format = "json";
  std::string policy = "equal";
  double psd_tol = tol::kPsd;
};

class Emitter {
 public:
  Emitter(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void emit(const json& j, const std::string& text) const {
    const std::string body = cfg_.format == "json" ? j.dump(2) + "\n" : text;
    if (cfg_.output.empty()) {
      out_ << body;
    } else if (cfg_.format == "json") {
      io::write_json_file(cfg_.output, j);
    } else {
      std::ofstream f(cfg_.output);
      if (!f) throw Error(Errc::InvalidArgument, "cannot write " + cfg_.output);
      f << body;
    }
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
};

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

std::string gram_polar_text(const GramMatrix& g) {
  std::ostringstream os;
  os << "Gram (t_ij, theta_ij):\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < g.size(); ++j) {
      os << "(" << std::fixed << std::setprecision(6) << g.magnitude(i, j) << ", " << g.phase(i, j)
         << ")" << (j + 1 < g.size() ? "  " : "");
    }
    os << "\n";
  }
  return os.str();
}

std::string verdict_text(const char* name, const FeasibilityVerdict& v) {
  std::ostringstream os;
  os << name << ": " << (v.feasible ? "feasible" : "infeasible");
  if (v.feasible && v.witness && v.witness->kind == ProbeSpec::Kind::PhaseVector &&
      !v.witness->phases.empty()) {
    os << " phases [";
    for (std::size_t k = 0; k < v.witness->phases.size(); ++k) {
      os << (k ? ", " : "") << fmt(v.witness->phases[k]);
    }
    os << "]";
  }
  if (v.violation) {
    os << " (" << v.violation->description << ", residual " << fmt(v.violation->residual) << ")";
  }
  os << "\n";
  return os.str();
}

StateSet load_state_set(const std::string& path) {
  return io::state_set_from_json(io::read_json_file(path));
}

ProbeSpec probe_from(const Config& cfg, std::size_t n) {
  if (cfg.phases.empty()) return ProbeSpec::phase_vector(std::vector<double>(n, 0.0));
  if (cfg.phases.size() != n) {
    throw Error(Errc::InvalidProbe, "--phases needs one value per state");
  }
  return ProbeSpec::phase_vector(cfg.phases);
}

std::pair<json, std::string> check_one(const Config& cfg, const StateSet& ss) {
  const GramMatrix g = gram(ss);
  json j;
  std::string text = gram_polar_text(g);

  const FeasibilityVerdict unitary = check_perfect_unitary(ss);
  j["perfect_unitary"] = io::to_json(unitary);
  text += verdict_text("perfect (unitary only)", unitary);

  try {
    const FeasibilityVerdict probe = check_perfect_with_probe(ss);
    json pj = io::to_json(probe);
    pj["applicable"] = true;
    j["perfect_with_probe"] = pj;
    text += verdict_text("perfect (with probe)", probe);
  } catch (const Error& e) {
    if (e.code() != Errc::ZeroOverlap) throw;
    j["perfect_with_probe"] = json{{"applicable", false}, {"reason", e.what()}};
    text += std::string("perfect (with probe): inapplicable, ") + e.what() + "\n";
  }

  if (!cfg.gammas.empty()) {
    if (cfg.gammas.size() != ss.size()) {
      throw Error(Errc::InvalidGamma, "--gamma needs one value per state");
    }
    const FeasibilityVerdict prob =
        check_probabilistic(ss, EfficiencyMatrix(cfg.gammas), probe_from(cfg, ss.size()), cfg.psd_tol);
    j["probabilistic"] = io::to_json(prob);
    text += verdict_text("probabilistic", prob);
  }
  return {j, text};
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const json input = io::read_json_file(cfg.input);
  json result;
  std::string text;
  if (input.is_array()) {
    result = json::array();
    for (std::size_t k = 0; k < input.size(); ++k) {
      auto [j, t] = check_one(cfg, io::state_set_from_json(input[k]));
      result.push_back(j);
      text += "set " + std::to_string(k) + "\n" + t;
    }
  } else {
    std::tie(result, text) = check_one(cfg, io::state_set_from_json(input));
  }
  Emitter(cfg, out).emit(result, text);
  return kOk;
}

int cmd_synthesize(const Config& cfg, std::ostream& out) {
  const StateSet ss = load_state_set(cfg.input);
  json j;
  std::ostringstream text;
  if (cfg.gammas.empty()) {
    const SynthesisResult r = synthesize(ss);
    j = io::to_json(r.machine);
    j["report"] = io::to_json(r.report);
    text << "machine: system_dim " << r.machine.system_dim << ", probe_dim " << r.machine.probe_dim
         << "\nepsilon " << fmt(r.report.epsilon) << " (c " << fmt(r.report.c) << ", d_max "
         << fmt(r.report.d_max) << ")" << (r.report.perfect ? " perfect" : "") << "\n";
  } else {
    if (cfg.gammas.size() != ss.size()) {
      throw Error(Errc::InvalidGamma, "--gamma needs one value per state");
    }
    const Machine m =
        synthesize_with(ss, EfficiencyMatrix(cfg.gammas), probe_from(cfg, ss.size()), cfg.psd_tol);
    j = io::to_json(m);
    text << "machine: system_dim " << m.system_dim << ", probe_dim " << m.probe_dim << "\n";
  }
  Emitter(cfg, out).emit(j, text.str());
  return kOk;
}

int cmd_simulate(const Config& cfg, std::ostream& out) {
  if (cfg.machine.empty()) throw Error(Errc::Parse, "simulate needs --machine");
  json mj = io::read_json_file(cfg.machine);
  const Machine m = io::machine_from_json(mj.contains("machine") ? mj["machine"] : mj);
  const StateSet ss = load_state_set(cfg.input);
  if (ss.dim() != m.system_dim) {
    throw Error(Errc::DimensionMismatch, "state set and machine dimensions differ");
  }
  const SimulationReport report = verify_machine_mc(m, ss, cfg.shots, cfg.seed);
  std::ostringstream text;
  text << "mode monte_carlo, shots " << cfg.shots << ", seed " << cfg.seed << ", rng " << report.rng
       << "\n";
  for (const auto& r : report.states) {
    text << "  state " << r.index << ": p " << fmt(r.success_prob) << ", fidelity "
         << fmt(r.fidelity) << ", mc " << r.mc_success.value_or(0) << "/" << r.shots
         << (r.flagged ? "  FLAGGED " + r.note : "") << "\n";
  }
  text << (report.all_green() ? "all green\n" : "contract violated\n");
  Emitter(cfg, out).emit(io::to_json(report), text.str());
  return report.all_green() ? kOk : kVerificationFailed;
}

int cmd_gamma_max(const Config& cfg, std::ostream& out) {
  const StateSet ss = load_state_set(cfg.input);
  if (ss.size() != 3) throw Error(Errc::InvalidArgument, "gamma-max needs exactly three states");
  const GramMatrix g = gram(ss);
  const TripleBoundInput in = TripleBoundInput::from_gram(g);
  const TripleBound bound = gamma_max_triple_detail(in);
  const ProbeSpec probe = in.probe();
  const double oracle = grid_oracle_triple(g, probe, cfg.resolution);
  const double diff = bound.gamma_max - oracle;
  const double lmin = min_eigenvalue(probabilistic_residual(
      g.matrix(), EfficiencyMatrix::uniform(3, bound.gamma_max), probe.gram_matrix()));
  const bool agree = std::abs(diff) <= 1e-5;

  json j{{"gamma_max", bound.gamma_max},
         {"method", "closed_form"},
         {"oracle", oracle},
         {"difference", diff},
         {"det_root", bound.det_root},
         {"minor_root", bound.minor_root},
         {"oracle_confirmed", bound.oracle_confirmed},
         {"probe_phases", probe.phases},
         {"lambda_min_at_boundary", lmin},
         {"agree", agree}};
  std::ostringstream text;
  text << "closed form " << fmt(bound.gamma_max) << "\noracle      " << fmt(oracle)
       << "\ndifference  " << fmt(diff) << (agree ? "" : "  (disagreement)") << "\n";
  Emitter(cfg, out).emit(j, text.str());
  return agree ? kOk : kBoundDisagreement;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  const StateSet ss = load_state_set(cfg.input);
  json j;
  std::ostringstream text;
  if (ss.size() == 3 && cfg.policy == "equal") {
    const GramMatrix g = gram(ss);
    const ProbeSpec probe =
        cfg.phases.empty() ? TripleBoundInput::from_gram(g).probe() : probe_from(cfg, 3);
    const double gamma = grid_oracle_triple(g, probe, cfg.resolution);
    const double lmin = min_eigenvalue(probabilistic_residual(
        g.matrix(), EfficiencyMatrix::uniform(3, std::max(gamma, 1e-300)), probe.gram_matrix()));
    j = json{{"gamma_max", gamma},
             {"method", "bisection"},
             {"probe_phases", probe.phases},
             {"lambda_min_at_boundary", lmin}};
    text << "grid oracle gamma " << fmt(gamma) << "\n";
  } else {
    const SearchPolicy policy =
        cfg.policy == "coordinate" ? SearchPolicy::PerStateCoordinate : SearchPolicy::EqualGamma;
    const GammaSearchResult r = search_gamma(ss, policy);
    j = io::to_json(r);
    text << r.method << " search: mean gamma " << fmt(r.mean_gamma) << "\n";
  }
  Emitter(cfg, out).emit(j, text.str());
  return kOk;
}

bool malformed(Errc code) {
  switch (code) {
    case Errc::Parse:
    case Errc::NotNormalized:
    case Errc::DimensionMismatch:
    case Errc::WrongDimension:
    case Errc::InvalidArgument:
    case Errc::InvalidGamma:
    case Errc::InvalidProbe:
    case Errc::InvalidProbeGram:
    case Errc::ZeroOverlap:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Perfect and probabilistic NOT / conjugate machines"};
  app.name("qnot");
  app.add_option("command", cfg.command, "check | synthesize | simulate | gamma-max | oracle")
      ->required()
      ->check(CLI::IsMember({"check", "synthesize", "simulate", "gamma-max", "oracle"}));
  app.add_option("--input", cfg.input, "state set JSON file")->required();
  app.add_option("--machine", cfg.machine, "machine JSON file (simulate)");
  app.add_option("--gamma", cfg.gammas, "efficiencies, comma separated")->delimiter(',');
  app.add_option("--phases", cfg.phases, "probe phases in radians, comma separated")
      ->delimiter(',');
  app.add_option("--shots", cfg.shots, "Monte Carlo shots")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Monte Carlo seed");
  app.add_option("--resolution", cfg.resolution, "oracle grid resolution")
      ->check(CLI::PositiveNumber);
  app.add_option("--policy", cfg.policy, "oracle search policy")
      ->check(CLI::IsMember({"equal", "coordinate"}));
  app.add_option("--output", cfg.output, "output file (default stdout)");
  app.add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  if (const char* env = std::getenv("QNOT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0) || !std::isfinite(v)) {
      err << "qnot: QNOT_TOL must be a non-negative number\n";
      return kMalformed;
    }
    cfg.psd_tol = v;
  }

  try {
    if (cfg.command == "check") return cmd_check(cfg, out);
    if (cfg.command == "synthesize") return cmd_synthesize(cfg, out);
    if (cfg.command == "simulate") return cmd_simulate(cfg, out);
    if (cfg.command == "gamma-max") return cmd_gamma_max(cfg, out);
    return cmd_oracle(cfg, out);
  } catch (const Error& e) {
    err << "qnot: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::LinearlyDependent:
      case Errc::InfeasibleGamma:
        return kNotSynthesizable;
      case Errc::DegenerateDeterminant:
        return kDegenerateDeterminant;
      default:
        return malformed(e.code()) ? kMalformed : kInternal;
    }
  } catch (const std::exception& e) {
    err << "qnot: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace qnot::cli
