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

#include "qnot/io.hpp"

#include <fstream>
#include <sstream>

#include "qnot/error.hpp"

namespace qnot::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) parse_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(number(x, what));
  return out;
}

CVector complex_vector(const json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of [re, im] pairs");
  CVector out;
  out.reserve(j.size());
  for (const auto& z : j) out.push_back(complex_from_json(z));
  return out;
}

json complex_array(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_error("complex numbers are written as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string_view target_name(TargetMap t) noexcept {
  return t == TargetMap::Not ? "not" : "conjugate";
}

TargetMap target_from_name(std::string_view name) {
  if (name == "not") return TargetMap::Not;
  if (name == "conjugate") return TargetMap::Conjugate;
  parse_error("target must be \"not\" or \"conjugate\", got \"" + std::string(name) + "\"");
}

json to_json(const QuditState& s) {
  return json{{"dim", s.dim()}, {"amps", complex_array(s.amps())}};
}

json to_json(const StateSet& ss) {
  json states = json::array();
  for (const auto& s : ss.states()) states.push_back(to_json(s));
  return json{{"target", target_name(ss.target())}, {"states", states}};
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(complex_array(m.row(r)));
  return rows;
}

json to_json(const Machine& m) {
  return json{{"system_dim", m.system_dim},
              {"probe_dim", m.probe_dim},
              {"target", target_name(m.target)},
              {"unitary", to_json(m.unitary)},
              {"gammas", m.gammas},
              {"phases", m.branch_phases},
              {"fill_state", complex_array(m.fill_state)}};
}

json to_json(const SynthesisReport& r) {
  return json{{"epsilon", r.epsilon},
              {"c", r.c},
              {"d_max", r.d_max},
              {"c_matrix", to_json(r.c_matrix)},
              {"gram_residual", r.gram_residual},
              {"perfect", r.perfect}};
}

json to_json(const FeasibilityVerdict& v) {
  json out{{"feasible", v.feasible}};
  if (v.witness && v.witness->kind == ProbeSpec::Kind::PhaseVector) {
    out["witness_phases"] = v.witness->phases;
  } else {
    out["witness_phases"] = json::array();
  }
  if (v.violation) {
    out["violation"] = json{{"indices", v.violation->indices},
                            {"residual", v.violation->residual},
                            {"description", v.violation->description}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

json to_json(const SimulationReport& r) {
  json states = json::array();
  for (const auto& s : r.states) {
    json rec{{"i", s.index},
             {"p", s.success_prob},
             {"failure", s.failure_prob},
             {"fidelity", s.fidelity},
             {"global_phase", s.global_phase},
             {"flagged", s.flagged}};
    rec["mc_success"] = s.mc_success ? json(*s.mc_success) : json(nullptr);
    if (!s.note.empty()) rec["note"] = s.note;
    states.push_back(std::move(rec));
  }
  json out{{"mode", r.mode == SimulationMode::Exact ? "exact" : "monte_carlo"},
           {"states", states},
           {"all_green", r.all_green()}};
  if (r.mode == SimulationMode::MonteCarlo) {
    out["seed"] = r.seed;
    out["shots"] = r.shots;
    out["rng"] = r.rng;
  } else {
    out["seed"] = nullptr;
  }
  return out;
}

json to_json(const GammaSearchResult& r) {
  return json{{"gamma_max", r.mean_gamma},
              {"gammas", r.gammas.values()},
              {"method", r.method},
              {"probe_phases", r.probe.phases},
              {"iterations", r.iterations},
              {"lambda_min_at_boundary", r.boundary_lambda_min}};
}

QuditState state_from_json(const json& j) {
  const std::size_t dim = count(field(j, "dim"), "dim");
  CVector amps = complex_vector(field(j, "amps"), "amps");
  if (amps.size() != dim) {
    std::ostringstream os;
    os << "dim is " << dim << " but " << amps.size() << " amplitudes were given";
    throw Error(Errc::DimensionMismatch, os.str());
  }
  return QuditState(std::move(amps));
}

StateSet state_set_from_json(const json& j) {
  const json& target = field(j, "target");
  if (!target.is_string()) parse_error("target must be a string");
  const json& states = field(j, "states");
  if (!states.is_array()) parse_error("states must be an array");
  std::vector<QuditState> parsed;
  parsed.reserve(states.size());
  for (const auto& s : states) parsed.push_back(state_from_json(s));
  return StateSet(std::move(parsed), target_from_name(target.get<std::string>()));
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) parse_error("matrices are arrays of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const CVector row = complex_vector(j[r], "matrix row");
    if (row.size() != cols) parse_error("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Machine machine_from_json(const json& j) {
  Machine m;
  m.system_dim = count(field(j, "system_dim"), "system_dim");
  m.probe_dim = count(field(j, "probe_dim"), "probe_dim");
  const json& target = field(j, "target");
  if (!target.is_string()) parse_error("target must be a string");
  m.target = target_from_name(target.get<std::string>());
  m.unitary = matrix_from_json(field(j, "unitary"));
  m.gammas = numbers(field(j, "gammas"), "gammas");
  m.branch_phases = numbers(field(j, "phases"), "phases");
  if (j.contains("fill_state")) m.fill_state = complex_vector(j["fill_state"], "fill_state");
  if (m.unitary.rows() != m.dim() || m.unitary.cols() != m.dim()) {
    throw Error(Errc::DimensionMismatch, "unitary size does not match system_dim * probe_dim");
  }
  if (!m.unitary.all_finite()) parse_error("unitary has non-finite entries");
  return m;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_error(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace qnot::io
