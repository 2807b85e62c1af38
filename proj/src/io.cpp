// Copyright 2026 The sqbound Authors
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

#include "sqb/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sqb/errors.hpp"

#ifndef SQBOUND_VERSION
#define SQBOUND_VERSION "0.0.0"
#endif

namespace sqb::io {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::complex<double> entry_from_json(const Json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("matrix entries must be numbers or [re, im] pairs");
}

}  // namespace

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be non-empty arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw ParseError("matrix rows must all have " + std::to_string(cols) + " entries");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[c]);
  }
  return m;
}

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

MultipartiteState state_from_json(const Json& j) {
  auto labels = field<Labels>(j, "labels");
  auto dims = field<Dims>(j, "dims");
  if (!j.contains("matrix")) throw ParseError("missing field \"matrix\"");
  return MultipartiteState::from_matrix(matrix_from_json(j.at("matrix")), std::move(labels), std::move(dims));
}

Json state_to_json(const MultipartiteState& state) {
  Json j;
  j["labels"] = state.labels();
  j["dims"] = state.dims();
  j["matrix"] = matrix_to_json(state.matrix());
  return j;
}

QuantumChannel channel_from_json(const Json& j) {
  const int input_dim = field<int>(j, "input_dim");
  auto labels = field<Labels>(j, "output_labels");
  auto dims = field<Dims>(j, "output_dims");
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
    throw ParseError("field \"kraus\" must be a non-empty array of matrices");
  std::vector<CMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return QuantumChannel::from_kraus(std::move(kraus), input_dim, std::move(labels), std::move(dims));
}

Json channel_to_json(const QuantumChannel& channel) {
  Json j;
  j["input_dim"] = channel.input_dim();
  j["output_labels"] = channel.output_labels();
  j["output_dims"] = channel.output_dims();
  Json kraus = Json::array();
  for (const auto& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  j["kraus"] = std::move(kraus);
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

MultipartiteState load_state(const std::string& path) { return state_from_json(read_json_file(path)); }
QuantumChannel load_channel(const std::string& path) { return channel_from_json(read_json_file(path)); }

std::string format_number(double x) {
  if (std::isnan(x)) throw DomainError("refusing to emit NaN");
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";  // folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json json_number(double x) {
  const std::string s = format_number(x);
  if (std::isinf(x)) return s;
  return std::stod(s);
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
    } else {
      out += '"';
      for (char c : f) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    }
  }
  return out;
}

Json metadata(const std::string& command, Json config) {
  Json j;
  j["tool"] = "sqbound";
  j["version"] = SQBOUND_VERSION;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

Json to_json(const SquashResult& r) {
  Json j;
  j["measure"] = std::string(to_string(r.measure));
  j["value_bits"] = json_number(r.value_bits);
  j["converged"] = r.converged;
  Json ext;
  ext["kind"] = r.extension.kind;
  ext["purifier_dim"] = r.extension.purifier_dim;
  ext["output_dim"] = r.extension.output_dim;
  ext["ancilla_dim"] = r.extension.ancilla_dim;
  ext["best_restart"] = r.extension.best_restart;
  Json params = Json::array();
  for (double p : r.extension.params) params.push_back(json_number(p));
  ext["params"] = std::move(params);
  j["extension"] = std::move(ext);
  return j;
}

Json to_json(const RateConstraint& rc) {
  Json j;
  j["partition"] = rc.partition.to_string();
  Json weights = Json::object();
  for (const auto& [m, w] : rc.weights) weights[format_set(m)] = json_number(w);
  j["weights"] = std::move(weights);
  j["bound_bits"] = json_number(rc.bound_bits);
  j["measure_used"] = std::string(to_string(rc.measure_used));
  Json schmidt = Json::array();
  for (double p : rc.input.schmidt) schmidt.push_back(json_number(p));
  j["input_schmidt"] = std::move(schmidt);
  Json opt;
  opt["restarts"] = rc.optimizer.restarts;
  opt["seed"] = rc.optimizer.seed;
  opt["converged"] = rc.optimizer.converged;
  opt["exact_inner"] = rc.optimizer.exact_inner;
  j["optimizer"] = std::move(opt);
  return j;
}

Json to_json(const bosonic::BoundReport& r) {
  Json j;
  j["eta_b"] = json_number(r.eta_b);
  j["eta_c"] = json_number(r.eta_c);
  j["bound_b_cut"] = json_number(r.bound_b_cut);
  j["bound_c_cut"] = json_number(r.bound_c_cut);
  j["bound_bc_cut"] = json_number(r.bound_bc_cut);
  j["tripartite_bound"] = json_number(r.tripartite_bound);
  j["tripartite_bound_as_printed"] = json_number(r.tripartite_bound_as_printed);
  j["eta_star"] = json_number(r.eta_star);
  if (r.mean_photon && r.finite_ns) {
    Json f;
    f["ns"] = json_number(*r.mean_photon);
    f["bound_b_cut"] = json_number(r.finite_ns->b_cut);
    f["bound_c_cut"] = json_number(r.finite_ns->c_cut);
    f["bound_bc_cut"] = json_number(r.finite_ns->bc_cut);
    f["tripartite_bound"] = json_number(r.finite_ns->tripartite);
    j["finite_ns"] = std::move(f);
  }
  return j;
}

std::vector<std::string> bosonic_csv_header(bool with_finite_ns) {
  std::vector<std::string> h = {"eta_b",           "eta_c",    "bound_b_cut", "bound_c_cut", "bound_bc_cut",
                                "tripartite_bound", "tripartite_bound_as_printed", "eta_star"};
  if (with_finite_ns)
    for (const char* c : {"ns", "finite_b_cut", "finite_c_cut", "finite_bc_cut", "finite_tripartite"}) h.push_back(c);
  return h;
}

std::vector<std::string> bosonic_csv_row(const bosonic::BoundReport& r) {
  std::vector<std::string> row = {format_number(r.eta_b),           format_number(r.eta_c),
                                  format_number(r.bound_b_cut),     format_number(r.bound_c_cut),
                                  format_number(r.bound_bc_cut),    format_number(r.tripartite_bound),
                                  format_number(r.tripartite_bound_as_printed), format_number(r.eta_star)};
  if (r.mean_photon && r.finite_ns) {
    row.push_back(format_number(*r.mean_photon));
    row.push_back(format_number(r.finite_ns->b_cut));
    row.push_back(format_number(r.finite_ns->c_cut));
    row.push_back(format_number(r.finite_ns->bc_cut));
    row.push_back(format_number(r.finite_ns->tripartite));
  }
  return row;
}

}  // namespace sqb::io
