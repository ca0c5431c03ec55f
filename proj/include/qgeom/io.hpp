// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// File formats: state JSON documents ({"dim": n, "vector": [[re, im], ...]}
// for pure states, {"dim": n, "matrix": [[[re, im], ...], ...]} row-major
// for density states), circuit JSON arrays, and trajectory CSV export.

#ifndef QGEOM_IO_HPP_
#define QGEOM_IO_HPP_

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgeom/density.hpp"
#include "qgeom/gates.hpp"
#include "qgeom/types.hpp"

namespace qgeom::io {

inline nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument("complex entries must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json vector_to_json(const CVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_to_json(v[i]));
  }
  return out;
}

inline nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    out.push_back(row);
  }
  return out;
}

// A parsed state document: exactly one of vector or matrix is set.
struct StateFile {
  Eigen::Index dim = 0;
  std::optional<CVector> vector;
  std::optional<CMatrix> matrix;
};

inline nlohmann::json to_json(const StateFile& s) {
  nlohmann::json out;
  out["dim"] = s.dim;
  if (s.vector) out["vector"] = vector_to_json(*s.vector);
  if (s.matrix) out["matrix"] = matrix_to_json(*s.matrix);
  return out;
}

inline StateFile state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") ||
      !j["dim"].is_number_integer()) {
    throw std::invalid_argument("state file needs an integer \"dim\"");
  }
  StateFile out;
  out.dim = j["dim"].get<Eigen::Index>();
  if (out.dim < 1) throw std::invalid_argument("dim must be positive");
  const bool has_vector = j.contains("vector");
  const bool has_matrix = j.contains("matrix");
  if (has_vector == has_matrix) {
    throw std::invalid_argument(
        "state file needs exactly one of \"vector\" or \"matrix\"");
  }
  if (has_vector) {
    const auto& arr = j["vector"];
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != out.dim) {
      throw std::invalid_argument("vector length does not match dim");
    }
    CVector v(out.dim);
    for (Eigen::Index i = 0; i < out.dim; ++i) {
      v[i] = complex_from_json(arr[static_cast<std::size_t>(i)]);
    }
    out.vector = std::move(v);
  } else {
    const auto& arr = j["matrix"];
    if (!arr.is_array() || static_cast<Eigen::Index>(arr.size()) != out.dim) {
      throw std::invalid_argument("matrix shape does not match dim");
    }
    CMatrix m(out.dim, out.dim);
    for (Eigen::Index i = 0; i < out.dim; ++i) {
      const auto& row = arr[static_cast<std::size_t>(i)];
      if (!row.is_array() ||
          static_cast<Eigen::Index>(row.size()) != out.dim) {
        throw std::invalid_argument("matrix shape does not match dim");
      }
      for (Eigen::Index k = 0; k < out.dim; ++k) {
        m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
      }
    }
    out.matrix = std::move(m);
  }
  return out;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return nlohmann::json::parse(in);
}

inline StateFile load_state_file(const std::string& path) {
  return state_from_json(load_json_file(path));
}

// Circuit files are JSON arrays of {"gate": name, "theta": number?}.
inline std::vector<GeneratingFunction> circuit_from_json(
    const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("circuit file must be a JSON array");
  }
  std::vector<GeneratingFunction> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("gate") ||
        !entry["gate"].is_string()) {
      throw std::invalid_argument(
          "circuit entries need a \"gate\" name string");
    }
    std::optional<double> theta;
    if (entry.contains("theta")) {
      if (!entry["theta"].is_number()) {
        throw std::invalid_argument("\"theta\" must be a number");
      }
      theta = entry["theta"].get<double>();
    }
    out.push_back(builtin_generating(
        gate_name_from_string(entry["gate"].get<std::string>()), theta));
  }
  return out;
}

inline std::vector<GeneratingFunction> load_circuit(const std::string& path) {
  return circuit_from_json(load_json_file(path));
}

namespace detail {

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// Columns: t, then row-major re_i_j, im_i_j entries, and for two-level
// states additionally the Bloch coordinates x1, x2, x3.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  if (traj.empty()) throw std::invalid_argument("empty trajectory");
  const auto n = traj.front().state.dim();
  os << "t";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      os << ",re_" << i << "_" << j << ",im_" << i << "_" << j;
    }
  }
  if (n == 2) os << ",x1,x2,x3";
  os << "\n";
  for (const auto& point : traj) {
    os << detail::format_double(point.t);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex z = point.state.matrix()(i, j);
        os << "," << detail::format_double(z.real()) << ","
           << detail::format_double(z.imag());
      }
    }
    if (n == 2) {
      const BlochVector x = bloch_of_density(point.state);
      os << "," << detail::format_double(x.x1) << ","
         << detail::format_double(x.x2) << "," << detail::format_double(x.x3);
    }
    os << "\n";
  }
}

}  // namespace qgeom::io

#endif  // QGEOM_IO_HPP_
