// Copyright 2026 The dualgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUALGAME_SCENARIO_IO_HPP
#define DUALGAME_SCENARIO_IO_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dualgame/common.hpp"
#include "dualgame/game.hpp"
#include "dualgame/measure.hpp"
#include "dualgame/qcore.hpp"
#include "dualgame/states.hpp"

namespace dualgame {

/// Scenario files and reports use insertion-ordered JSON so that output is
/// byte-stable across runs.
using Json = nlohmann::ordered_json;

inline constexpr int kScenarioSchemaVersion = 1;

namespace detail_io {

inline const Json& require_key(const Json& obj, const char* key,
                               const std::string& path) {
  if (!obj.is_object()) throw ParseError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  }
  return *it;
}

inline std::string extend(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

inline double parse_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError(path, "expected a number");
  return j.get<double>();
}

inline std::int64_t parse_integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<std::int64_t>();
}

/// Complex numbers are written as two-element arrays [re, im].
inline Complex parse_complex(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(path, "expected a [re, im] pair");
  }
  return {parse_number(j[0], path + "[0]"), parse_number(j[1], path + "[1]")};
}

inline Vector parse_complex_vector(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(path, "expected a non-empty array of [re, im] pairs");
  }
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = parse_complex(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline Matrix parse_complex_matrix(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(path, "expected a non-empty array of rows");
  }
  std::size_t rows = j.size();
  Matrix m;
  for (std::size_t r = 0; r < rows; ++r) {
    std::string row_path = path + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array() || row.empty()) {
      throw ParseError(row_path, "expected a non-empty row array");
    }
    if (r == 0) {
      m.resize(static_cast<Index>(rows), static_cast<Index>(row.size()));
    } else if (row.size() != static_cast<std::size_t>(m.cols())) {
      throw ParseError(row_path, "rows have inconsistent lengths");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          parse_complex(row[c], row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

inline std::vector<int> parse_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(
        parse_integer(j[i], path + "[" + std::to_string(i) + "]")));
  }
  return out;
}

inline Povm parse_povm(const Json& j, const std::string& path) {
  Index dim = static_cast<Index>(
      parse_integer(require_key(j, "dim", path), extend(path, "dim")));
  const Json& elems = require_key(j, "elements", path);
  std::string elems_path = extend(path, "elements");
  if (!elems.is_array() || elems.empty()) {
    throw ParseError(elems_path, "expected a non-empty array");
  }
  std::vector<PovmElement> parsed;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::string elem_path = elems_path + "[" + std::to_string(i) + "]";
    const Json& label_json = require_key(elems[i], "label", elem_path);
    const Json& matrix_json = require_key(elems[i], "matrix", elem_path);
    std::vector<int> indices = parse_int_list(label_json, elem_path + ".label");
    try {
      parsed.push_back({OutcomeLabel(std::move(indices)),
                        parse_complex_matrix(matrix_json, elem_path + ".matrix")});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(elem_path, e.what());
    }
  }
  try {
    return Povm(dim, std::move(parsed));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

inline Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json povm_to_json(const Povm& povm) {
  Json out;
  out["dim"] = povm.dim();
  Json elems = Json::array();
  for (std::size_t i = 0; i < povm.size(); ++i) {
    Json e;
    e["label"] = povm[i].label.indices();
    e["matrix"] = matrix_to_json(povm[i].op);
    elems.push_back(std::move(e));
  }
  out["elements"] = std::move(elems);
  return out;
}

}  // namespace detail_io

/// Builds a scenario from its JSON form.  Errors carry the path of the
/// offending field.  The result is fully validated.
inline GameScenario scenario_from_json(const Json& doc) {
  using namespace detail_io;
  if (!doc.is_object()) throw ParseError("", "scenario must be a JSON object");
  std::int64_t schema = parse_integer(require_key(doc, "schema_version", ""),
                                      "schema_version");
  if (schema != kScenarioSchemaVersion) {
    throw ParseError("schema_version",
                     "unsupported version " + std::to_string(schema) + " (expected " +
                         std::to_string(kScenarioSchemaVersion) + ")");
  }
  GameScenario s;
  const Json& name = require_key(doc, "name", "");
  if (!name.is_string()) throw ParseError("name", "expected a string");
  s.name = name.get<std::string>();
  s.n_paths = static_cast<Index>(parse_integer(require_key(doc, "n_paths", ""), "n_paths"));
  s.phase_count = static_cast<Index>(
      parse_integer(require_key(doc, "phase_count", ""), "phase_count"));

  const Json& weights = require_key(doc, "weights", "");
  if (!weights.is_array() || weights.empty()) {
    throw ParseError("weights", "expected a non-empty array");
  }
  std::vector<double> w;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    w.push_back(parse_number(weights[i], "weights[" + std::to_string(i) + "]"));
  }
  try {
    s.weights = ProbDist(std::move(w));
  } catch (const Error& e) {
    throw ParseError("weights", e.what());
  }

  const Json& dets = require_key(doc, "detectors", "");
  Index det_dim = static_cast<Index>(
      parse_integer(require_key(dets, "dim", "detectors"), "detectors.dim"));
  const Json& det_states = require_key(dets, "states", "detectors");
  if (!det_states.is_array() || det_states.empty()) {
    throw ParseError("detectors.states", "expected a non-empty array");
  }
  std::vector<PureState> states;
  for (std::size_t i = 0; i < det_states.size(); ++i) {
    std::string path = "detectors.states[" + std::to_string(i) + "]";
    try {
      states.push_back(PureState::single(parse_complex_vector(det_states[i], path)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(path, e.what());
    }
  }
  try {
    s.detectors = DetectorFamily(det_dim, std::move(states));
  } catch (const Error& e) {
    throw ParseError("detectors", e.what());
  }

  s.bob_povm = parse_povm(require_key(doc, "bob_povm", ""), "bob_povm");
  s.alice_phase_povm =
      parse_povm(require_key(doc, "alice_phase_povm", ""), "alice_phase_povm");

  s.ways_answer_size = static_cast<int>(
      parse_integer(require_key(doc, "ways_answer_size", ""), "ways_answer_size"));
  s.phases_answer_size = static_cast<int>(parse_integer(
      require_key(doc, "phases_answer_size", ""), "phases_answer_size"));

  auto parse_answers = [&](const char* key) {
    const Json& j = require_key(doc, key, "");
    if (!j.is_array()) throw ParseError(key, "expected an array of index arrays");
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(parse_int_list(j[i], std::string(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
  };
  s.ways_answers = parse_answers("ways_answers");
  s.phases_answers = parse_answers("phases_answers");

  s.validate();
  return s;
}

/// Serializes a scenario to the JSON layout scenario_from_json accepts.
inline Json scenario_to_json(const GameScenario& scenario) {
  using namespace detail_io;
  scenario.validate();
  Json doc;
  doc["schema_version"] = kScenarioSchemaVersion;
  doc["name"] = scenario.name;
  doc["n_paths"] = scenario.n_paths;
  doc["phase_count"] = scenario.phase_count;
  doc["weights"] = scenario.weights.probabilities();
  Json dets;
  dets["dim"] = scenario.detectors.detector_dim();
  Json det_states = Json::array();
  for (std::size_t j = 0; j < scenario.detectors.n_states(); ++j) {
    det_states.push_back(vector_to_json(scenario.detectors.state(j).amplitudes()));
  }
  dets["states"] = std::move(det_states);
  doc["detectors"] = std::move(dets);
  doc["bob_povm"] = povm_to_json(scenario.bob_povm);
  doc["alice_phase_povm"] = povm_to_json(scenario.alice_phase_povm);
  doc["ways_answer_size"] = scenario.ways_answer_size;
  doc["phases_answer_size"] = scenario.phases_answer_size;
  doc["ways_answers"] = scenario.ways_answers;
  doc["phases_answers"] = scenario.phases_answers;
  return doc;
}

inline GameScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(doc);
}

inline void save_scenario(const std::filesystem::path& path,
                          const GameScenario& scenario) {
  std::ofstream out(path);
  if (!out) throw ParseError("", "cannot open " + path.string() + " for writing");
  out << scenario_to_json(scenario).dump(2) << "\n";
}

/// FNV-1a 64-bit hash of the canonical serialized form; identifies scenario
/// content in reports independently of file formatting.
inline std::string scenario_digest(const GameScenario& scenario) {
  std::string canonical = scenario_to_json(scenario).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dualgame

#endif  // DUALGAME_SCENARIO_IO_HPP
