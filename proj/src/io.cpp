#include "dimwit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dimwit {

using nlohmann::json;

namespace {

int require_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ValidationError(std::string("document is missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

// Reads a nested [i][k][j] array into the flat layout, checking shape.
RealVector nested_cells(const json& doc, const char* key, const Scenario& s) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ValidationError(std::string("document is missing array field \"") + key + "\"");
  }
  const json& outer = doc[key];
  if (static_cast<int>(outer.size()) != s.preparations) {
    throw ValidationError(std::string("field \"") + key + "\" must have M rows");
  }
  RealVector flat(static_cast<Eigen::Index>(s.preparations) * s.measurements * s.outcomes);
  for (int i = 0; i < s.preparations; ++i) {
    const json& per_measurement = outer[i];
    if (!per_measurement.is_array() ||
        static_cast<int>(per_measurement.size()) != s.measurements) {
      throw ValidationError(std::string("field \"") + key + "\" row " +
                            std::to_string(i + 1) + " must have K entries");
    }
    for (int k = 0; k < s.measurements; ++k) {
      const json& per_outcome = per_measurement[k];
      if (!per_outcome.is_array() ||
          static_cast<int>(per_outcome.size()) != s.outcomes) {
        throw ValidationError(std::string("field \"") + key + "\" cell (" +
                              std::to_string(i + 1) + "," + std::to_string(k + 1) +
                              ") must have N entries");
      }
      for (int j = 0; j < s.outcomes; ++j) {
        if (!per_outcome[j].is_number()) {
          throw ValidationError(std::string("field \"") + key + "\" holds a non-number");
        }
        flat(cell_index(s, i, k, j)) = per_outcome[j].get<double>();
      }
    }
  }
  return flat;
}

json cells_to_nested(const RealVector& flat, const Scenario& s) {
  json outer = json::array();
  for (int i = 0; i < s.preparations; ++i) {
    json per_measurement = json::array();
    for (int k = 0; k < s.measurements; ++k) {
      json per_outcome = json::array();
      for (int j = 0; j < s.outcomes; ++j) {
        per_outcome.push_back(flat(cell_index(s, i, k, j)));
      }
      per_measurement.push_back(std::move(per_outcome));
    }
    outer.push_back(std::move(per_measurement));
  }
  return outer;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json to_json(const CorrelationTensor& t) {
  return json{{"M", t.scenario.preparations},
              {"K", t.scenario.measurements},
              {"N", t.scenario.outcomes},
              {"p", cells_to_nested(t.probabilities, t.scenario)}};
}

CorrelationTensor tensor_from_json(const json& doc) {
  Scenario s;
  s.preparations = require_count(doc, "M");
  s.measurements = require_count(doc, "K");
  s.outcomes = require_count(doc, "N");
  s.dimension = 1;  // not part of the tensor document
  validate(s);
  CorrelationTensor t;
  t.scenario = s;
  t.probabilities = nested_cells(doc, "p", s);
  validate(t);
  return t;
}

json to_json(const WitnessCoefficients& w) {
  json doc{{"M", w.scenario.preparations},
           {"K", w.scenario.measurements},
           {"N", w.scenario.outcomes},
           {"d", w.scenario.dimension},
           {"c", cells_to_nested(w.coefficients, w.scenario)},
           {"classical_bound", w.classical_bound},
           {"canonical", w.canonical}};
  if (w.quantum_dim_bound) {
    doc["quantum_dim_bound"] = *w.quantum_dim_bound;
  } else {
    doc["quantum_dim_bound"] = nullptr;
  }
  return doc;
}

WitnessCoefficients witness_from_json(const json& doc) {
  Scenario s;
  s.preparations = require_count(doc, "M");
  s.measurements = require_count(doc, "K");
  s.outcomes = require_count(doc, "N");
  s.dimension = require_count(doc, "d");
  validate(s);
  WitnessCoefficients w;
  w.scenario = s;
  w.coefficients = nested_cells(doc, "c", s);
  if (!doc.contains("classical_bound") || !doc["classical_bound"].is_number()) {
    throw ValidationError("witness document is missing \"classical_bound\"");
  }
  w.classical_bound = doc["classical_bound"].get<double>();
  if (doc.contains("quantum_dim_bound") && doc["quantum_dim_bound"].is_number()) {
    w.quantum_dim_bound = doc["quantum_dim_bound"].get<double>();
  }
  w.canonical = doc.value("canonical", false);
  validate(w);
  return w;
}

json to_json(const Ket& psi) {
  json values = json::array();
  for (Eigen::Index a = 0; a < psi.size(); ++a) values.push_back(complex_to_json(psi(a)));
  return values;
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    json row = json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(complex_to_json(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Povm& povm) {
  json elements = json::array();
  for (const Matrix& element : povm.elements) elements.push_back(to_json(element));
  return elements;
}

json to_json(const OptimizationResult& result) {
  json doc{{"value", result.value},
           {"iterations_used", result.iterations_used},
           {"restart_index", result.restart_index}};
  json states = json::array();
  for (const Ket& psi : result.states) states.push_back(to_json(psi));
  doc["states"] = std::move(states);
  json povms = json::array();
  for (const Povm& povm : result.povms) povms.push_back(to_json(povm));
  doc["povms"] = std::move(povms);
  if (!result.measurement_vectors.empty()) {
    json vectors = json::array();
    for (const Ket& pointer : result.measurement_vectors) vectors.push_back(to_json(pointer));
    doc["measurement_vectors"] = std::move(vectors);
  }
  return doc;
}

json to_json(const ThresholdReport& report) {
  return json{{"d", report.d},
              {"i_star", report.i_star},
              {"eta_qc", report.eta_qc},
              {"eta_qc_lower", report.eta_qc_lower},
              {"eta_qc_upper", report.eta_qc_upper},
              {"eta_dim", report.eta_dim},
              {"eta_dim_lower", report.eta_dim_lower}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot read " + path);
  std::ostringstream content;
  content << stream.rdbuf();
  return content.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw IoError("cannot write " + path);
  stream << content;
  if (!stream) throw IoError("cannot write " + path);
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what() + " [byte " + std::to_string(e.byte) + "]");
  }
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace dimwit
