#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "dimwit/correlations.hpp"
#include "dimwit/optimizer.hpp"
#include "dimwit/robustness.hpp"
#include "dimwit/witness.hpp"

namespace dimwit {

// Tensor document: {"M", "K", "N", "p"} with p nested as [i][k][j].
nlohmann::json to_json(const CorrelationTensor& t);
CorrelationTensor tensor_from_json(const nlohmann::json& doc);

// Witness document: {"M", "K", "N", "d", "c", "classical_bound",
// "quantum_dim_bound", "canonical"} with c nested as [i][k][j].
nlohmann::json to_json(const WitnessCoefficients& w);
WitnessCoefficients witness_from_json(const nlohmann::json& doc);

// Complex values are encoded as [re, im]; kets as arrays of those, matrices
// as arrays of rows.
nlohmann::json to_json(const Ket& psi);
nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Povm& povm);
nlohmann::json to_json(const OptimizationResult& result);
nlohmann::json to_json(const ThresholdReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Throws ParseError naming the input and the byte offset of the defect.
nlohmann::json parse_json_text(const std::string& text, const std::string& origin);

// FNV-1a 64-bit content digest, hex encoded.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace dimwit
