// serialize.hpp
// JSON codecs for every file format the CLI reads or writes, plus small
// file helpers. Parsers are strict: unknown fields are rejected.

#pragma once

#include "qridge/explain.hpp"
#include "qridge/train.hpp"

#include <json.hpp>

#include <string>

namespace qridge {

// --- circuit files: {n_qubits, n_params, gates:[{kind,targets,param_index?}]}
nlohmann::json circuit_to_json(const ParamCircuit& c);
ParamCircuit circuit_from_json(const nlohmann::json& j);

// --- trained circuit models: circuit fields plus theta and selector
nlohmann::json circuit_model_to_json(const CircuitModel& m);
CircuitModel circuit_model_from_json(const nlohmann::json& j);

// --- block models: {dimension, rows, block_params?}; rows are interleaved
//     [re, im, re, im, ...] per row
nlohmann::json block_model_to_json(const BlockRidgeModel& m);
BlockRidgeModel block_model_from_json(const nlohmann::json& j);

// --- fourier models: {directions, coefficients}; coefficients as [re, im]
nlohmann::json fourier_model_to_json(const FourierRidgeModel& m);
FourierRidgeModel fourier_model_from_json(const nlohmann::json& j);

// --- xnn models: {mu, gammas, directions, activation}
nlohmann::json xnn_model_to_json(const XnnModel& m);
XnnModel xnn_model_from_json(const nlohmann::json& j);

// --- reports
nlohmann::json equivalence_report_to_json(const EquivalenceReport& r);
nlohmann::json locality_report_to_json(const LocalityReport& r);
nlohmann::json explain_report_to_json(const ExplainReport& r);

// --- train config: all fields optional
TrainConfig train_config_from_json(const nlohmann::json& j);
nlohmann::json train_config_to_json(const TrainConfig& c);

/// Which model family a JSON object describes, decided by its fields.
enum class ModelFileKind { circuit, circuit_model, block, fourier, xnn };
ModelFileKind sniff_model_kind(const nlohmann::json& j);

std::string slurp_file(const std::string& path);
/// Writes to path + ".tmp" then renames, so readers never observe partial
/// files.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace qridge
