// explain.hpp
// Per-term contribution reports with finite-difference sensitivities: how
// each ridge term responds to each model parameter. For block models the
// sensitivity matrix is block-diagonal with exact zeros off the block.

#pragma once

#include "qridge/train.hpp"

#include <string>
#include <vector>

namespace qridge {

struct ExplainReport {
    std::string model_kind;  // "circuit" | "block" | "fourier" | "xnn"
    std::string input_id;
    std::vector<double> input;  // raw input row, before any encoding
    std::size_t dimension = 0;  // state dimension (circuit/block) or input dim
    std::size_t n_terms = 0;
    std::size_t n_params = 0;
    double output = 0.0;
    double mu = 0.0;  // xnn shift; 0 for the other kinds
    std::vector<double> contributions;               // n_terms
    std::vector<std::vector<double>> sensitivity;    // n_terms x n_params
    double fd_step = 0.0;
};

ExplainReport explain_circuit(const CircuitModel& m, const std::vector<double>& input,
                              double fd_step, const std::string& input_id = {});
ExplainReport explain_block(const BlockRidgeModel& m, const std::vector<double>& input,
                            double fd_step, const std::string& input_id = {});
ExplainReport explain_fourier(const FourierRidgeModel& m, const std::vector<double>& input,
                              double fd_step, const std::string& input_id = {});
ExplainReport explain_xnn(const XnnModel& m, const std::vector<double>& input, double fd_step,
                          const std::string& input_id = {});

}  // namespace qridge
