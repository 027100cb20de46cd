// block.hpp
// Independent-row construction: each weight vector w_k becomes the leading
// row of its own completed unitary V_k; the V_k form a block-diagonal
// operator applied to K stacked copies of the input. Reading every N-th
// amplitude of the result recovers sum_k |<w_k|x>|^2 with the rows
// independently parameterizable.

#pragma once

#include "qridge/state.hpp"

#include <vector>

namespace qridge {

struct BlockRidgeModel {
    std::vector<CVec> rows;  // K unit-norm rows of dimension N
    std::size_t dimension = 0;
    /// One real parameter vector per block when the rows are generated by
    /// per-block rotation chains; empty for static models.
    std::vector<std::vector<double>> block_params;

    std::size_t n_blocks() const { return rows.size(); }
    bool parameterized() const { return !block_params.empty(); }
    void validate() const;
};

struct StackedState {
    CVec amplitudes;  // K * N entries, unit norm
    std::size_t block_size = 0;
};

/// Deterministic unitary completion with leading row w, built from a
/// Householder reflector with the stable phase choice and a column sign
/// convention that maps w = e_0 to the identity exactly.
CMatrix complete_unitary(const CVec& w);

/// One completed unitary per row, in row order.
std::vector<CMatrix> build_block_diagonal(const BlockRidgeModel& model);

/// Dense direct sum of the blocks, for cross-checks only; rejects total
/// dimension K*N > 64.
CMatrix materialize_block_diagonal(const std::vector<CMatrix>& blocks);

/// (1/sqrt(K)) (x; x; ...; x) — K stacked copies, renormalized to a valid
/// state.
StackedState replicate_input(const StateVector& x, std::size_t k);

/// Block k of the output is (1/sqrt(K)) V_k x.
StackedState apply_block_model(const BlockRidgeModel& model, const StateVector& x);

/// K * sum_{i mod N = 0} |psi_i|^2. The K factor undoes the replication
/// normalization, so the value equals sum_k |<w_k|x>|^2.
double mod_selector_output(const StackedState& psi);

/// apply_block_model followed by mod_selector_output.
double block_output(const BlockRidgeModel& model, const StateVector& x);

/// Per-block values K * |psi_{kN}|^2, i.e. |<w_k|x>|^2 per block.
std::vector<double> block_term_contributions(const BlockRidgeModel& model, const StateVector& x);

/// Leading row of the per-block rotation chain: for each qubit q the chain
/// applies RY(params[2q]) then RZ(params[2q+1]), and the row is the
/// big-endian Kronecker product of the per-qubit leading rows. dimension
/// must be a power of two and params must have 2*log2(dimension) entries.
CVec block_row_from_params(const std::vector<double>& params, std::size_t dimension);

BlockRidgeModel make_parameterized_block_model(std::vector<std::vector<double>> block_params,
                                               std::size_t dimension);

/// New model with block_params[k] += delta and rows[k] regenerated; every
/// other row is copied bit-for-bit.
BlockRidgeModel perturb_block(const BlockRidgeModel& model, std::size_t k,
                              const std::vector<double>& delta);

}  // namespace qridge
