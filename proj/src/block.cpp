#include "qridge/block.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qridge {

void BlockRidgeModel::validate() const {
    if (dimension < 1) throw std::invalid_argument("block model: dimension must be >= 1");
    if (rows.empty()) throw std::invalid_argument("block model: needs at least one row");
    if (rows.size() > dimension)
        throw std::invalid_argument("block model: more rows than the dimension allows");
    for (const auto& r : rows) {
        if (r.size() != dimension)
            throw std::invalid_argument("block model: row dimension mismatch");
        if (std::abs(vec_norm(r) - 1.0) > 1e-10)
            throw std::invalid_argument("block model: row is not unit norm");
    }
    if (!block_params.empty()) {
        if (block_params.size() != rows.size())
            throw std::invalid_argument("block model: block_params count mismatch");
        if (!is_power_of_two(dimension) || dimension < 2)
            throw std::invalid_argument("block model: parameterized rows need a power-of-two dimension");
        const std::size_t want = 2 * static_cast<std::size_t>(std::countr_zero(dimension));
        for (const auto& p : block_params)
            if (p.size() != want)
                throw std::invalid_argument("block model: expected " + std::to_string(want) +
                                            " parameters per block");
    }
}

CMatrix complete_unitary(const CVec& w) {
    const std::size_t n = w.size();
    if (n < 1) throw std::invalid_argument("complete_unitary: empty row");
    if (std::abs(vec_norm(w) - 1.0) > 1e-9)
        throw std::invalid_argument("complete_unitary: row must have unit norm");

    // Build Q with first column u = w (no conjugation), then transpose so
    // the first ROW of the result is w. Q = beta * H with H the Householder
    // reflector for v = u - beta e_0 and beta = -exp(i arg u_0); this choice
    // keeps |v_0| = 1 + |u_0| away from cancellation. Columns 1..n-1 are
    // negated afterwards so that w = e_0 yields the identity.
    const cdouble u0 = w[0];
    const double a0 = std::abs(u0);
    const cdouble phase = (a0 > 0.0) ? u0 / a0 : cdouble(1.0, 0.0);
    const cdouble beta = -phase;

    CVec v = w;
    v[0] -= beta;
    double vsq = 0.0;
    for (const auto& c : v) vsq += std::norm(c);

    CMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cdouble h = -2.0 * v[i] * std::conj(v[j]) / vsq;
            if (i == j) h += 1.0;
            q.at(i, j) = beta * h;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) q.at(i, j) = -q.at(i, j);

    CMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = q.at(j, i);
    return out;
}

std::vector<CMatrix> build_block_diagonal(const BlockRidgeModel& model) {
    model.validate();
    std::vector<CMatrix> blocks;
    blocks.reserve(model.rows.size());
    for (const auto& r : model.rows) blocks.push_back(complete_unitary(r));
    return blocks;
}

CMatrix materialize_block_diagonal(const std::vector<CMatrix>& blocks) {
    std::size_t total = 0;
    for (const auto& b : blocks) {
        if (b.rows != b.cols) throw std::invalid_argument("materialize: non-square block");
        total += b.rows;
    }
    if (total > 64)
        throw std::invalid_argument("materialize_block_diagonal: dense form limited to K*N <= 64");
    CMatrix out(total, total);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows; ++i)
            for (std::size_t j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

StackedState replicate_input(const StateVector& x, std::size_t k) {
    if (k < 1) throw std::invalid_argument("replicate_input: need at least one copy");
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    StackedState s;
    s.block_size = x.dim();
    s.amplitudes.resize(k * x.dim());
    for (std::size_t b = 0; b < k; ++b)
        for (std::size_t i = 0; i < x.dim(); ++i)
            s.amplitudes[b * x.dim() + i] = scale * x.amplitudes[i];
    return s;
}

StackedState apply_block_model(const BlockRidgeModel& model, const StateVector& x) {
    model.validate();
    if (x.dim() != model.dimension)
        throw std::invalid_argument("apply_block_model: state dimension mismatch");
    const std::size_t k = model.n_blocks();
    const std::size_t n = model.dimension;
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    StackedState s;
    s.block_size = n;
    s.amplitudes.resize(k * n);
    for (std::size_t b = 0; b < k; ++b) {
        const CMatrix v = complete_unitary(model.rows[b]);
        const CVec y = matvec(v, x.amplitudes);
        for (std::size_t i = 0; i < n; ++i) s.amplitudes[b * n + i] = scale * y[i];
    }
    return s;
}

double mod_selector_output(const StackedState& psi) {
    if (psi.block_size < 1 || psi.amplitudes.empty() ||
        psi.amplitudes.size() % psi.block_size != 0)
        throw std::invalid_argument("mod_selector_output: block size mismatch");
    const std::size_t k = psi.amplitudes.size() / psi.block_size;
    double acc = 0.0;
    for (std::size_t b = 0; b < k; ++b) acc += std::norm(psi.amplitudes[b * psi.block_size]);
    return static_cast<double>(k) * acc;
}

double block_output(const BlockRidgeModel& model, const StateVector& x) {
    return mod_selector_output(apply_block_model(model, x));
}

std::vector<double> block_term_contributions(const BlockRidgeModel& model, const StateVector& x) {
    const StackedState psi = apply_block_model(model, x);
    const std::size_t k = psi.amplitudes.size() / psi.block_size;
    std::vector<double> out;
    out.reserve(k);
    for (std::size_t b = 0; b < k; ++b)
        out.push_back(static_cast<double>(k) * std::norm(psi.amplitudes[b * psi.block_size]));
    return out;
}

CVec block_row_from_params(const std::vector<double>& params, std::size_t dimension) {
    if (!is_power_of_two(dimension) || dimension < 2)
        throw std::invalid_argument("block_row_from_params: dimension must be a power of two >= 2");
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(dimension));
    if (params.size() != 2 * n)
        throw std::invalid_argument("block_row_from_params: expected " + std::to_string(2 * n) +
                                    " parameters");
    // Leading row of RZ(phi) RY(beta) per qubit, qubit 0 leftmost.
    CVec row{1.0};
    for (std::size_t q = 0; q < n; ++q) {
        const double b = params[2 * q];
        const double phi = params[2 * q + 1];
        const cdouble ph = std::polar(1.0, -phi / 2.0);
        const CVec factor{std::cos(b / 2.0) * ph, -std::sin(b / 2.0) * ph};
        row = kron(row, factor);
    }
    return row;
}

BlockRidgeModel make_parameterized_block_model(std::vector<std::vector<double>> block_params,
                                               std::size_t dimension) {
    BlockRidgeModel m;
    m.dimension = dimension;
    m.block_params = std::move(block_params);
    m.rows.reserve(m.block_params.size());
    for (const auto& p : m.block_params) m.rows.push_back(block_row_from_params(p, dimension));
    m.validate();
    return m;
}

BlockRidgeModel perturb_block(const BlockRidgeModel& model, std::size_t k,
                              const std::vector<double>& delta) {
    model.validate();
    if (!model.parameterized())
        throw std::invalid_argument("perturb_block: model is not parameterized");
    if (k >= model.n_blocks()) throw std::invalid_argument("perturb_block: block index out of range");
    if (delta.size() != model.block_params[k].size())
        throw std::invalid_argument("perturb_block: delta length mismatch");
    BlockRidgeModel out = model;
    for (std::size_t i = 0; i < delta.size(); ++i) out.block_params[k][i] += delta[i];
    out.rows[k] = block_row_from_params(out.block_params[k], out.dimension);
    return out;
}

}  // namespace qridge
