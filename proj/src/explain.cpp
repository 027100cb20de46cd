#include "qridge/explain.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qridge {

namespace {

// Consistency gate run before any report leaves the library.
void check_report(const ExplainReport& rep) {
    double acc = rep.mu;
    for (double v : rep.contributions) acc += v;
    if (std::abs(acc - rep.output) > 1e-10)
        throw std::runtime_error("explain: contributions do not reproduce the model output");
}

std::vector<std::vector<double>> fd_matrix(
    std::size_t n_terms, std::size_t n_params, double h,
    const std::function<std::vector<double>(std::size_t, double)>& contribs_with_shift) {
    std::vector<std::vector<double>> s(n_terms, std::vector<double>(n_params, 0.0));
    for (std::size_t j = 0; j < n_params; ++j) {
        const auto plus = contribs_with_shift(j, h);
        const auto minus = contribs_with_shift(j, -h);
        for (std::size_t i = 0; i < n_terms; ++i) s[i][j] = (plus[i] - minus[i]) / (2.0 * h);
    }
    return s;
}

}  // namespace

ExplainReport explain_circuit(const CircuitModel& m, const std::vector<double>& input,
                              double fd_step, const std::string& input_id) {
    m.circuit.validate();
    if (!(fd_step > 0.0)) throw std::invalid_argument("explain: fd_step must be positive");
    const StateVector x = encode_input(input, m.circuit.n_qubits).state;

    auto contribs_at = [&](const std::vector<double>& theta) {
        const CMatrix w = circuit_unitary(m.circuit, theta);
        return term_contributions(extract_rows(w, m.selector), x);
    };

    ExplainReport rep;
    rep.model_kind = "circuit";
    rep.input_id = input_id;
    rep.input = input;
    rep.dimension = x.dim();
    rep.contributions = contribs_at(m.theta);
    rep.n_terms = rep.contributions.size();
    rep.n_params = m.theta.size();
    rep.output = circuit_model_eval(m, x);
    rep.fd_step = fd_step;
    rep.sensitivity = fd_matrix(rep.n_terms, rep.n_params, fd_step,
                                [&](std::size_t j, double h) {
                                    std::vector<double> theta = m.theta;
                                    theta[j] += h;
                                    return contribs_at(theta);
                                });
    check_report(rep);
    return rep;
}

ExplainReport explain_block(const BlockRidgeModel& m, const std::vector<double>& input,
                            double fd_step, const std::string& input_id) {
    m.validate();
    if (!(fd_step > 0.0)) throw std::invalid_argument("explain: fd_step must be positive");
    if (!is_power_of_two(m.dimension))
        throw std::invalid_argument("explain: block model dimension must be a power of two");
    const int n_qubits = std::countr_zero(m.dimension);
    const StateVector x = encode_input(input, n_qubits).state;

    ExplainReport rep;
    rep.model_kind = "block";
    rep.input_id = input_id;
    rep.input = input;
    rep.dimension = m.dimension;
    rep.contributions = block_term_contributions(m, x);
    rep.n_terms = rep.contributions.size();
    rep.output = block_output(m, x);
    rep.fd_step = fd_step;

    if (m.parameterized()) {
        const std::size_t per_block = m.block_params[0].size();
        rep.n_params = m.n_blocks() * per_block;
        rep.sensitivity = fd_matrix(
            rep.n_terms, rep.n_params, fd_step, [&](std::size_t j, double h) {
                const std::size_t b = j / per_block;
                std::vector<double> delta(per_block, 0.0);
                delta[j % per_block] = h;
                return block_term_contributions(perturb_block(m, b, delta), x);
            });
        // Locality guarantee: entries outside a term's own block are exact
        // zeros, not merely small.
        for (std::size_t i = 0; i < rep.n_terms; ++i)
            for (std::size_t j = 0; j < rep.n_params; ++j)
                if (j / per_block != i && rep.sensitivity[i][j] != 0.0)
                    throw std::runtime_error("explain: off-block sensitivity is not exactly zero");
    } else {
        rep.n_params = 0;
        rep.sensitivity.assign(rep.n_terms, {});
    }
    check_report(rep);
    return rep;
}

ExplainReport explain_fourier(const FourierRidgeModel& m, const std::vector<double>& input,
                              double fd_step, const std::string& input_id) {
    m.validate();
    if (!(fd_step > 0.0)) throw std::invalid_argument("explain: fd_step must be positive");
    const std::size_t k = m.n_terms();
    const std::size_t d = m.input_dim();

    // Parameters: (Re c_k, Im c_k) pairs, then directions row by row.
    auto with_shift = [&](std::size_t j, double h) {
        FourierRidgeModel t = m;
        if (j < 2 * k) {
            const std::size_t kk = j / 2;
            cdouble c = t.coefficients[kk];
            if (j % 2 == 0) c += h;
            else c += cdouble(0.0, h);
            t.coefficients[kk] = c;
        } else {
            const std::size_t off = j - 2 * k;
            t.directions[off / d][off % d] += h;
        }
        return fourier_term_contributions(t, input);
    };

    ExplainReport rep;
    rep.model_kind = "fourier";
    rep.input_id = input_id;
    rep.input = input;
    rep.dimension = d;
    rep.contributions = fourier_term_contributions(m, input);
    rep.n_terms = k;
    rep.n_params = 2 * k + k * d;
    rep.output = model_eval(m, input);
    rep.fd_step = fd_step;
    rep.sensitivity = fd_matrix(rep.n_terms, rep.n_params, fd_step, with_shift);
    check_report(rep);
    return rep;
}

ExplainReport explain_xnn(const XnnModel& m, const std::vector<double>& input, double fd_step,
                          const std::string& input_id) {
    m.validate();
    if (!(fd_step > 0.0)) throw std::invalid_argument("explain: fd_step must be positive");
    const std::size_t k = m.n_terms();
    const std::size_t d = m.input_dim();

    // Parameters: mu, gammas, then directions row by row.
    auto with_shift = [&](std::size_t j, double h) {
        XnnModel t = m;
        if (j == 0) t.mu += h;
        else if (j < 1 + k) t.gammas[j - 1] += h;
        else {
            const std::size_t off = j - 1 - k;
            t.directions[off / d][off % d] += h;
        }
        return term_contributions_xnn(t, input);
    };

    ExplainReport rep;
    rep.model_kind = "xnn";
    rep.input_id = input_id;
    rep.input = input;
    rep.dimension = input.size();
    rep.contributions = term_contributions_xnn(m, input);
    rep.n_terms = k;
    rep.n_params = 1 + k + k * d;
    rep.output = xnn_eval(m, input);
    rep.mu = m.mu;
    rep.fd_step = fd_step;
    rep.sensitivity = fd_matrix(rep.n_terms, rep.n_params, fd_step, with_shift);
    check_report(rep);
    return rep;
}

}  // namespace qridge
