#include "qridge/train.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qridge {

void TrainConfig::validate() const {
    if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
        throw std::invalid_argument("train config: learning_rate must be a finite non-negative number");
    if (epochs < 1) throw std::invalid_argument("train config: epochs must be >= 1");
    if (!(fd_step > 0.0)) throw std::invalid_argument("train config: fd_step must be positive");
}

AmplitudeEncoded encode_input(const std::vector<double>& x, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("encode_input: need at least one qubit");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (x.empty()) throw std::invalid_argument("encode_input: empty input");
    if (x.size() > dim)
        throw std::invalid_argument("encode_input: input dimension " + std::to_string(x.size()) +
                                    " exceeds 2^" + std::to_string(n_qubits));
    double sq = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) throw std::invalid_argument("encode_input: non-finite input");
        sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (norm == 0.0) throw std::invalid_argument("encode_input: unnormalizable zero vector");
    CVec amps(dim, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) amps[i] = x[i] / norm;
    AmplitudeEncoded enc;
    enc.state.n_qubits = n_qubits;
    enc.state.amplitudes = std::move(amps);
    enc.input_norm = norm;
    return enc;
}

double mse_loss(const std::vector<double>& predictions, const std::vector<double>& targets) {
    if (predictions.empty() || predictions.size() != targets.size())
        throw std::invalid_argument("mse_loss: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double r = predictions[i] - targets[i];
        acc += r * r;
    }
    return acc / static_cast<double>(predictions.size());
}

std::vector<double> parameter_shift_gradient(const ParamCircuit& circuit,
                                             const std::vector<double>& theta,
                                             const MeasurementSelector& sel,
                                             const StateVector& x) {
    circuit.validate();
    if (static_cast<int>(theta.size()) != circuit.n_params)
        throw std::invalid_argument("parameter_shift_gradient: parameter count mismatch");
    std::vector<int> uses(theta.size(), 0);
    for (const auto& g : circuit.gates)
        if (g.param_index) ++uses[static_cast<std::size_t>(*g.param_index)];
    for (int u : uses)
        if (u != 1)
            throw std::invalid_argument(
                "parameter_shift_gradient: shift rule requires unique slots "
                "(use finite differences for shared parameters)");

    const double shift = std::numbers::pi / 2.0;
    std::vector<double> grad(theta.size());
    std::vector<double> shifted = theta;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        shifted[j] = theta[j] + shift;
        const double plus = selector_expectation(run_circuit(circuit, shifted, x), sel);
        shifted[j] = theta[j] - shift;
        const double minus = selector_expectation(run_circuit(circuit, shifted, x), sel);
        shifted[j] = theta[j];
        grad[j] = (plus - minus) / 2.0;
    }
    return grad;
}

std::vector<double> finite_diff_gradient(const std::function<double(const std::vector<double>&)>& f,
                                         std::vector<double> theta, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("finite_diff_gradient: step must be positive");
    std::vector<double> grad(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double saved = theta[j];
        theta[j] = saved + step;
        const double plus = f(theta);
        theta[j] = saved - step;
        const double minus = f(theta);
        theta[j] = saved;
        grad[j] = (plus - minus) / (2.0 * step);
    }
    return grad;
}

double circuit_model_eval(const CircuitModel& m, const StateVector& x) {
    return selector_expectation(run_circuit(m.circuit, m.theta, x), m.selector);
}

namespace {

void check_epoch_loss(double loss, int epoch) {
    if (!std::isfinite(loss))
        throw std::runtime_error("training diverged: non-finite loss at epoch " +
                                 std::to_string(epoch));
}

void maybe_log(const TrainConfig& cfg, int epoch, double loss) {
    if (cfg.log_every > 0 && epoch % cfg.log_every == 0)
        std::fprintf(stderr, "epoch %d  mse %.6e\n", epoch, loss);
}

std::vector<StateVector> encode_all(const Dataset& data, int n_qubits) {
    std::vector<StateVector> out;
    out.reserve(data.size());
    for (const auto& x : data.inputs) out.push_back(encode_input(x, n_qubits).state);
    return out;
}

}  // namespace

Trained<CircuitModel> train_circuit(CircuitModel m, const Dataset& data, const TrainConfig& cfg) {
    cfg.validate();
    data.validate();
    m.circuit.validate();
    const auto encoded = encode_all(data, m.circuit.n_qubits);
    const std::size_t n_samples = data.size();
    const double inv_m = 1.0 / static_cast<double>(n_samples);

    // The shift rule needs gate-unique slots; shared slots drop to central
    // differences on the same expectation.
    std::vector<int> uses(m.theta.size(), 0);
    for (const auto& g : m.circuit.gates)
        if (g.param_index) ++uses[static_cast<std::size_t>(*g.param_index)];
    bool unique_slots = true;
    for (int u : uses) unique_slots = unique_slots && u == 1;
    if (!unique_slots)
        std::fprintf(stderr,
                     "train_circuit: parameter slots are shared across gates; "
                     "using finite differences instead of the shift rule\n");

    auto sample_gradient = [&](const StateVector& x) {
        if (unique_slots) return parameter_shift_gradient(m.circuit, m.theta, m.selector, x);
        return finite_diff_gradient(
            [&](const std::vector<double>& th) {
                return selector_expectation(run_circuit(m.circuit, th, x), m.selector);
            },
            m.theta, cfg.fd_step);
    };

    auto batch_loss = [&]() {
        std::vector<double> preds(n_samples);
        for (std::size_t j = 0; j < n_samples; ++j) preds[j] = circuit_model_eval(m, encoded[j]);
        return mse_loss(preds, data.targets);
    };

    Trained<CircuitModel> out;
    out.initial_loss = batch_loss();
    out.history.reserve(static_cast<std::size_t>(cfg.epochs));
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        std::vector<double> grad(m.theta.size(), 0.0);
        for (std::size_t j = 0; j < n_samples; ++j) {
            const double p = circuit_model_eval(m, encoded[j]);
            const double w = 2.0 * (p - data.targets[j]) * inv_m;
            const auto g = sample_gradient(encoded[j]);
            for (std::size_t t = 0; t < grad.size(); ++t) grad[t] += w * g[t];
        }
        for (std::size_t t = 0; t < m.theta.size(); ++t) m.theta[t] -= cfg.learning_rate * grad[t];
        const double loss = batch_loss();
        check_epoch_loss(loss, epoch);
        maybe_log(cfg, epoch, loss);
        out.history.push_back(loss);
    }
    out.model = std::move(m);
    return out;
}

Trained<BlockRidgeModel> train_block(BlockRidgeModel m, const Dataset& data,
                                     const TrainConfig& cfg) {
    cfg.validate();
    data.validate();
    m.validate();
    if (!m.parameterized())
        throw std::invalid_argument("train_block: model is not parameterized");
    const int n_qubits = std::countr_zero(m.dimension);
    const auto encoded = encode_all(data, n_qubits);

    const std::size_t per_block = m.block_params[0].size();
    std::vector<double> flat;
    flat.reserve(m.n_blocks() * per_block);
    for (const auto& p : m.block_params) flat.insert(flat.end(), p.begin(), p.end());

    auto model_from_flat = [&](const std::vector<double>& v) {
        std::vector<std::vector<double>> params(m.n_blocks());
        for (std::size_t b = 0; b < m.n_blocks(); ++b)
            params[b].assign(v.begin() + static_cast<std::ptrdiff_t>(b * per_block),
                             v.begin() + static_cast<std::ptrdiff_t>((b + 1) * per_block));
        return make_parameterized_block_model(std::move(params), m.dimension);
    };
    auto flat_loss = [&](const std::vector<double>& v) {
        const BlockRidgeModel cand = model_from_flat(v);
        std::vector<double> preds(data.size());
        for (std::size_t j = 0; j < data.size(); ++j) preds[j] = block_output(cand, encoded[j]);
        return mse_loss(preds, data.targets);
    };

    Trained<BlockRidgeModel> out;
    out.initial_loss = flat_loss(flat);
    out.history.reserve(static_cast<std::size_t>(cfg.epochs));
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        const auto grad = finite_diff_gradient(flat_loss, flat, cfg.fd_step);
        for (std::size_t t = 0; t < flat.size(); ++t) flat[t] -= cfg.learning_rate * grad[t];
        const double loss = flat_loss(flat);
        check_epoch_loss(loss, epoch);
        maybe_log(cfg, epoch, loss);
        out.history.push_back(loss);
    }
    out.model = model_from_flat(flat);
    return out;
}

Trained<FourierRidgeModel> train_fourier(FourierRidgeModel m, const Dataset& data,
                                         const TrainConfig& cfg) {
    cfg.validate();
    data.validate();
    m.validate();
    if (m.input_dim() != data.input_dim())
        throw std::invalid_argument("train_fourier: direction/input dimension mismatch");
    const std::size_t n_samples = data.size();
    const std::size_t k = m.n_terms();
    const std::size_t d = m.input_dim();
    const double inv_m = 1.0 / static_cast<double>(n_samples);

    auto batch_loss = [&]() {
        std::vector<double> preds(n_samples);
        for (std::size_t j = 0; j < n_samples; ++j) preds[j] = model_eval(m, data.inputs[j]);
        return mse_loss(preds, data.targets);
    };

    Trained<FourierRidgeModel> out;
    out.initial_loss = batch_loss();
    out.history.reserve(static_cast<std::size_t>(cfg.epochs));
    std::vector<double> g_re(k), g_im(k);
    std::vector<std::vector<double>> g_dir(k, std::vector<double>(d));
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        for (auto& v : g_re) v = 0.0;
        for (auto& v : g_im) v = 0.0;
        for (auto& row : g_dir)
            for (auto& v : row) v = 0.0;
        for (std::size_t j = 0; j < n_samples; ++j) {
            const auto& x = data.inputs[j];
            const double r = model_eval(m, x) - data.targets[j];
            const double w = 2.0 * r * inv_m;
            for (std::size_t kk = 0; kk < k; ++kk) {
                double t = 0.0;
                for (std::size_t i = 0; i < d; ++i) t += x[i] * m.directions[kk][i];
                const double ct = std::cos(t), st = std::sin(t);
                const double a = m.coefficients[kk].real();
                const double b = m.coefficients[kk].imag();
                g_re[kk] += w * ct;
                g_im[kk] += w * (-st);
                const double dphase = -(a * st + b * ct);  // d/dt Re(c e^{it})
                for (std::size_t i = 0; i < d; ++i) g_dir[kk][i] += w * dphase * x[i];
            }
        }
        for (std::size_t kk = 0; kk < k; ++kk) {
            m.coefficients[kk] -= cfg.learning_rate * cdouble(g_re[kk], g_im[kk]);
            for (std::size_t i = 0; i < d; ++i)
                m.directions[kk][i] -= cfg.learning_rate * g_dir[kk][i];
        }
        const double loss = batch_loss();
        check_epoch_loss(loss, epoch);
        maybe_log(cfg, epoch, loss);
        out.history.push_back(loss);
    }
    out.model = std::move(m);
    return out;
}

Trained<XnnModel> train_xnn(XnnModel m, const Dataset& data, const TrainConfig& cfg) {
    cfg.validate();
    data.validate();
    m.validate();
    if (m.n_terms() > 0 && m.input_dim() != data.input_dim())
        throw std::invalid_argument("train_xnn: direction/input dimension mismatch");
    const std::size_t n_samples = data.size();
    const double inv_m = 1.0 / static_cast<double>(n_samples);

    auto batch_loss = [&]() {
        std::vector<double> preds(n_samples);
        for (std::size_t j = 0; j < n_samples; ++j) preds[j] = xnn_eval(m, data.inputs[j]);
        return mse_loss(preds, data.targets);
    };

    Trained<XnnModel> out;
    out.initial_loss = batch_loss();
    out.history.reserve(static_cast<std::size_t>(cfg.epochs));
    for (int epoch = 1; epoch <= cfg.epochs; ++epoch) {
        double g_mu = 0.0;
        std::vector<double> g_gamma(m.n_terms(), 0.0);
        std::vector<std::vector<double>> g_dir(m.n_terms(),
                                               std::vector<double>(m.input_dim(), 0.0));
        for (std::size_t j = 0; j < n_samples; ++j) {
            const auto g = xnn_gradient(m, data.inputs[j], data.targets[j]);
            g_mu += inv_m * g.d_mu;
            for (std::size_t kk = 0; kk < m.n_terms(); ++kk) {
                g_gamma[kk] += inv_m * g.d_gammas[kk];
                for (std::size_t i = 0; i < m.input_dim(); ++i)
                    g_dir[kk][i] += inv_m * g.d_directions[kk][i];
            }
        }
        m.mu -= cfg.learning_rate * g_mu;
        for (std::size_t kk = 0; kk < m.n_terms(); ++kk) {
            m.gammas[kk] -= cfg.learning_rate * g_gamma[kk];
            for (std::size_t i = 0; i < m.input_dim(); ++i)
                m.directions[kk][i] -= cfg.learning_rate * g_dir[kk][i];
        }
        const double loss = batch_loss();
        check_epoch_loss(loss, epoch);
        maybe_log(cfg, epoch, loss);
        out.history.push_back(loss);
    }
    out.model = std::move(m);
    return out;
}

namespace {

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

}  // namespace

LocalityReport compare_contributions(std::size_t block, const std::vector<double>& delta,
                                     const std::vector<double>& before,
                                     const std::vector<double>& after) {
    if (before.size() != after.size())
        throw std::invalid_argument("compare_contributions: term count mismatch");
    if (block >= before.size())
        throw std::invalid_argument("compare_contributions: block index out of range");
    LocalityReport rep;
    rep.block = block;
    rep.delta = delta;
    rep.before = before;
    rep.after = after;
    rep.abs_change.resize(before.size());
    rep.off_block_unchanged = true;
    for (std::size_t j = 0; j < before.size(); ++j) {
        rep.abs_change[j] = std::abs(after[j] - before[j]);
        if (j != block && !same_bits(before[j], after[j])) rep.off_block_unchanged = false;
    }
    rep.perturbed_term_changed = !same_bits(before[block], after[block]);
    bool delta_zero = true;
    for (double dv : delta)
        if (dv != 0.0) delta_zero = false;
    rep.pass = rep.off_block_unchanged && (delta_zero || rep.perturbed_term_changed);
    return rep;
}

LocalityReport locality_experiment(const BlockRidgeModel& model, const StateVector& x,
                                   std::size_t block, const std::vector<double>& delta) {
    const auto before = block_term_contributions(model, x);
    const auto after = block_term_contributions(perturb_block(model, block, delta), x);
    return compare_contributions(block, delta, before, after);
}

}  // namespace qridge
