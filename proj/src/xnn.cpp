#include "qridge/xnn.hpp"

#include <cmath>
#include <stdexcept>

namespace qridge {

double activation_eval(Activation a, double t) {
    switch (a) {
        case Activation::identity: return t;
        case Activation::tanh: return std::tanh(t);
        case Activation::sigmoid: return 1.0 / (1.0 + std::exp(-t));
        case Activation::sine: return std::sin(t);
    }
    throw std::logic_error("activation_eval: unknown activation");
}

double activation_deriv(Activation a, double t) {
    switch (a) {
        case Activation::identity: return 1.0;
        case Activation::tanh: {
            const double th = std::tanh(t);
            return 1.0 - th * th;
        }
        case Activation::sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-t));
            return s * (1.0 - s);
        }
        case Activation::sine: return std::cos(t);
    }
    throw std::logic_error("activation_deriv: unknown activation");
}

std::string activation_name(Activation a) {
    switch (a) {
        case Activation::identity: return "identity";
        case Activation::tanh: return "tanh";
        case Activation::sigmoid: return "sigmoid";
        case Activation::sine: return "sine";
    }
    throw std::logic_error("activation_name: unknown activation");
}

Activation activation_from_name(const std::string& name) {
    if (name == "identity") return Activation::identity;
    if (name == "tanh") return Activation::tanh;
    if (name == "sigmoid") return Activation::sigmoid;
    if (name == "sine") return Activation::sine;
    throw std::invalid_argument("unknown activation: " + name);
}

void XnnModel::validate() const {
    if (gammas.size() != directions.size())
        throw std::invalid_argument("xnn model: gammas/directions count mismatch");
    if (!directions.empty()) {
        const std::size_t d = directions[0].size();
        if (d == 0) throw std::invalid_argument("xnn model: zero-dimensional direction");
        for (const auto& w : directions)
            if (w.size() != d) throw std::invalid_argument("xnn model: ragged directions");
    }
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("xnn model: input dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

double xnn_eval(const XnnModel& m, const std::vector<double>& x) {
    m.validate();
    double acc = m.mu;
    for (std::size_t k = 0; k < m.n_terms(); ++k)
        acc += m.gammas[k] * activation_eval(m.activation, dot(m.directions[k], x));
    return acc;
}

std::vector<double> term_contributions_xnn(const XnnModel& m, const std::vector<double>& x) {
    m.validate();
    std::vector<double> out;
    out.reserve(m.n_terms());
    for (std::size_t k = 0; k < m.n_terms(); ++k)
        out.push_back(m.gammas[k] * activation_eval(m.activation, dot(m.directions[k], x)));
    return out;
}

XnnGradient xnn_gradient(const XnnModel& m, const std::vector<double>& x, double target) {
    m.validate();
    const double p = xnn_eval(m, x);
    const double outer = 2.0 * (p - target);
    XnnGradient g;
    g.d_mu = outer;
    g.d_gammas.resize(m.n_terms());
    g.d_directions.resize(m.n_terms());
    for (std::size_t k = 0; k < m.n_terms(); ++k) {
        const double t = dot(m.directions[k], x);
        g.d_gammas[k] = outer * activation_eval(m.activation, t);
        const double chain = outer * m.gammas[k] * activation_deriv(m.activation, t);
        g.d_directions[k].resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) g.d_directions[k][i] = chain * x[i];
    }
    return g;
}

}  // namespace qridge
