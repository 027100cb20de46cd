// xnn.hpp
// Classical explainable network baseline:
// f(x) = mu + sum_k gamma_k f_k(w_k . x) with a univariate activation per
// term, so every term stays a ridge function of its direction.

#pragma once

#include <string>
#include <vector>

namespace qridge {

enum class Activation { identity, tanh, sigmoid, sine };

double activation_eval(Activation a, double t);
double activation_deriv(Activation a, double t);
std::string activation_name(Activation a);
Activation activation_from_name(const std::string& name);

struct XnnModel {
    double mu = 0.0;
    std::vector<double> gammas;                   // K
    std::vector<std::vector<double>> directions;  // K x d
    Activation activation = Activation::identity;

    std::size_t n_terms() const { return gammas.size(); }
    std::size_t input_dim() const { return directions.empty() ? 0 : directions[0].size(); }
    void validate() const;  // K = 0 is allowed (constant model)
};

double xnn_eval(const XnnModel& m, const std::vector<double>& x);

/// Per-term values gamma_k f_k(w_k . x); mu + their ordered sum equals
/// xnn_eval exactly.
std::vector<double> term_contributions_xnn(const XnnModel& m, const std::vector<double>& x);

/// Analytic gradient of the squared error (f(x) - target)^2.
struct XnnGradient {
    double d_mu = 0.0;
    std::vector<double> d_gammas;
    std::vector<std::vector<double>> d_directions;
};

XnnGradient xnn_gradient(const XnnModel& m, const std::vector<double>& x, double target);

}  // namespace qridge
