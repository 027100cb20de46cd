// fourier.hpp
// Exponential ridge model: f(x) = Re( sum_k c_k exp(i x . w_k) ) with real
// directions w_k and complex coefficients c_k.

#pragma once

#include "qridge/dataset.hpp"
#include "qridge/linalg.hpp"

#include <vector>

namespace qridge {

struct FourierRidgeModel {
    std::vector<std::vector<double>> directions;  // K x d
    std::vector<cdouble> coefficients;            // K

    std::size_t n_terms() const { return directions.size(); }
    std::size_t input_dim() const { return directions.empty() ? 0 : directions[0].size(); }
    void validate() const;
};

/// exp(i x . w); always unit modulus.
cdouble fourier_feature(const std::vector<double>& x, const std::vector<double>& w);

/// Per-term values Re(c_k exp(i x . w_k)) in term order.
std::vector<double> fourier_term_contributions(const FourierRidgeModel& m,
                                               const std::vector<double>& x);

/// Sum of the contributions, accumulated in term order.
double model_eval(const FourierRidgeModel& m, const std::vector<double>& x);

struct FourierFit {
    FourierRidgeModel model;
    double residual_rms = 0.0;  // sqrt(mean squared residual) over the dataset
    bool rank_deficient = false;
};

/// Least-squares coefficients for fixed directions via the normal equations
/// on the real/imaginary split; rank-deficient systems are solved in the
/// minimum-norm sense and flagged.
FourierFit fit_least_squares(const std::vector<std::vector<double>>& directions,
                             const Dataset& data);

}  // namespace qridge
