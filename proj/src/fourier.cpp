#include "qridge/fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace qridge {

void FourierRidgeModel::validate() const {
    if (directions.empty()) throw std::invalid_argument("fourier model: needs at least one term");
    if (coefficients.size() != directions.size())
        throw std::invalid_argument("fourier model: coefficient count mismatch");
    const std::size_t d = directions[0].size();
    if (d == 0) throw std::invalid_argument("fourier model: zero-dimensional direction");
    for (const auto& w : directions)
        if (w.size() != d) throw std::invalid_argument("fourier model: ragged directions");
}

cdouble fourier_feature(const std::vector<double>& x, const std::vector<double>& w) {
    if (x.size() != w.size()) throw std::invalid_argument("fourier_feature: dimension mismatch");
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += x[i] * w[i];
    return std::polar(1.0, t);
}

std::vector<double> fourier_term_contributions(const FourierRidgeModel& m,
                                               const std::vector<double>& x) {
    m.validate();
    if (x.size() != m.input_dim())
        throw std::invalid_argument("fourier model: input dimension mismatch");
    std::vector<double> out;
    out.reserve(m.n_terms());
    for (std::size_t k = 0; k < m.n_terms(); ++k)
        out.push_back((m.coefficients[k] * fourier_feature(x, m.directions[k])).real());
    return out;
}

double model_eval(const FourierRidgeModel& m, const std::vector<double>& x) {
    double acc = 0.0;
    for (double v : fourier_term_contributions(m, x)) acc += v;
    return acc;
}

namespace {

// Cyclic Jacobi eigendecomposition of a symmetric matrix (row-major n x n).
// a is overwritten; eigenvectors end up in the columns of v.
void jacobi_eigensymm(std::vector<double>& a, std::size_t n, std::vector<double>& v) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a[i * n + p];
                    const double aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double api = a[p * n + i];
                    const double aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const double vip = v[i * n + p];
                    const double viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }
}

}  // namespace

FourierFit fit_least_squares(const std::vector<std::vector<double>>& directions,
                             const Dataset& data) {
    data.validate();
    if (directions.empty())
        throw std::invalid_argument("fit_least_squares: needs at least one direction");
    const std::size_t d = data.input_dim();
    for (const auto& w : directions)
        if (w.size() != d)
            throw std::invalid_argument("fit_least_squares: direction dimension mismatch");

    const std::size_t m = data.size();
    const std::size_t k = directions.size();
    const std::size_t p = 2 * k;  // (Re c_k, Im c_k) split

    // Real design matrix: prediction_j = sum_k a_k cos(t_jk) - b_k sin(t_jk).
    std::vector<double> design(m * p);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t kk = 0; kk < k; ++kk) {
            double t = 0.0;
            for (std::size_t i = 0; i < d; ++i) t += data.inputs[j][i] * directions[kk][i];
            design[j * p + 2 * kk] = std::cos(t);
            design[j * p + 2 * kk + 1] = -std::sin(t);
        }
    }

    // Normal equations G z = rhs.
    std::vector<double> g(p * p, 0.0);
    std::vector<double> rhs(p, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < p; ++r) {
            const double ajr = design[j * p + r];
            rhs[r] += ajr * data.targets[j];
            for (std::size_t c = r; c < p; ++c) g[r * p + c] += ajr * design[j * p + c];
        }
    }
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < r; ++c) g[r * p + c] = g[c * p + r];

    std::vector<double> evecs;
    jacobi_eigensymm(g, p, evecs);
    double max_eig = 0.0;
    for (std::size_t i = 0; i < p; ++i) max_eig = std::max(max_eig, std::abs(g[i * p + i]));

    // Pseudo-inverse apply: z = V diag(1/lambda) V^T rhs with small
    // eigenvalues dropped; this is the minimum-norm least-squares solution.
    const double cutoff = 1e-12 * max_eig;
    bool deficient = false;
    std::vector<double> z(p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
        const double lam = g[i * p + i];
        if (std::abs(lam) <= cutoff) {
            deficient = true;
            continue;
        }
        double proj = 0.0;
        for (std::size_t r = 0; r < p; ++r) proj += evecs[r * p + i] * rhs[r];
        proj /= lam;
        for (std::size_t r = 0; r < p; ++r) z[r] += evecs[r * p + i] * proj;
    }

    FourierFit fit;
    fit.rank_deficient = deficient;
    fit.model.directions = directions;
    fit.model.coefficients.resize(k);
    for (std::size_t kk = 0; kk < k; ++kk)
        fit.model.coefficients[kk] = cdouble(z[2 * kk], z[2 * kk + 1]);

    double ss = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double r = model_eval(fit.model, data.inputs[j]) - data.targets[j];
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / static_cast<double>(m));
    return fit;
}

}  // namespace qridge
