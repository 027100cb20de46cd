#include "qridge/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qridge {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

CVec CMatrix::row(std::size_t i) const {
    if (i >= rows) throw std::out_of_range("CMatrix::row: index out of range");
    return CVec(data.begin() + static_cast<std::ptrdiff_t>(i * cols),
                data.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: dimension mismatch");
    CMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cdouble aik = a.at(i, k);
            if (aik == cdouble{}) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

CVec matvec(const CMatrix& m, const CVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
    CVec out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        cdouble acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double vec_norm(const CVec& v) {
    double acc = 0.0;
    for (const auto& c : v) acc += std::norm(c);
    return std::sqrt(acc);
}

cdouble hermitian_inner(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hermitian_inner: dimension mismatch");
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

cdouble bra_apply(const CVec& row, const CVec& x) {
    if (row.size() != x.size()) throw std::invalid_argument("bra_apply: dimension mismatch");
    cdouble acc = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * x[i];
    return acc;
}

double unitarity_defect(const CMatrix& v) {
    if (v.rows != v.cols) throw std::invalid_argument("unitarity_defect: matrix not square");
    const std::size_t n = v.rows;
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // (V^dagger V)_ij = sum_k conj(V_ki) V_kj
            cdouble acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(v.at(k, i)) * v.at(k, j);
            if (i == j) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

CVec kron(const CVec& a, const CVec& b) {
    CVec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

}  // namespace qridge
