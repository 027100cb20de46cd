// linalg.hpp
// Small dense complex vector/matrix helpers shared across the library.
// Everything here is sized for statevector work (dimensions up to 2^10),
// so plain row-major storage and O(N^2)/O(N^3) loops are fine.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qridge {

using cdouble = std::complex<double>;
using CVec = std::vector<cdouble>;

struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    CVec data;  // row-major

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cdouble& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static CMatrix identity(std::size_t n);
    CMatrix adjoint() const;
    CVec row(std::size_t i) const;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CVec matvec(const CMatrix& m, const CVec& v);

double vec_norm(const CVec& v);

/// <a|b> = sum_i conj(a_i) b_i
cdouble hermitian_inner(const CVec& a, const CVec& b);

/// Row-as-bra applied to a ket: sum_i row_i x_i (the row already carries the
/// bra coefficients, so no conjugation happens here).
cdouble bra_apply(const CVec& row, const CVec& x);

/// max_ij |(V^dagger V - I)_ij|
double unitarity_defect(const CMatrix& v);

CVec kron(const CVec& a, const CVec& b);

}  // namespace qridge
