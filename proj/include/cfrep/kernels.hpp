// Data-parallel kernels behind the matrix layer.
//
// Each kernel exists twice: `serial::` is the straightforward reference
// and `parallel::` splits the outer loop across OpenMP threads. Results
// are bit-identical; the unit tests compare them and bench/ times them.

#pragma once

#include <span>
#include <vector>

#include "cfrep/sparse.hpp"

namespace cfrep::kernels {

namespace serial {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

/// Kronecker product of square monomial factors; factor 0 is the most
/// significant digit of the global index.
MonomialMatrix kron(std::span<const MonomialMatrix> factors);

/// sum_{t=0}^{n-1} coeffs[t] * M^t for a monomial M.
SparseMatrix power_combination(const MonomialMatrix& m, std::span<const Scalar> coeffs);

}  // namespace serial

namespace parallel {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
MonomialMatrix kron(std::span<const MonomialMatrix> factors);
SparseMatrix power_combination(const MonomialMatrix& m, std::span<const Scalar> coeffs);

}  // namespace parallel

}  // namespace cfrep::kernels
