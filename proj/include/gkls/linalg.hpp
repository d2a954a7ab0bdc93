#ifndef GKLS_LINALG_HPP
#define GKLS_LINALG_HPP

#include <vector>

#include "gkls/matrix.hpp"

namespace gkls {

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; column k of `eigenvectors` belongs to eigenvalues[k].
/// Each eigenvector is phase-fixed so that its first component of
/// significant magnitude is real and positive, which makes the output
/// deterministic for identical input.
struct HermitianEig {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
};

/// Cyclic complex Jacobi. Input is Hermitized as (H + H†)/2 after checking
/// ‖H − H†‖ < 1e-10·max(1, ‖H‖); beyond that throws std::invalid_argument.
HermitianEig hermitian_eig(const Matrix& h);

/// Singular values of a p×q matrix, descending, via the eigenvalues of the
/// smaller Gram matrix. Values below 1e-15·σ_max are clamped to exactly 0.
std::vector<double> singular_values(const Matrix& m);

/// Moore-Penrose pseudo-inverse of a tall full-column-rank matrix,
/// computed as (T†T)⁻¹T†. Throws RankDeficiencyError when
/// σ_min ≤ 1e-10·σ_max.
Matrix pseudo_inverse(const Matrix& t);

/// Solve A x = b by LU with partial row pivoting. Throws SingularMatrixError.
cvector solve(const Matrix& a, const cvector& b);

/// Multi-RHS variant: solves A X = B column by column with one factorization.
Matrix solve(const Matrix& a, const Matrix& b);

}  // namespace gkls

#endif
