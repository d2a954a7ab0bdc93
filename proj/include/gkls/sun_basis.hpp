#ifndef GKLS_SUN_BASIS_HPP
#define GKLS_SUN_BASIS_HPP

#include <vector>

#include "gkls/matrix.hpp"

namespace gkls {

struct TransformationTensor;

/// Orthonormal Hermitian basis F_0..F_M of n×n matrices, M = n²−1.
/// F_0 = I/√n; F_1..F_M are traceless; Tr(F_i F_k†) = δ_ik.
struct GeneratorBasis {
    int n = 0;
    std::vector<Matrix> matrices;  // F_0 first, then F_1..F_M

    int m() const { return n * n - 1; }
    const Matrix& f(int i) const { return matrices[static_cast<std::size_t>(i)]; }
};

/// Antisymmetric (f) and symmetric (d) structure constants of the traceless
/// part of the basis, f_ijk = −i Tr([F_i,F_j]F_k), d_ijk = Tr({F_i,F_j}F_k),
/// indices 0-based over 1..M of the basis.
struct StructureConstants {
    int m = 0;
    std::vector<double> f;  // m³, index (i*m + j)*m + k
    std::vector<double> d;

    double f_at(int i, int j, int k) const {
        return f[(static_cast<std::size_t>(i) * m + j) * m + k];
    }
    double d_at(int i, int j, int k) const {
        return d[(static_cast<std::size_t>(i) * m + j) * m + k];
    }
};

/// Generalized Gell-Mann construction (unit Hilbert-Schmidt norm). Ordering
/// for general n is all symmetric off-diagonal pairs, then all antisymmetric
/// pairs, then diagonal matrices; n = 3 instead uses the standard λ_1..λ_8
/// ordering so that the three-level coherence-vector layout comes out in the
/// conventional component order.
GeneratorBasis generate_basis(int n);

/// Computes f and d from the defining traces, asserting the imaginary
/// residues vanish. Throws InconsistentBasisError on a non-orthonormal basis.
StructureConstants structure_constants(const GeneratorBasis& basis);

/// Max residual of the sum rule Σ_{ik} T_{sm,ik} f_ikp = i n d_msp / 2 over
/// all (s, m, p).
double check_sum_rule(const StructureConstants& sc, const TransformationTensor& t);

}  // namespace gkls

#endif
