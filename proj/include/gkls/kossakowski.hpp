#ifndef GKLS_KOSSAKOWSKI_HPP
#define GKLS_KOSSAKOWSKI_HPP

#include <vector>

#include "gkls/matrix.hpp"
#include "gkls/sun_basis.hpp"
#include "gkls/superop.hpp"

namespace gkls {

/// Hermitian M×M coefficient matrix of the GKLS form
///   L[ρ] = ½ Σ_{ik} a_ik (2 F_i ρ F_k − ρ F_k F_i − F_k F_i ρ).
/// Extraction Hermitizes the raw result; the discarded asymmetry is kept in
/// `hermitization_residual` (relative Frobenius).
struct KossakowskiMatrix {
    int n = 0;
    Matrix a;
    double hermitization_residual = 0.0;
};

/// Real affine form of the coherence-vector equation dv/dt = R v + k with
/// v_s = Tr(ρ F_s), R_sm = Tr(F_s L[F_m]) and k_s = Tr(F_s L[I]) / n.
/// Both stored row-major.
struct CoherenceAffineForm {
    int n = 0;
    std::vector<double> r;  // M×M
    std::vector<double> k;  // M

    int m() const { return n * n - 1; }
    double r_at(int s, int mm) const { return r[static_cast<std::size_t>(s) * m() + mm]; }
};

/// The linear map from the vectorized Kossakowski matrix to the vectorized
/// rate matrix, t_square·vec(A) = vec(R), built from the structure constants,
/// plus M augmentation rows (i/n)·f_iks carrying the driving-vector
/// constraints. Composite indices pair row-major: α = s·M + m, β = i·M + k.
struct TransformationTensor {
    int n = 0;
    Matrix t_square;  // M²×M²; rank M²−M by construction
    Matrix t_aug;     // (M²+M)×M²; full column rank
};

/// Method 1: a_ij = Σ_{m=0}^{M} Tr(F_m F_i L[F_m] F_j), the m = 0 term
/// included. Requires validate_dissipator to pass; throws
/// InvalidDissipatorError otherwise.
KossakowskiMatrix kossakowski_trace(const Dissipator& l, const GeneratorBasis& basis);

/// Rate matrix and driving vector of the coherence-vector equation. Throws
/// InvalidDissipatorError when validation fails and std::runtime_error when
/// the defining traces carry imaginary residue ≥ 1e-10 (the map is then not
/// Hermiticity-preserving).
CoherenceAffineForm coherence_form(const Dissipator& l, const GeneratorBasis& basis);

/// Builds the transformation tensor and verifies its rank invariants
/// (exactly M vanishing singular values of the square block, full column
/// rank after augmentation). Throws TensorConstructionError.
TransformationTensor build_tensor(const StructureConstants& sc, int n);

/// Method 2: a = T⁺·[vec(R); k] via the Moore-Penrose pseudo-inverse of the
/// augmented tensor. Throws NotGklsRepresentableError when the linear system
/// is inconsistent (‖T a − r‖ ≥ 1e-9·max(1, ‖r‖)).
KossakowskiMatrix kossakowski_pinv(const CoherenceAffineForm& form,
                                   const TransformationTensor& t);

/// Assembles the GKLS supermatrix generated by a Hermitian A.
Dissipator reconstruct_dissipator(const KossakowskiMatrix& a, const GeneratorBasis& basis,
                                  const VecOrdering& ordering);

}  // namespace gkls

#endif
