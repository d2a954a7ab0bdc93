#ifndef GKLS_CP_ANALYSIS_HPP
#define GKLS_CP_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "gkls/kossakowski.hpp"
#include "gkls/sun_basis.hpp"

namespace gkls {

/// Complete-positivity verdict: the generated map is CP iff the Kossakowski
/// matrix has no eigenvalue below −tolerance.
struct CpVerdict {
    bool is_cp = false;
    double min_eigenvalue = 0.0;
    double tolerance_used = 0.0;
    std::vector<double> spectrum;  // descending
};

/// Diagonal (canonical) form: rates λ_k descending with trace-orthonormal
/// operators L_k = Σ_i U_ik F_i, U the eigenvector matrix of A.
struct LindbladForm {
    std::vector<double> rates;
    std::vector<Matrix> operators;
};

/// Default tolerance is 1e-12·max(1, λ_max).
CpVerdict cp_verdict(const KossakowskiMatrix& a, std::optional<double> tol = std::nullopt);

LindbladForm lindblad_form(const KossakowskiMatrix& a, const GeneratorBasis& basis);

/// Closest positive-semidefinite matrix in Frobenius norm: eigenvalues
/// clipped at zero in the eigenbasis of A.
KossakowskiMatrix restore_cp(const KossakowskiMatrix& a);

/// Max absolute difference between the sorted-descending spectra.
double compare_spectra(const KossakowskiMatrix& a1, const KossakowskiMatrix& a2);

}  // namespace gkls

#endif
