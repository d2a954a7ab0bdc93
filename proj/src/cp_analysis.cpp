#include "gkls/cp_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkls/linalg.hpp"

namespace gkls {

CpVerdict cp_verdict(const KossakowskiMatrix& a, std::optional<double> tol) {
    const HermitianEig eig = hermitian_eig(a.a);
    CpVerdict v;
    v.spectrum = eig.eigenvalues;
    v.min_eigenvalue = eig.eigenvalues.back();
    const double lmax = eig.eigenvalues.front();
    v.tolerance_used = tol.value_or(1e-12 * std::max(1.0, lmax));
    v.is_cp = v.min_eigenvalue >= -v.tolerance_used;
    return v;
}

LindbladForm lindblad_form(const KossakowskiMatrix& a, const GeneratorBasis& basis) {
    if (a.n != basis.n) throw std::invalid_argument("lindblad_form: dimension mismatch");
    const HermitianEig eig = hermitian_eig(a.a);
    const int m = basis.m();
    LindbladForm form;
    form.rates = eig.eigenvalues;
    form.operators.reserve(m);
    for (int k = 0; k < m; ++k) {
        Matrix op(basis.n, basis.n);
        for (int i = 0; i < m; ++i) op += eig.eigenvectors(i, k) * basis.f(i + 1);
        form.operators.push_back(std::move(op));
    }
    return form;
}

KossakowskiMatrix restore_cp(const KossakowskiMatrix& a) {
    const HermitianEig eig = hermitian_eig(a.a);
    if (eig.eigenvalues.back() >= 0.0) return a;  // already PSD
    const std::size_t m = a.a.rows();
    Matrix clipped(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        const double lam = std::max(0.0, eig.eigenvalues[k]);
        if (lam == 0.0) continue;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                clipped(i, j) +=
                    lam * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    KossakowskiMatrix out;
    out.n = a.n;
    out.a = std::move(clipped);
    out.hermitization_residual = 0.0;
    return out;
}

double compare_spectra(const KossakowskiMatrix& a1, const KossakowskiMatrix& a2) {
    if (a1.n != a2.n) throw std::invalid_argument("compare_spectra: dimension mismatch");
    const std::vector<double> e1 = hermitian_eig(a1.a).eigenvalues;
    const std::vector<double> e2 = hermitian_eig(a2.a).eigenvalues;
    double worst = 0.0;
    for (std::size_t i = 0; i < e1.size(); ++i) worst = std::max(worst, std::abs(e1[i] - e2[i]));
    return worst;
}

}  // namespace gkls
