#include "gkls/kossakowski.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gkls/errors.hpp"
#include "gkls/linalg.hpp"

namespace gkls {

namespace {

void require_valid(const Dissipator& l, const char* where) {
    const ValidationReport rep = validate_dissipator(l);
    if (!rep.pass())
        throw InvalidDissipatorError(std::string(where) + ": dissipator failed validation",
                                     rep.trace_residual, rep.hermiticity_residual);
}

void require_basis_match(const Dissipator& l, const GeneratorBasis& basis, const char* where) {
    if (basis.n != l.n)
        throw std::invalid_argument(std::string(where) + ": basis/dissipator dimension mismatch");
}

}  // namespace

KossakowskiMatrix kossakowski_trace(const Dissipator& l, const GeneratorBasis& basis) {
    require_basis_match(l, basis, "kossakowski_trace");
    require_valid(l, "kossakowski_trace");
    const int m = basis.m();

    std::vector<Matrix> lf(m + 1);
    for (int mm = 0; mm <= m; ++mm) lf[mm] = apply(l, basis.f(mm));

    Matrix raw(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            cplx s = 0.0;
            for (int mm = 0; mm <= m; ++mm)
                s += (basis.f(mm) * basis.f(i + 1) * lf[mm] * basis.f(j + 1)).trace();
            raw(i, j) = s;
        }

    KossakowskiMatrix out;
    out.n = l.n;
    const double scale = std::max(1.0, raw.norm_fro());
    out.hermitization_residual = (raw - raw.adjoint()).norm_fro() / scale;
    if (out.hermitization_residual >= 1e-10)
        throw std::runtime_error("kossakowski_trace: extracted matrix not Hermitian, residual " +
                                 std::to_string(out.hermitization_residual));
    out.a = (raw + raw.adjoint()) * cplx(0.5);
    return out;
}

CoherenceAffineForm coherence_form(const Dissipator& l, const GeneratorBasis& basis) {
    require_basis_match(l, basis, "coherence_form");
    require_valid(l, "coherence_form");
    const int m = basis.m();
    CoherenceAffineForm form;
    form.n = l.n;
    form.r.resize(static_cast<std::size_t>(m) * m);
    form.k.resize(m);

    double imag_worst = 0.0;
    const Matrix li = apply(l, Matrix::identity(l.n));
    for (int s = 0; s < m; ++s) {
        const cplx ks = (basis.f(s + 1) * li).trace() / static_cast<double>(l.n);
        imag_worst = std::max(imag_worst, std::abs(ks.imag()));
        form.k[s] = ks.real();
    }
    for (int mm = 0; mm < m; ++mm) {
        const Matrix lf = apply(l, basis.f(mm + 1));
        for (int s = 0; s < m; ++s) {
            const cplx rsm = (basis.f(s + 1) * lf).trace();
            imag_worst = std::max(imag_worst, std::abs(rsm.imag()));
            form.r[static_cast<std::size_t>(s) * m + mm] = rsm.real();
        }
    }
    if (imag_worst >= 1e-10)
        throw std::runtime_error(
            "coherence_form: defining traces carry imaginary residue " +
            std::to_string(imag_worst) + "; map is not Hermiticity-preserving");
    return form;
}

TransformationTensor build_tensor(const StructureConstants& sc, int n) {
    const int m = n * n - 1;
    if (sc.m != m)
        throw std::invalid_argument("build_tensor: structure constants do not match dimension");

    TransformationTensor t;
    t.n = n;
    t.t_square = Matrix(static_cast<std::size_t>(m) * m, static_cast<std::size_t>(m) * m);
    for (int s = 0; s < m; ++s)
        for (int mm = 0; mm < m; ++mm)
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k) {
                    cplx acc = 0.0;
                    for (int ll = 0; ll < m; ++ll) {
                        acc += cplx(sc.f_at(mm, i, ll), sc.d_at(mm, i, ll)) * sc.f_at(k, ll, s);
                        acc += cplx(sc.f_at(k, ll, mm), -sc.d_at(k, ll, mm)) * sc.f_at(i, ll, s);
                    }
                    t.t_square(static_cast<std::size_t>(s) * m + mm,
                               static_cast<std::size_t>(i) * m + k) = -0.25 * acc;
                }

    t.t_aug = Matrix(static_cast<std::size_t>(m) * m + m, static_cast<std::size_t>(m) * m);
    for (std::size_t r = 0; r < t.t_square.rows(); ++r)
        for (std::size_t c = 0; c < t.t_square.cols(); ++c) t.t_aug(r, c) = t.t_square(r, c);
    for (int s = 0; s < m; ++s)
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                t.t_aug(static_cast<std::size_t>(m) * m + s, static_cast<std::size_t>(i) * m + k) =
                    cplx(0.0, sc.f_at(i, k, s) / n);

    const std::vector<double> sv = singular_values(t.t_square);
    int zeros = 0;
    for (double s : sv)
        if (s < 1e-10 * sv.front()) ++zeros;
    if (zeros != m)
        throw TensorConstructionError("build_tensor: square tensor has " + std::to_string(zeros) +
                                      " vanishing singular values, expected " + std::to_string(m));
    const std::vector<double> sva = singular_values(t.t_aug);
    if (sva.back() <= 1e-10 * sva.front())
        throw TensorConstructionError("build_tensor: augmented tensor is column-rank-deficient");
    return t;
}

KossakowskiMatrix kossakowski_pinv(const CoherenceAffineForm& form,
                                   const TransformationTensor& t) {
    if (form.n != t.n)
        throw std::invalid_argument("kossakowski_pinv: form/tensor dimension mismatch");
    const int m = form.m();

    cvector r(static_cast<std::size_t>(m) * m + m);
    for (std::size_t i = 0; i < form.r.size(); ++i) r[i] = form.r[i];
    for (int s = 0; s < m; ++s) r[static_cast<std::size_t>(m) * m + s] = form.k[s];

    const Matrix tplus = pseudo_inverse(t.t_aug);
    const cvector a = tplus * r;

    const cvector back = t.t_aug * a;
    double resid = 0.0;
    double rnorm = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        resid += std::norm(back[i] - r[i]);
        rnorm += std::norm(r[i]);
    }
    resid = std::sqrt(resid);
    rnorm = std::sqrt(rnorm);
    if (resid >= 1e-9 * std::max(1.0, rnorm))
        throw NotGklsRepresentableError(
            "kossakowski_pinv: linear system inconsistent (residual " + std::to_string(resid) +
                "); input Liouvillian is not a GKLS dissipator over this basis",
            resid);

    Matrix raw(m, m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) raw(i, k) = a[static_cast<std::size_t>(i) * m + k];

    KossakowskiMatrix out;
    out.n = form.n;
    out.hermitization_residual = (raw - raw.adjoint()).norm_fro() / std::max(1.0, raw.norm_fro());
    out.a = (raw + raw.adjoint()) * cplx(0.5);
    return out;
}

Dissipator reconstruct_dissipator(const KossakowskiMatrix& a, const GeneratorBasis& basis,
                                  const VecOrdering& ordering) {
    if (a.n != basis.n || ordering.n != basis.n)
        throw std::invalid_argument("reconstruct_dissipator: dimension mismatch");
    const double herm = (a.a - a.a.adjoint()).norm_fro() / std::max(1.0, a.a.norm_fro());
    if (herm >= 1e-10)
        throw std::invalid_argument("reconstruct_dissipator: A not Hermitian, residual " +
                                    std::to_string(herm));
    const int n = basis.n;
    const int m = basis.m();

    // Row-major vec obeys vec(A X B) = (A ⊗ Bᵀ) vec(X); assemble there, then
    // permute into the requested ordering.
    const Matrix id = Matrix::identity(n);
    Matrix super(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            const cplx aik = a.a(i, k);
            if (aik == cplx(0.0)) continue;
            const Matrix& fi = basis.f(i + 1);
            const Matrix& fk = basis.f(k + 1);
            const Matrix g = fk * fi;
            Matrix term = kron(fi, fk.transpose());
            term -= kron(id, g.transpose()) * cplx(0.5);
            term -= kron(g, id) * cplx(0.5);
            super += term * aik;
        }
    Dissipator row_major{n, VecOrdering::row_major(n), std::move(super)};
    if (ordering == row_major.ordering) return row_major;
    return reorder(row_major, ordering);
}

}  // namespace gkls
