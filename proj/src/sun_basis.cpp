#include "gkls/sun_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gkls/errors.hpp"
#include "gkls/kossakowski.hpp"

namespace gkls {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Matrix sym_pair(int n, int j, int k) {
    Matrix s(n, n);
    s(j, k) = kInvSqrt2;
    s(k, j) = kInvSqrt2;
    return s;
}

Matrix asym_pair(int n, int j, int k) {
    Matrix s(n, n);
    s(j, k) = cplx(0.0, -kInvSqrt2);
    s(k, j) = cplx(0.0, kInvSqrt2);
    return s;
}

Matrix diag_gen(int n, int l) {
    // diag(1,...,1,-l,0,...)/sqrt(l(l+1)), with l ones.
    Matrix s(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int k = 0; k < l; ++k) s(k, k) = norm;
    s(l, l) = -l * norm;
    return s;
}

std::vector<Matrix> gell_mann_3() {
    // Standard lambda_1..lambda_8 order, scaled to unit norm.
    return {
        sym_pair(3, 0, 1),  asym_pair(3, 0, 1), diag_gen(3, 1),
        sym_pair(3, 0, 2),  asym_pair(3, 0, 2),
        sym_pair(3, 1, 2),  asym_pair(3, 1, 2), diag_gen(3, 2),
    };
}

double orthonormality_residual(const GeneratorBasis& basis) {
    double worst = 0.0;
    const int count = basis.n * basis.n;
    for (int i = 0; i < count; ++i)
        for (int k = 0; k < count; ++k) {
            const cplx t = (basis.f(i) * basis.f(k).adjoint()).trace();
            const double expect = (i == k) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(t - expect));
        }
    return worst;
}

}  // namespace

GeneratorBasis generate_basis(int n) {
    if (n < 2) throw std::invalid_argument("generate_basis: dimension must be >= 2");
    GeneratorBasis basis;
    basis.n = n;
    Matrix f0 = Matrix::identity(n);
    f0 *= cplx(1.0 / std::sqrt(static_cast<double>(n)));
    basis.matrices.push_back(f0);
    if (n == 3) {
        for (auto& m : gell_mann_3()) basis.matrices.push_back(std::move(m));
        return basis;
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) basis.matrices.push_back(sym_pair(n, j, k));
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) basis.matrices.push_back(asym_pair(n, j, k));
    for (int l = 1; l < n; ++l) basis.matrices.push_back(diag_gen(n, l));
    return basis;
}

StructureConstants structure_constants(const GeneratorBasis& basis) {
    const double ortho = orthonormality_residual(basis);
    if (ortho >= 1e-12)
        throw InconsistentBasisError("structure_constants: basis not orthonormal, residual " +
                                     std::to_string(ortho));
    const int m = basis.m();
    StructureConstants sc;
    sc.m = m;
    sc.f.resize(static_cast<std::size_t>(m) * m * m);
    sc.d.resize(static_cast<std::size_t>(m) * m * m);

    // Precompute pair products once; inner trace is then a single contraction.
    std::vector<Matrix> prod(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            prod[static_cast<std::size_t>(i) * m + j] = basis.f(i + 1) * basis.f(j + 1);

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Matrix comm = prod[static_cast<std::size_t>(i) * m + j] -
                                prod[static_cast<std::size_t>(j) * m + i];
            const Matrix anti = prod[static_cast<std::size_t>(i) * m + j] +
                                prod[static_cast<std::size_t>(j) * m + i];
            for (int k = 0; k < m; ++k) {
                const cplx fv = cplx(0.0, -1.0) * (comm * basis.f(k + 1)).trace();
                const cplx dv = (anti * basis.f(k + 1)).trace();
                if (std::abs(fv.imag()) >= 1e-13 || std::abs(dv.imag()) >= 1e-13)
                    throw InconsistentBasisError(
                        "structure_constants: defining trace has imaginary residue");
                sc.f[(static_cast<std::size_t>(i) * m + j) * m + k] = fv.real();
                sc.d[(static_cast<std::size_t>(i) * m + j) * m + k] = dv.real();
            }
        }
    return sc;
}

double check_sum_rule(const StructureConstants& sc, const TransformationTensor& t) {
    const int m = sc.m;
    if (t.n * t.n - 1 != m)
        throw std::invalid_argument("check_sum_rule: tensor/structure-constant dimension mismatch");
    double worst = 0.0;
    for (int s = 0; s < m; ++s)
        for (int mm = 0; mm < m; ++mm)
            for (int p = 0; p < m; ++p) {
                cplx lhs = 0.0;
                for (int i = 0; i < m; ++i)
                    for (int k = 0; k < m; ++k)
                        lhs += t.t_square(static_cast<std::size_t>(s) * m + mm,
                                          static_cast<std::size_t>(i) * m + k) *
                               sc.f_at(i, k, p);
                const cplx rhs = cplx(0.0, t.n * sc.d_at(mm, s, p) / 2.0);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
    return worst;
}

}  // namespace gkls
