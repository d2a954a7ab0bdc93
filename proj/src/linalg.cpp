#include "gkls/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gkls/errors.hpp"

namespace gkls {

namespace {

double offdiag_norm(const Matrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing h(p,q). The phase of h(p,q) is
// absorbed into the rotation so the 2x2 subproblem is real symmetric.
void rotate(Matrix& h, Matrix& v, std::size_t p, std::size_t q) {
    const cplx b = h(p, q);
    const double beta = std::abs(b);
    if (beta == 0.0) return;
    const cplx u = b / beta;

    const double alpha = h(p, p).real();
    const double gamma = h(q, q).real();
    const double tau = (gamma - alpha) / (2.0 * beta);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Plane unitary U: U(p,p) = u c, U(p,q) = u s, U(q,p) = -s, U(q,q) = c.
    const std::size_t m = h.rows();
    for (std::size_t k = 0; k < m; ++k) {
        if (k == p || k == q) continue;
        const cplx hkp = h(k, p), hkq = h(k, q);
        h(k, p) = hkp * (u * c) - hkq * s;
        h(k, q) = hkp * (u * s) + hkq * c;
        h(p, k) = std::conj(h(k, p));
        h(q, k) = std::conj(h(k, q));
    }
    h(p, p) = alpha - t * beta;
    h(q, q) = gamma + t * beta;
    h(p, q) = 0.0;
    h(q, p) = 0.0;

    for (std::size_t k = 0; k < m; ++k) {
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * (u * c) - vkq * s;
        v(k, q) = vkp * (u * s) + vkq * c;
    }
}

void fix_phase(Matrix& v, std::size_t col) {
    const std::size_t m = v.rows();
    double colmax = 0.0;
    for (std::size_t i = 0; i < m; ++i) colmax = std::max(colmax, std::abs(v(i, col)));
    if (colmax == 0.0) return;
    for (std::size_t i = 0; i < m; ++i) {
        const cplx z = v(i, col);
        if (std::abs(z) > 1e-12 * colmax) {
            const cplx phase = std::conj(z) / std::abs(z);
            for (std::size_t k = 0; k < m; ++k) v(k, col) *= phase;
            return;
        }
    }
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& h_in) {
    if (!h_in.is_square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    const std::size_t m = h_in.rows();

    const double scale = std::max(1.0, h_in.norm_fro());
    const double herm_res = (h_in - h_in.adjoint()).norm_fro();
    if (herm_res >= 1e-10 * scale)
        throw std::invalid_argument("hermitian_eig: input not Hermitian, residual " +
                                    std::to_string(herm_res));

    Matrix h = (h_in + h_in.adjoint()) * cplx(0.5);
    Matrix v = Matrix::identity(m);

    const double target = 1e-14 * std::max(h.norm_fro(), 1e-300);
    const int max_sweeps = 100;
    int sweep = 0;
    while (offdiag_norm(h) > target) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("hermitian_eig: Jacobi did not converge");
        for (std::size_t p = 0; p + 1 < m; ++p)
            for (std::size_t q = p + 1; q < m; ++q) rotate(h, v, p, q);
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h(a, a).real() > h(b, b).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(m);
    out.eigenvectors = Matrix(m, m);
    for (std::size_t k = 0; k < m; ++k) {
        out.eigenvalues[k] = h(order[k], order[k]).real();
        for (std::size_t i = 0; i < m; ++i) out.eigenvectors(i, k) = v(i, order[k]);
        fix_phase(out.eigenvectors, k);
    }
    return out;
}

std::vector<double> singular_values(const Matrix& m) {
    const bool tall = m.rows() >= m.cols();
    const Matrix gram = tall ? m.adjoint() * m : m * m.adjoint();
    if (gram.rows() == 0) return {};
    HermitianEig eig = hermitian_eig(gram);
    // Gram eigenvalues carry an absolute error of order eps·lambda_max, so
    // anything below that floor is a numerical zero; clamping keeps the
    // analytic zeros from surfacing as sqrt(eps)-sized values.
    const double lmax = std::max(0.0, eig.eigenvalues.front());
    std::vector<double> sv(eig.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i) {
        const double lam = eig.eigenvalues[i];
        sv[i] = (lam < 1e-12 * lmax) ? 0.0 : std::sqrt(lam);
    }
    return sv;
}

Matrix pseudo_inverse(const Matrix& t) {
    if (t.rows() < t.cols())
        throw std::invalid_argument("pseudo_inverse: expected p >= q (tall matrix)");
    const std::vector<double> sv = singular_values(t);
    const double smax = sv.front(), smin = sv.back();
    if (smin <= 1e-10 * smax)
        throw RankDeficiencyError("pseudo_inverse: rank-deficient input, sigma_min/sigma_max = " +
                                      std::to_string(smax > 0.0 ? smin / smax : 0.0),
                                  smin, smax);
    const Matrix th = t.adjoint();
    return solve(th * t, th);
}

namespace {

struct Lu {
    Matrix lu;
    std::vector<std::size_t> perm;
};

Lu factorize(const Matrix& a) {
    if (!a.is_square()) throw std::invalid_argument("solve: matrix not square");
    const std::size_t n = a.rows();
    Lu f{a, std::vector<std::size_t>(n)};
    std::iota(f.perm.begin(), f.perm.end(), 0);
    const double tol = 1e-14 * std::max(1.0, a.max_abs());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(f.lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double cand = std::abs(f.lu(i, k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (best <= tol)
            throw SingularMatrixError("solve: matrix singular to tolerance at pivot " +
                                      std::to_string(k));
        if (piv != k) {
            std::swap(f.perm[k], f.perm[piv]);
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
        }
        const cplx d = f.lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = f.lu(i, k) / d;
            f.lu(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
        }
    }
    return f;
}

cvector back_substitute(const Lu& f, const cvector& b) {
    const std::size_t n = f.lu.rows();
    cvector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu(ii, j) * x[j];
        x[ii] /= f.lu(ii, ii);
    }
    return x;
}

}  // namespace

cvector solve(const Matrix& a, const cvector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    return back_substitute(factorize(a), b);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const Lu f = factorize(a);
    Matrix x(b.rows(), b.cols());
    cvector col(b.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        const cvector xj = back_substitute(f, col);
        for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = xj[i];
    }
    return x;
}

}  // namespace gkls
