#include "gkls/superop.hpp"

#include <cmath>
#include <stdexcept>

namespace gkls {

VecOrdering VecOrdering::row_major(int n) {
    if (n < 2) throw std::invalid_argument("VecOrdering: dimension must be >= 2");
    VecOrdering o;
    o.name = "row-major";
    o.n = n;
    o.slot_of.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) o.slot_of[i] = i;
    return o;
}

VecOrdering VecOrdering::paper_v3() {
    VecOrdering o;
    o.name = "paper-v3";
    o.n = 3;
    o.slot_of.assign(9, 0);
    const std::pair<int, int> slots[9] = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0},
                                          {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    for (int s = 0; s < 9; ++s) o.slot_of[slots[s].first * 3 + slots[s].second] = s;
    return o;
}

std::pair<int, int> VecOrdering::entry(int slot) const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (slot_of[static_cast<std::size_t>(i) * n + j] == slot) return {i, j};
    throw std::invalid_argument("VecOrdering: slot out of range");
}

cvector vec(const Matrix& x, const VecOrdering& ordering) {
    const int n = ordering.n;
    if (x.rows() != static_cast<std::size_t>(n) || x.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("vec: matrix/ordering dimension mismatch");
    cvector v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v[ordering.slot(i, j)] = x(i, j);
    return v;
}

Matrix devec(const cvector& v, const VecOrdering& ordering) {
    const int n = ordering.n;
    if (v.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("devec: vector length is not n^2");
    Matrix x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = v[ordering.slot(i, j)];
    return x;
}

Matrix apply(const Dissipator& l, const Matrix& x) {
    return devec(l.matrix * vec(x, l.ordering), l.ordering);
}

ValidationReport validate_dissipator(const Dissipator& l) {
    const int n = l.n;
    const double scale = std::max(1.0, l.matrix.norm_fro());
    ValidationReport rep;
    std::vector<Matrix> images(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Matrix e(n, n);
            e(a, b) = 1.0;
            images[static_cast<std::size_t>(a) * n + b] = apply(l, e);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Matrix& y = images[static_cast<std::size_t>(a) * n + b];
            rep.trace_residual = std::max(rep.trace_residual, std::abs(y.trace()) / scale);
            // L[E_ab†] = L[E_ba] must equal (L[E_ab])†.
            const Matrix& y_swapped = images[static_cast<std::size_t>(b) * n + a];
            rep.hermiticity_residual =
                std::max(rep.hermiticity_residual, (y_swapped - y.adjoint()).norm_fro() / scale);
        }
    return rep;
}

Dissipator reorder(const Dissipator& l, const VecOrdering& to) {
    if (to.n != l.n) throw std::invalid_argument("reorder: ordering dimension mismatch");
    const int nn = l.n * l.n;
    // perm[s_from] = s_to for the same matrix entry.
    std::vector<int> perm(nn);
    for (int i = 0; i < l.n; ++i)
        for (int j = 0; j < l.n; ++j) perm[l.ordering.slot(i, j)] = to.slot(i, j);
    Matrix out(nn, nn);
    for (int r = 0; r < nn; ++r)
        for (int c = 0; c < nn; ++c) out(perm[r], perm[c]) = l.matrix(r, c);
    return Dissipator{l.n, to, std::move(out)};
}

}  // namespace gkls
