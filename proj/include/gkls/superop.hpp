#ifndef GKLS_SUPEROP_HPP
#define GKLS_SUPEROP_HPP

#include <string>
#include <utility>
#include <vector>

#include "gkls/matrix.hpp"

namespace gkls {

/// Bijection between matrix entries (i,j) and vector slots. Two named
/// orderings exist: "row-major" for any n, and "paper-v3" for n = 3 with the
/// slot order (ρ11, ρ22, ρ33, ρ12, ρ21, ρ13, ρ31, ρ23, ρ32).
struct VecOrdering {
    std::string name;
    int n = 0;
    std::vector<int> slot_of;  // slot_of[i*n + j]

    static VecOrdering row_major(int n);
    static VecOrdering paper_v3();

    int slot(int i, int j) const { return slot_of[static_cast<std::size_t>(i) * n + j]; }
    std::pair<int, int> entry(int slot) const;

    friend bool operator==(const VecOrdering& a, const VecOrdering& b) {
        return a.name == b.name && a.n == b.n;
    }
};

/// Dissipative Liouvillian as an n²×n² supermatrix over a declared
/// vectorization ordering.
struct Dissipator {
    int n = 0;
    VecOrdering ordering;
    Matrix matrix;
};

cvector vec(const Matrix& x, const VecOrdering& ordering);
Matrix devec(const cvector& v, const VecOrdering& ordering);

/// devec(L.matrix · vec(X)).
Matrix apply(const Dissipator& l, const Matrix& x);

/// Residuals of the two structural requirements on a dissipator, measured
/// over the full matrix-unit basis relative to max(1, ‖L‖_F):
/// trace-annihilation Tr(L[X]) = 0 and Hermiticity preservation
/// L[X†] = (L[X])†.
struct ValidationReport {
    double trace_residual = 0.0;
    double hermiticity_residual = 0.0;
    bool pass(double tol = 1e-12) const {
        return trace_residual < tol && hermiticity_residual < tol;
    }
};

ValidationReport validate_dissipator(const Dissipator& l);

/// Permutation-conjugated copy L' = P L Pᵀ acting identically in the target
/// ordering.
Dissipator reorder(const Dissipator& l, const VecOrdering& to);

}  // namespace gkls

#endif
