#include <doctest.h>

#include <cmath>
#include <random>

#include "gkls/models.hpp"
#include "gkls/superop.hpp"

using namespace gkls;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> dist;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

// Brute-force 4x4 supermatrix of the two-level decay channel
// gamma(s- rho s+ - 1/2{s+ s-, rho}) in the (excited, ground) basis.
Dissipator decay_channel(double gamma) {
    Matrix sm(2, 2), sp(2, 2);
    sm(1, 0) = 1.0;
    sp(0, 1) = 1.0;
    const VecOrdering ordering = VecOrdering::row_major(2);
    Matrix l(4, 4);
    for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
            Matrix e(2, 2);
            e(c, d) = 1.0;
            const Matrix out =
                (sm * e * sp - (sp * sm * e + e * sp * sm) * cplx(0.5)) * cplx(gamma);
            const cvector col = vec(out, ordering);
            for (int r = 0; r < 4; ++r) l(r, ordering.slot(c, d)) = col[r];
        }
    return Dissipator{2, ordering, std::move(l)};
}

}  // namespace

TEST_CASE("vec orderings") {
    const VecOrdering rm = VecOrdering::row_major(2);
    Matrix id = Matrix::identity(2);
    const cvector v = vec(id, rm);
    CHECK((v == cvector{1.0, 0.0, 0.0, 1.0}));
    CHECK((devec(v, rm) - id).norm_fro() == 0.0);

    const VecOrdering p3 = VecOrdering::paper_v3();
    Matrix x(3, 3);
    x(0, 1) = 1.0;  // rho12
    const cvector vp = vec(x, p3);
    for (int s = 0; s < 9; ++s) CHECK((vp[s] == (s == 3 ? cplx(1.0) : cplx(0.0))));

    cvector e4(9, 0.0);
    e4[3] = 1.0;
    const Matrix back = devec(e4, p3);
    CHECK((back(0, 1) == cplx(1.0)));
    CHECK(back.norm_fro() == 1.0);

    // permutation is a bijection
    std::vector<bool> seen(9, false);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int s = p3.slot(i, j);
            CHECK(!seen[s]);
            seen[s] = true;
            CHECK((p3.entry(s) == std::pair<int, int>(i, j)));
        }

    std::mt19937_64 rng(23);
    const Matrix r = random_matrix(rng, 3);
    CHECK((devec(vec(r, p3), p3) - r).norm_fro() == 0.0);

    CHECK_THROWS_AS(vec(Matrix::identity(2), p3), std::invalid_argument);
    CHECK_THROWS_AS(devec(cvector(5), rm), std::invalid_argument);
}

TEST_CASE("apply") {
    const VecOrdering p3 = VecOrdering::paper_v3();
    const Dissipator zero{3, p3, Matrix(9, 9)};
    std::mt19937_64 rng(29);
    CHECK(apply(zero, random_matrix(rng, 3)).norm_fro() == 0.0);

    // V system at p = 0 applied to diag(0,0,1): populations feed at r_i.
    PsbrParams params;
    params.gamma1 = 1.5;
    params.gamma2 = 0.5;
    params.nbar = 2.0;  // r1 = 3, r2 = 1
    params.p = 0.0;
    const Dissipator lv = v_system_dissipator(params);
    Matrix ground(3, 3);
    ground(2, 2) = 1.0;
    const Matrix out = apply(lv, ground);
    CHECK(out(0, 0).real() == doctest::Approx(3.0));
    CHECK(out(1, 1).real() == doctest::Approx(1.0));
    CHECK(out(2, 2).real() == doctest::Approx(-4.0));
    CHECK(std::abs(out(0, 1)) < 1e-15);

    // decay channel applied to the identity is traceless
    const Dissipator ld = decay_channel(0.8);
    const Matrix on_id = apply(ld, Matrix::identity(2));
    CHECK(std::abs(on_id.trace()) < 1e-15);
    CHECK(on_id(0, 0).real() == doctest::Approx(-0.8));
    CHECK(on_id(1, 1).real() == doctest::Approx(0.8));
}

TEST_CASE("validate_dissipator") {
    PsbrParams params;
    params.gamma1 = 2.0;
    params.gamma2 = 1.0;
    params.nbar = 1.0;
    params.p = 1.0;
    const Dissipator lv = v_system_dissipator(params);
    const ValidationReport rep = validate_dissipator(lv);
    CHECK(rep.trace_residual < 1e-14);
    CHECK(rep.hermiticity_residual < 1e-14);
    CHECK(rep.pass());

    Dissipator broken = lv;
    broken.matrix(0, 0) += 0.1;
    CHECK(validate_dissipator(broken).trace_residual > 0.0);
    CHECK(!validate_dissipator(broken).pass());

    const Dissipator zero{3, VecOrdering::paper_v3(), Matrix(9, 9)};
    const ValidationReport zr = validate_dissipator(zero);
    CHECK(zr.trace_residual == 0.0);
    CHECK(zr.hermiticity_residual == 0.0);
}

TEST_CASE("reorder") {
    PsbrParams params;
    params.gamma1 = 1.0;
    params.gamma2 = 0.3;
    params.nbar = 0.7;
    params.p = 0.5;
    const Dissipator lv = v_system_dissipator(params);

    const Dissipator same = reorder(lv, VecOrdering::paper_v3());
    CHECK((same.matrix - lv.matrix).norm_fro() == 0.0);

    const Dissipator rm = reorder(lv, VecOrdering::row_major(3));
    const Dissipator back = reorder(rm, VecOrdering::paper_v3());
    CHECK((back.matrix - lv.matrix).norm_fro() == 0.0);

    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix x = random_matrix(rng, 3);
        worst = std::max(worst, (apply(rm, x) - apply(lv, x)).norm_fro());
    }
    CHECK(worst < 1e-13);

    CHECK_THROWS_AS(reorder(lv, VecOrdering::row_major(2)), std::invalid_argument);
}
