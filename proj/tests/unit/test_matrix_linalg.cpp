#include <doctest.h>

#include <cmath>
#include <random>

#include "gkls/errors.hpp"
#include "gkls/kossakowski.hpp"
#include "gkls/linalg.hpp"
#include "gkls/matrix.hpp"
#include "gkls/sun_basis.hpp"

using namespace gkls;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> dist;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    Matrix a(2, 3);
    a(0, 1) = cplx(1.0, 2.0);
    CHECK((a.adjoint()(1, 0) == cplx(1.0, -2.0)));
    CHECK((a.transpose()(1, 0) == cplx(1.0, 2.0)));

    const Matrix id = Matrix::identity(3);
    CHECK((id.trace() == cplx(3.0)));
    CHECK((id * id - id).norm_fro() == 0.0);

    // kron against a hand-computed 2x2 case
    Matrix x(2, 2), y(2, 2);
    x(0, 1) = 2.0;
    y(1, 0) = cplx(0.0, 1.0);
    const Matrix k = kron(x, y);
    CHECK(k.rows() == 4);
    CHECK((k(1, 2) == cplx(0.0, 2.0)));
    CHECK(k.norm_fro() == doctest::Approx(2.0));
}

TEST_CASE("solve: identity, diagonal, random well-conditioned") {
    CHECK((solve(Matrix::identity(3), cvector{1.0, 2.0, 3.0})[2] == cplx(3.0)));

    Matrix d(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    const cvector x = solve(d, cvector{2.0, 4.0});
    CHECK(std::abs(x[0] - cplx(1.0)) < 1e-15);
    CHECK(std::abs(x[1] - cplx(1.0)) < 1e-15);

    std::mt19937_64 rng(7);
    const Matrix a = random_matrix(rng, 64, 64) + Matrix::identity(64) * cplx(8.0);
    const cvector x_true = random_matrix(rng, 64, 1).data();
    const cvector b = a * x_true;
    const cvector x_got = solve(a, b);
    double bnorm = 0.0, rnorm = 0.0;
    const cvector back = a * x_got;
    for (std::size_t i = 0; i < b.size(); ++i) {
        bnorm += std::norm(b[i]);
        rnorm += std::norm(back[i] - b[i]);
    }
    CHECK(std::sqrt(rnorm) < 1e-10 * std::sqrt(bnorm));
}

TEST_CASE("solve: singular matrix rejected") {
    Matrix s(2, 2);
    s(0, 0) = 1.0;
    s(0, 1) = 2.0;
    s(1, 0) = 2.0;
    s(1, 1) = 4.0;
    CHECK_THROWS_AS(solve(s, cvector{1.0, 1.0}), SingularMatrixError);
}

TEST_CASE("hermitian_eig: fixtures") {
    Matrix d(3, 3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const HermitianEig eig = hermitian_eig(d);
    CHECK(eig.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(1.0));

    Matrix sx(2, 2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    const HermitianEig ex = hermitian_eig(sx);
    CHECK(ex.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(ex.eigenvalues[1] == doctest::Approx(-1.0));

    // Kossakowski matrix of the decay channel: (gamma/2)[[1,i],[-i,1]] + 0.
    const double gamma = 0.7;
    Matrix a(3, 3);
    a(0, 0) = gamma / 2;
    a(1, 1) = gamma / 2;
    a(0, 1) = cplx(0.0, gamma / 2);
    a(1, 0) = cplx(0.0, -gamma / 2);
    const HermitianEig ea = hermitian_eig(a);
    CHECK(ea.eigenvalues[0] == doctest::Approx(gamma).epsilon(1e-12));
    CHECK(std::abs(ea.eigenvalues[1]) < 1e-12);
    CHECK(std::abs(ea.eigenvalues[2]) < 1e-12);
}

TEST_CASE("hermitian_eig: residuals, unitarity, determinism") {
    std::mt19937_64 rng(11);
    for (std::size_t m : {1, 2, 9, 24}) {
        const Matrix x = random_matrix(rng, m, m);
        const Matrix h = (x + x.adjoint()) * cplx(0.5);
        const HermitianEig eig = hermitian_eig(h);

        const Matrix& u = eig.eigenvectors;
        CHECK((u.adjoint() * u - Matrix::identity(m)).norm_fro() < 1e-12 * (1 + double(m)));
        for (std::size_t k = 0; k < m; ++k) {
            cvector col(m);
            for (std::size_t i = 0; i < m; ++i) col[i] = u(i, k);
            const cvector hu = h * col;
            double res = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                res += std::norm(hu[i] - eig.eigenvalues[k] * col[i]);
            CHECK(std::sqrt(res) < 1e-10 * std::max(1.0, h.norm_fro()));
        }

        const HermitianEig again = hermitian_eig(h);
        CHECK(again.eigenvalues == eig.eigenvalues);
        CHECK(again.eigenvectors == eig.eigenvectors);
    }
}

TEST_CASE("hermitian_eig: non-Hermitian input rejected") {
    Matrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(bad), std::invalid_argument);
}

TEST_CASE("singular_values: fixtures") {
    const std::vector<double> si = singular_values(Matrix::identity(4));
    for (double s : si) CHECK(s == doctest::Approx(1.0));

    // rank-1 outer product of unit vectors
    std::mt19937_64 rng(13);
    Matrix u = random_matrix(rng, 5, 1), v = random_matrix(rng, 4, 1);
    u *= cplx(1.0 / u.norm_fro());
    v *= cplx(1.0 / v.norm_fro());
    const Matrix outer = u * v.adjoint();
    const std::vector<double> s = singular_values(outer);
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] < 1e-12);
}

TEST_CASE("pseudo_inverse: fixtures and Penrose conditions") {
    const Matrix pid = pseudo_inverse(Matrix::identity(3));
    CHECK((pid - Matrix::identity(3)).norm_fro() < 1e-12);

    Matrix tall(2, 1);
    tall(0, 0) = 1.0;
    tall(1, 0) = 1.0;
    const Matrix tp = pseudo_inverse(tall);
    CHECK(tp(0, 0).real() == doctest::Approx(0.5));
    CHECK(tp(0, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(tp(0, 0).imag()) < 1e-15);

    // augmented transformation tensor for n = 2: T+T = I_9
    const StructureConstants sc = structure_constants(generate_basis(2));
    const TransformationTensor t = build_tensor(sc, 2);
    CHECK(t.t_aug.rows() == 12);
    CHECK(t.t_aug.cols() == 9);
    const Matrix tplus = pseudo_inverse(t.t_aug);
    CHECK((tplus * t.t_aug - Matrix::identity(9)).norm_fro() < 1e-10);

    std::mt19937_64 rng(17);
    const Matrix r = random_matrix(rng, 10, 6);
    const Matrix rp = pseudo_inverse(r);
    CHECK((r * rp * r - r).norm_fro() < 1e-9 * std::max(1.0, r.norm_fro()));
    CHECK((rp * r * rp - rp).norm_fro() < 1e-9 * std::max(1.0, rp.norm_fro()));
    const Matrix rrp = r * rp;
    const Matrix rpr = rp * r;
    CHECK((rrp - rrp.adjoint()).norm_fro() < 1e-9 * std::max(1.0, rrp.norm_fro()));
    CHECK((rpr - rpr.adjoint()).norm_fro() < 1e-9 * std::max(1.0, rpr.norm_fro()));
}

TEST_CASE("pseudo_inverse: rank-deficient input rejected") {
    Matrix t(3, 2);
    t(0, 0) = 1.0;
    t(1, 0) = 1.0;  // second column identically zero
    CHECK_THROWS_AS(pseudo_inverse(t), RankDeficiencyError);
    CHECK_THROWS_AS(pseudo_inverse(Matrix(2, 3)), std::invalid_argument);
}
