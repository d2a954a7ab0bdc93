#include <doctest.h>

#include <cmath>

#include "gkls/errors.hpp"
#include "gkls/kossakowski.hpp"
#include "gkls/sun_basis.hpp"

using namespace gkls;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("n=2 basis is the scaled Pauli set") {
    const GeneratorBasis basis = generate_basis(2);
    REQUIRE(basis.matrices.size() == 4);
    CHECK(std::abs(basis.f(0)(0, 0) - cplx(1.0 / kSqrt2)) < 1e-15);
    // sigma_x / sqrt(2)
    CHECK(std::abs(basis.f(1)(0, 1) - cplx(1.0 / kSqrt2)) < 1e-15);
    // sigma_y / sqrt(2)
    CHECK(std::abs(basis.f(2)(0, 1) - cplx(0.0, -1.0 / kSqrt2)) < 1e-15);
    // sigma_z / sqrt(2)
    CHECK(std::abs(basis.f(3)(0, 0) - cplx(1.0 / kSqrt2)) < 1e-15);
    CHECK(std::abs(basis.f(3)(1, 1) + cplx(1.0 / kSqrt2)) < 1e-15);
}

TEST_CASE("n=3 basis is orthonormal in the standard order") {
    const GeneratorBasis basis = generate_basis(3);
    REQUIRE(basis.matrices.size() == 9);
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k) {
            const cplx t = (basis.f(i) * basis.f(k).adjoint()).trace();
            CHECK(std::abs(t - cplx(i == k ? 1.0 : 0.0)) < 1e-14);
        }
    // F_3 = diag(1,-1,0)/sqrt(2)
    CHECK(std::abs(basis.f(3)(0, 0) - cplx(1.0 / kSqrt2)) < 1e-15);
    CHECK(std::abs(basis.f(3)(1, 1) + cplx(1.0 / kSqrt2)) < 1e-15);
    CHECK(std::abs(basis.f(3)(2, 2)) < 1e-15);
    // F_1..F_8 traceless
    for (int i = 1; i < 9; ++i) CHECK(std::abs(basis.f(i).trace()) < 1e-15);
}

TEST_CASE("generate_basis rejects n < 2") {
    CHECK_THROWS_AS(generate_basis(1), std::invalid_argument);
    CHECK_THROWS_AS(generate_basis(0), std::invalid_argument);
}

TEST_CASE("structure constants: known values") {
    const StructureConstants sc2 = structure_constants(generate_basis(2));
    CHECK(sc2.f_at(0, 1, 2) == doctest::Approx(kSqrt2).epsilon(1e-13));
    CHECK(sc2.f_at(1, 0, 2) == doctest::Approx(-kSqrt2).epsilon(1e-13));
    for (double d : sc2.d) CHECK(std::abs(d) < 1e-14);

    const StructureConstants sc3 = structure_constants(generate_basis(3));
    CHECK(sc3.f_at(0, 1, 2) == doctest::Approx(kSqrt2).epsilon(1e-13));
    // f_458 = sqrt(3/2) under unit-norm scaling
    CHECK(sc3.f_at(3, 4, 7) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
}

TEST_CASE("structure constants reject a non-orthonormal basis") {
    GeneratorBasis bad = generate_basis(2);
    bad.matrices[1] *= cplx(2.0);
    CHECK_THROWS_AS(structure_constants(bad), InconsistentBasisError);
}

TEST_CASE("sum rule") {
    for (int n : {2, 3}) {
        const StructureConstants sc = structure_constants(generate_basis(n));
        const TransformationTensor t = build_tensor(sc, n);
        const double residual = check_sum_rule(sc, t);
        CHECK(residual < (n == 2 ? 1e-13 : 1e-12));

        TransformationTensor perturbed = t;
        perturbed.t_square(0, 1) += 1e-3;
        CHECK(check_sum_rule(sc, perturbed) >= 1e-4);
    }

    const StructureConstants sc2 = structure_constants(generate_basis(2));
    const TransformationTensor t3 = build_tensor(structure_constants(generate_basis(3)), 3);
    CHECK_THROWS_AS(check_sum_rule(sc2, t3), std::invalid_argument);
}
