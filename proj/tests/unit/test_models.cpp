#include <doctest.h>

#include <cmath>

#include "gkls/kossakowski.hpp"
#include "gkls/models.hpp"
#include "gkls/superop.hpp"

using namespace gkls;

namespace {

PsbrParams reference_params() {
    PsbrParams params;
    params.gamma1 = 1.0;
    params.gamma2 = 1.0;
    params.nbar = 1.0;
    params.p = 1.0;
    return params;
}

}  // namespace

TEST_CASE("V-system entries at the symmetric point") {
    // gamma1 = gamma2 = 1, nbar = 1 (r1 = r2 = 1), p = 1
    const Dissipator l = v_system_dissipator(reference_params());
    CHECK(l.matrix(0, 0).real() == doctest::Approx(-2.0));   // -(r1+gamma1)
    CHECK(l.matrix(0, 3).real() == doctest::Approx(-1.0));   // xi12(1) = -1
    CHECK(l.matrix(2, 0).real() == doctest::Approx(2.0));    // r1+gamma1
    CHECK(l.matrix(2, 3).real() == doctest::Approx(2.0));    // -2 xi12
    CHECK(l.matrix(3, 2).real() == doctest::Approx(1.0));    // p sqrt(r1 r2)
    CHECK(l.matrix(3, 3).real() == doctest::Approx(-2.0));   // -(r1+r2+g1+g2)/2
    CHECK(l.matrix(5, 5).real() == doctest::Approx(-2.0));   // -(2r1+r2+g1)/2
    CHECK(l.matrix(7, 7).real() == doctest::Approx(-2.0));   // -(r1+2r2+g2)/2
    // block-diagonal: no coupling between the 5x5 and 4x4 sectors
    for (int r = 0; r < 5; ++r)
        for (int c = 5; c < 9; ++c) {
            CHECK((l.matrix(r, c) == cplx(0.0)));
            CHECK((l.matrix(c, r) == cplx(0.0)));
        }
}

TEST_CASE("V-system decoupling limits") {
    // p = 0: the 5x5 block splits into a 3x3 population block and singletons
    PsbrParams params = reference_params();
    params.p = 0.0;
    const Dissipator l0 = v_system_dissipator(params);
    for (int r = 0; r < 3; ++r)
        for (int c = 3; c < 5; ++c) {
            CHECK((l0.matrix(r, c) == cplx(0.0)));
            CHECK((l0.matrix(c, r) == cplx(0.0)));
        }
    CHECK((l0.matrix(3, 4) == cplx(0.0)));
    CHECK((l0.matrix(4, 3) == cplx(0.0)));

    // nbar = 0: pure decay, population columns sum to zero
    params = reference_params();
    params.nbar = 0.0;
    const Dissipator ld = v_system_dissipator(params);
    for (int c = 0; c < 3; ++c) {
        cplx colsum = 0.0;
        for (int r = 0; r < 3; ++r) colsum += ld.matrix(r, c);
        CHECK(std::abs(colsum) < 1e-15);
    }
    CHECK((ld.matrix(0, 2) == cplx(0.0)));  // r1 = 0: no pumping from the ground state
}

TEST_CASE("Lambda-system entries at the symmetric point") {
    const Dissipator l = lambda_system_dissipator(reference_params());
    CHECK(l.matrix(0, 2).real() == doctest::Approx(2.0));    // r1 + gamma1
    CHECK(l.matrix(0, 0).real() == doctest::Approx(-1.0));   // -r1
    CHECK(l.matrix(3, 3).real() == doctest::Approx(-1.0));   // -(r1+r2)/2
    CHECK(l.matrix(3, 2).real() == doctest::Approx(2.0));    // -2 xi12 = p(r12+g12)
    CHECK(l.matrix(0, 3).real() == doctest::Approx(-0.5));   // -(p/2) sqrt(r1 r2)
    CHECK(l.matrix(5, 5).real() == doctest::Approx(-2.5));   // -(g1+g2+2r1+r2)/2

    // p = 0 decoupling, as in the V case
    PsbrParams params = reference_params();
    params.p = 0.0;
    const Dissipator l0 = lambda_system_dissipator(params);
    for (int r = 0; r < 3; ++r)
        for (int c = 3; c < 5; ++c) {
            CHECK((l0.matrix(r, c) == cplx(0.0)));
            CHECK((l0.matrix(c, r) == cplx(0.0)));
        }

    // nbar = 0: coherence-coupling entries -(p/2)sqrt(r1 r2) vanish
    params = reference_params();
    params.nbar = 0.0;
    const Dissipator ln = lambda_system_dissipator(params);
    CHECK((ln.matrix(0, 3) == cplx(0.0)));
    CHECK((ln.matrix(5, 7) == cplx(0.0)));
}

TEST_CASE("coherence-vector oracle fixtures") {
    const CoherenceAffineForm form = v_system_coherence_oracle(reference_params());
    CHECK(form.r_at(0, 0) == doctest::Approx(-2.0));                       // R_11
    CHECK(form.r_at(7, 0) == doctest::Approx(-2.0 * std::sqrt(3.0)));      // R_81
    CHECK(form.r_at(3, 3) == doctest::Approx(-2.0));                       // R_44
    CHECK(form.k[0] == doctest::Approx(-std::sqrt(2.0) / 3.0));
    CHECK(form.k[2] == 0.0);  // gamma1 = gamma2
    CHECK(form.k[7] == doctest::Approx(-2.0 / std::sqrt(6.0)));

    PsbrParams asym;
    asym.gamma1 = 2.0;
    asym.gamma2 = 0.5;
    asym.nbar = 0.3;
    asym.p = 0.6;
    const CoherenceAffineForm fa = v_system_coherence_oracle(asym);
    CHECK(fa.k[2] != 0.0);
}

TEST_CASE("oracle agrees with the generic coherence form") {
    const GeneratorBasis basis = generate_basis(3);
    for (double ratio : {0.1, 1.0, 10.0})
        for (double nbar : {0.0, 0.01, 1.0})
            for (double p : {0.0, 0.5, 1.0}) {
                PsbrParams params;
                params.gamma1 = ratio;
                params.gamma2 = 1.0;
                params.nbar = nbar;
                params.p = p;
                const CoherenceAffineForm generic =
                    coherence_form(v_system_dissipator(params), basis);
                const CoherenceAffineForm oracle = v_system_coherence_oracle(params);
                double worst = 0.0;
                for (std::size_t i = 0; i < generic.r.size(); ++i)
                    worst = std::max(worst, std::abs(generic.r[i] - oracle.r[i]));
                for (std::size_t i = 0; i < generic.k.size(); ++i)
                    worst = std::max(worst, std::abs(generic.k[i] - oracle.k[i]));
                CHECK(worst < 1e-11);
            }
}

TEST_CASE("pumping override and parameter validation") {
    PsbrParams params = reference_params();
    params.r1_override = 0.25;
    params.r2_override = 0.75;
    CHECK(params.r1() == 0.25);
    CHECK(params.r2() == 0.75);
    const Dissipator l = v_system_dissipator(params);
    CHECK(l.matrix(0, 0).real() == doctest::Approx(-1.25));  // -(r1+gamma1)

    PsbrParams bad = reference_params();
    bad.gamma1 = 0.0;
    CHECK_THROWS_AS(v_system_dissipator(bad), std::invalid_argument);
    bad = reference_params();
    bad.p = 1.5;
    CHECK_THROWS_AS(lambda_system_dissipator(bad), std::invalid_argument);
    bad = reference_params();
    bad.nbar = -1.0;
    CHECK_THROWS_AS(v_system_coherence_oracle(bad), std::invalid_argument);
}
