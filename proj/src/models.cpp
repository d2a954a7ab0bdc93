#include "gkls/models.hpp"

#include <cmath>
#include <stdexcept>

namespace gkls {

namespace {

double xi12(double p, double r1, double r2, double g1, double g2) {
    return -0.5 * p * (std::sqrt(r1 * r2) + std::sqrt(g1 * g2));
}

void fill_block(Matrix& l, int row0, int col0, std::initializer_list<double> values, int width) {
    int idx = 0;
    for (double v : values) {
        l(row0 + idx / width, col0 + idx % width) = v;
        ++idx;
    }
}

}  // namespace

void PsbrParams::validate() const {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0))
        throw std::invalid_argument("PsbrParams: spontaneous emission rates must be positive");
    if (!(nbar >= 0.0)) throw std::invalid_argument("PsbrParams: nbar must be >= 0");
    if (!(std::abs(p) <= 1.0)) throw std::invalid_argument("PsbrParams: |p| must be <= 1");
    if (!(r1() >= 0.0) || !(r2() >= 0.0))
        throw std::invalid_argument("PsbrParams: pumping rates must be >= 0");
}

Dissipator v_system_dissipator(const PsbrParams& params) {
    params.validate();
    const double g1 = params.gamma1, g2 = params.gamma2;
    const double r1 = params.r1(), r2 = params.r2();
    const double xi = xi12(params.p, r1, r2, g1, g2);
    const double s12 = params.p * std::sqrt(r1 * r2);

    Matrix l(9, 9);
    fill_block(l, 0, 0,
               {-(r1 + g1), 0,          r1,          xi,                             xi,
                0,          -(r2 + g2), r2,          xi,                             xi,
                r1 + g1,    r2 + g2,    -(r1 + r2),  -2 * xi,                        -2 * xi,
                xi,         xi,         s12,         -0.5 * (r1 + r2 + g1 + g2),     0,
                xi,         xi,         s12,         0,      -0.5 * (r1 + r2 + g1 + g2)},
               5);
    // One-photon block. Each coherence rho_i3 dephases with the spontaneous
    // rate of its own excited state, so rho13 carries gamma_1 and rho23
    // carries gamma_2.
    const double d13 = -0.5 * (2 * r1 + r2 + g1);
    const double d23 = -0.5 * (r1 + 2 * r2 + g2);
    fill_block(l, 5, 5,
               {d13, 0,   xi,  0,
                0,   d13, 0,   xi,
                xi,  0,   d23, 0,
                0,   xi,  0,   d23},
               4);
    return Dissipator{3, VecOrdering::paper_v3(), std::move(l)};
}

Dissipator lambda_system_dissipator(const PsbrParams& params) {
    params.validate();
    const double g1 = params.gamma1, g2 = params.gamma2;
    const double r1 = params.r1(), r2 = params.r2();
    const double xi = xi12(params.p, r1, r2, g1, g2);
    const double h12 = -0.5 * params.p * std::sqrt(r1 * r2);

    // Population rows: ground state i loses population only by absorption
    // (rate r_i) and gains from the excited state at r_i + gamma_i.
    Matrix l(9, 9);
    fill_block(l, 0, 0,
               {-r1,  0,    r1 + g1,                  h12,                h12,
                0,    -r2,  r2 + g2,                  h12,                h12,
                r1,   r2,   -(r1 + r2 + g1 + g2),     -2 * h12,           -2 * h12,
                h12,  h12,  -2 * xi,                  -0.5 * (r1 + r2),   0,
                h12,  h12,  -2 * xi,                  0,                  -0.5 * (r1 + r2)},
               5);
    const double d13 = -0.5 * (g1 + g2 + 2 * r1 + r2);
    const double d23 = -0.5 * (g1 + g2 + r1 + 2 * r2);
    fill_block(l, 5, 5,
               {d13, 0,   h12, 0,
                0,   d13, 0,   h12,
                h12, 0,   d23, 0,
                0,   h12, 0,   d23},
               4);
    return Dissipator{3, VecOrdering::paper_v3(), std::move(l)};
}

CoherenceAffineForm v_system_coherence_oracle(const PsbrParams& params) {
    params.validate();
    const double g1 = params.gamma1, g2 = params.gamma2;
    const double r1 = params.r1(), r2 = params.r2();
    const double p = params.p;
    const double g12 = std::sqrt(g1 * g2), r12 = std::sqrt(r1 * r2);
    const double rb = 0.5 * (r1 + r2), gb = 0.5 * (g1 + g2);
    const double sqrt3 = std::sqrt(3.0);

    CoherenceAffineForm form;
    form.n = 3;
    form.r.assign(64, 0.0);
    form.k.assign(8, 0.0);
    auto R = [&form](int s, int m) -> double& { return form.r[(s - 1) * 8 + (m - 1)]; };

    R(1, 1) = -rb - gb;
    R(1, 8) = -p * sqrt3 / 3.0 * (3 * r12 + g12);
    R(2, 2) = -rb - gb;
    R(3, 3) = -rb - gb;
    // From d(v_3)/dt of the population equations: alignment-independent and
    // vanishing at symmetric rates.
    R(3, 8) = sqrt3 / 6.0 * (3 * (r2 - r1) + (g2 - g1));
    R(4, 4) = -0.5 * (2 * r1 + r2 + g1);
    R(4, 6) = -0.5 * p * (r12 + g12);
    R(5, 5) = -0.5 * (2 * r1 + r2 + g1);
    R(5, 7) = -0.5 * p * (r12 + g12);
    R(6, 4) = -0.5 * p * (r12 + g12);
    R(6, 6) = -0.5 * (r1 + 2 * r2 + g2);
    R(7, 5) = -0.5 * p * (r12 + g12);
    R(7, 7) = -0.5 * (r1 + 2 * r2 + g2);
    R(8, 1) = -p * sqrt3 * (r12 + g12);
    // From d(v_8)/dt: negative when transition 1 is the faster one.
    R(8, 3) = -sqrt3 / 2.0 * ((r1 + g1) - (r2 + g2));
    R(8, 8) = -3 * rb - gb;

    form.k[0] = -p * std::sqrt(2.0) / 3.0 * g12;
    form.k[2] = -(g1 - g2) / (3.0 * std::sqrt(2.0));
    form.k[7] = -(g1 + g2) / std::sqrt(6.0);
    return form;
}

}  // namespace gkls
