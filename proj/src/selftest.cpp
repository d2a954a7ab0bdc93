#include "gkls/selftest.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gkls/cp_analysis.hpp"
#include "gkls/json_io.hpp"
#include "gkls/kossakowski.hpp"
#include "gkls/linalg.hpp"
#include "gkls/models.hpp"
#include "gkls/sun_basis.hpp"
#include "gkls/superop.hpp"
#include "gkls/sweep.hpp"

namespace gkls {

namespace {

std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> dist;
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng), dist(rng));
    return m;
}

Matrix random_hermitian(std::mt19937_64& rng, std::size_t m) {
    const Matrix x = random_matrix(rng, m, m);
    return (x + x.adjoint()) * cplx(0.5);
}

Matrix random_psd(std::mt19937_64& rng, std::size_t m) {
    const Matrix x = random_matrix(rng, m, m);
    return x * x.adjoint();
}

Matrix random_unitary(std::mt19937_64& rng, std::size_t m) {
    return hermitian_eig(random_hermitian(rng, m)).eigenvectors;
}

Matrix random_density(std::mt19937_64& rng, std::size_t n) {
    Matrix rho = random_psd(rng, n);
    const double tr = rho.trace().real();
    rho *= cplx(1.0 / tr);
    return rho;
}

std::vector<PsbrParams> parameter_grid() {
    std::vector<PsbrParams> grid;
    for (double ratio : {0.1, 0.5, 1.0, 2.0, 10.0})
        for (double nbar : {0.0, 0.01, 1.0, 10.0, 100.0})
            for (double p : {0.0, 0.5, 1.0}) {
                PsbrParams params;
                params.gamma1 = ratio;
                params.gamma2 = 1.0;
                params.nbar = nbar;
                params.p = p;
                grid.push_back(params);
            }
    return grid;
}

struct Runner {
    std::ostream& out;
    int failures = 0;

    void check(const std::string& name, const std::function<double()>& residual, double tol) {
        double value = 0.0;
        bool threw = false;
        std::string err;
        try {
            value = residual();
        } catch (const std::exception& e) {
            threw = true;
            err = e.what();
        }
        const bool pass = !threw && value < tol;
        if (!pass) ++failures;
        out << (pass ? "PASS " : "FAIL ") << std::left << std::setw(46) << name;
        if (threw)
            out << "exception: " << err;
        else
            out << std::scientific << std::setprecision(2) << value << " (tol "
                << tol << ")";
        out << "\n";
    }
};

}  // namespace

bool run_selftest(std::ostream& out) {
    Runner run{out};

    // --- generator bases ---
    run.check("basis orthonormality (n=2..6)", [] {
        double worst = 0.0;
        for (int n = 2; n <= 6; ++n) {
            const GeneratorBasis basis = generate_basis(n);
            for (int i = 0; i < n * n; ++i)
                for (int k = 0; k < n * n; ++k) {
                    const cplx t = (basis.f(i) * basis.f(k).adjoint()).trace();
                    worst = std::max(worst, std::abs(t - cplx(i == k ? 1.0 : 0.0)));
                }
        }
        return worst;
    }, 1e-14);

    run.check("commutator closure (n=2,3,4)", [] {
        double worst = 0.0;
        for (int n : {2, 3, 4}) {
            const GeneratorBasis basis = generate_basis(n);
            const StructureConstants sc = structure_constants(basis);
            for (int i = 0; i < sc.m; ++i)
                for (int j = 0; j < sc.m; ++j) {
                    Matrix lhs = basis.f(i + 1) * basis.f(j + 1) -
                                 basis.f(j + 1) * basis.f(i + 1);
                    for (int l = 0; l < sc.m; ++l)
                        lhs -= cplx(0.0, sc.f_at(i, j, l)) * basis.f(l + 1);
                    worst = std::max(worst, lhs.norm_fro());
                }
        }
        return worst;
    }, 1e-12);

    run.check("anticommutator closure (n=2,3,4)", [] {
        double worst = 0.0;
        for (int n : {2, 3, 4}) {
            const GeneratorBasis basis = generate_basis(n);
            const StructureConstants sc = structure_constants(basis);
            for (int i = 0; i < sc.m; ++i)
                for (int j = 0; j < sc.m; ++j) {
                    Matrix lhs = basis.f(i + 1) * basis.f(j + 1) +
                                 basis.f(j + 1) * basis.f(i + 1);
                    if (i == j) lhs -= Matrix::identity(n) * cplx(2.0 / n);
                    for (int l = 0; l < sc.m; ++l)
                        lhs -= cplx(sc.d_at(i, j, l)) * basis.f(l + 1);
                    worst = std::max(worst, lhs.norm_fro());
                }
        }
        return worst;
    }, 1e-12);

    run.check("f antisymmetric / d symmetric (n=2,3,4)", [] {
        double worst = 0.0;
        for (int n : {2, 3, 4}) {
            const StructureConstants sc = structure_constants(generate_basis(n));
            for (int i = 0; i < sc.m; ++i)
                for (int j = 0; j < sc.m; ++j)
                    for (int k = 0; k < sc.m; ++k) {
                        const double f = sc.f_at(i, j, k);
                        worst = std::max({worst, std::abs(f + sc.f_at(j, i, k)),
                                          std::abs(f + sc.f_at(i, k, j)),
                                          std::abs(f - sc.f_at(j, k, i)),
                                          std::abs(f - sc.f_at(k, i, j)),
                                          std::abs(f + sc.f_at(k, j, i))});
                        const double d = sc.d_at(i, j, k);
                        worst = std::max({worst, std::abs(d - sc.d_at(j, i, k)),
                                          std::abs(d - sc.d_at(i, k, j)),
                                          std::abs(d - sc.d_at(j, k, i)),
                                          std::abs(d - sc.d_at(k, i, j)),
                                          std::abs(d - sc.d_at(k, j, i))});
                    }
        }
        return worst;
    }, 1e-13);

    run.check("sum rule (n=2,3)", [] {
        double worst = 0.0;
        for (int n : {2, 3}) {
            const StructureConstants sc = structure_constants(generate_basis(n));
            worst = std::max(worst, check_sum_rule(sc, build_tensor(sc, n)));
        }
        return worst;
    }, 1e-12);

    // --- superoperators ---
    run.check("apply linearity", [] {
        auto rng = make_rng(101);
        PsbrParams params;
        params.gamma1 = 2.0;
        params.gamma2 = 1.0;
        params.nbar = 0.5;
        params.p = 0.7;
        const Dissipator l = v_system_dissipator(params);
        std::normal_distribution<double> dist;
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix x = random_matrix(rng, 3, 3);
            const Matrix y = random_matrix(rng, 3, 3);
            const cplx alpha(dist(rng), dist(rng)), beta(dist(rng), dist(rng));
            const Matrix lhs = apply(l, x * alpha + y * beta);
            const Matrix rhs = apply(l, x) * alpha + apply(l, y) * beta;
            worst = std::max(worst, (lhs - rhs).norm_fro());
        }
        return worst;
    }, 1e-12);

    run.check("reorder preserves spectrum", [] {
        PsbrParams params;
        params.gamma1 = 1.5;
        params.gamma2 = 1.0;
        params.nbar = 1.0;
        params.p = 1.0;
        const Dissipator l = v_system_dissipator(params);
        const Dissipator l2 = reorder(l, VecOrdering::row_major(3));
        // Permutation similarity: compare power-sum traces (which fix the
        // eigenvalue multiset) and singular values.
        double worst = 0.0;
        Matrix pa = l.matrix, pb = l2.matrix;
        for (int k = 1; k <= 9; ++k) {
            worst = std::max(worst, std::abs(pa.trace() - pb.trace()));
            if (k < 9) {
                pa = pa * l.matrix;
                pb = pb * l2.matrix;
            }
        }
        const std::vector<double> sa = singular_values(l.matrix);
        const std::vector<double> sb = singular_values(l2.matrix);
        for (std::size_t i = 0; i < sa.size(); ++i)
            worst = std::max(worst, std::abs(sa[i] - sb[i]));
        return worst;
    }, 1e-10);

    run.check("model dissipators validate on grid", [] {
        double worst = 0.0;
        for (const PsbrParams& params : parameter_grid())
            for (bool v_model : {true, false}) {
                const Dissipator l =
                    v_model ? v_system_dissipator(params) : lambda_system_dissipator(params);
                const ValidationReport rep = validate_dissipator(l);
                worst = std::max({worst, rep.trace_residual, rep.hermiticity_residual});
            }
        return worst;
    }, 1e-12);

    // --- dense linear algebra ---
    run.check("eig trace and Frobenius identities", [] {
        auto rng = make_rng(202);
        double worst = 0.0;
        for (std::size_t m : {2, 5, 16, 33}) {
            const Matrix h = random_hermitian(rng, m);
            const HermitianEig eig = hermitian_eig(h);
            double sum = 0.0, sumsq = 0.0;
            for (double lam : eig.eigenvalues) {
                sum += lam;
                sumsq += lam * lam;
            }
            const double scale = std::max(1.0, h.norm_fro());
            worst = std::max(worst, std::abs(sum - h.trace().real()) / scale);
            worst = std::max(worst,
                             std::abs(sumsq - h.norm_fro() * h.norm_fro()) / (scale * scale));
        }
        return worst;
    }, 1e-10);

    run.check("singular values of M and M+ agree", [] {
        auto rng = make_rng(203);
        double worst = 0.0;
        for (auto [r, c] : {std::pair<int, int>{7, 4}, {4, 7}, {6, 6}}) {
            const Matrix m = random_matrix(rng, r, c);
            const std::vector<double> s1 = singular_values(m);
            const std::vector<double> s2 = singular_values(m.adjoint());
            for (std::size_t i = 0; i < s1.size(); ++i)
                worst = std::max(worst, std::abs(s1[i] - s2[i]));
        }
        return worst;
    }, 1e-10);

    run.check("Penrose conditions on pseudo-inverse", [] {
        auto rng = make_rng(204);
        double worst = 0.0;
        for (auto [r, c] : {std::pair<int, int>{12, 9}, {20, 5}, {8, 8}}) {
            const Matrix t = random_matrix(rng, r, c);
            const Matrix tp = pseudo_inverse(t);
            const double scale = std::max(1.0, t.norm_fro());
            worst = std::max(worst, (t * tp * t - t).norm_fro() / scale);
            worst = std::max(worst, (tp * t * tp - tp).norm_fro() / std::max(1.0, tp.norm_fro()));
            const Matrix ttp = t * tp, tpt = tp * t;
            worst = std::max(worst, (ttp - ttp.adjoint()).norm_fro() / std::max(1.0, ttp.norm_fro()));
            worst = std::max(worst, (tpt - tpt.adjoint()).norm_fro() / std::max(1.0, tpt.norm_fro()));
        }
        return worst;
    }, 1e-9);

    // --- extraction ---
    run.check("method agreement, 100 random dissipators", [] {
        auto rng = make_rng(305);
        double worst = 0.0;
        for (int n : {2, 3}) {
            const GeneratorBasis basis = generate_basis(n);
            const TransformationTensor tensor =
                build_tensor(structure_constants(basis), n);
            const VecOrdering ordering = VecOrdering::row_major(n);
            for (int trial = 0; trial < 50; ++trial) {
                KossakowskiMatrix a{n, random_psd(rng, n * n - 1), 0.0};
                const Dissipator l = reconstruct_dissipator(a, basis, ordering);
                const KossakowskiMatrix at = kossakowski_trace(l, basis);
                const KossakowskiMatrix ap = kossakowski_pinv(coherence_form(l, basis), tensor);
                const double diff = (at.a - ap.a).norm_fro() / std::max(1.0, at.a.norm_fro());
                worst = std::max(worst, diff);
            }
        }
        return worst;
    }, 1e-9);

    run.check("roundtrip reconstruct -> extract", [] {
        auto rng = make_rng(306);
        double worst = 0.0;
        for (int n : {2, 3}) {
            const GeneratorBasis basis = generate_basis(n);
            const VecOrdering ordering = VecOrdering::row_major(n);
            for (int trial = 0; trial < 50; ++trial) {
                // Alternate PSD and indefinite inputs.
                Matrix raw = (trial % 2 == 0) ? random_psd(rng, n * n - 1)
                                              : random_hermitian(rng, n * n - 1);
                KossakowskiMatrix a{n, std::move(raw), 0.0};
                const KossakowskiMatrix back =
                    kossakowski_trace(reconstruct_dissipator(a, basis, ordering), basis);
                worst = std::max(worst, (back.a - a.a).norm_fro());
            }
        }
        return worst;
    }, 1e-10);

    run.check("inverse roundtrip on model dissipators", [] {
        const GeneratorBasis basis = generate_basis(3);
        double worst = 0.0;
        for (const PsbrParams& params : parameter_grid())
            for (bool v_model : {true, false}) {
                const Dissipator l =
                    v_model ? v_system_dissipator(params) : lambda_system_dissipator(params);
                const KossakowskiMatrix a = kossakowski_trace(l, basis);
                const Dissipator back = reconstruct_dissipator(a, basis, l.ordering);
                worst = std::max(worst, (back.matrix - l.matrix).norm_fro());
            }
        return worst;
    }, 1e-10);

    run.check("coherence form consistency", [] {
        auto rng = make_rng(307);
        const GeneratorBasis basis = generate_basis(3);
        PsbrParams params;
        params.gamma1 = 3.0;
        params.gamma2 = 1.0;
        params.nbar = 0.8;
        params.p = 0.6;
        const Dissipator l = v_system_dissipator(params);
        const CoherenceAffineForm form = coherence_form(l, basis);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix rho = random_density(rng, 3);
            const Matrix rhodot = apply(l, rho);
            for (int s = 0; s < 8; ++s) {
                const double direct = (rhodot * basis.f(s + 1)).trace().real();
                double affine = form.k[s];
                for (int mm = 0; mm < 8; ++mm)
                    affine += form.r_at(s, mm) * (rho * basis.f(mm + 1)).trace().real();
                worst = std::max(worst, std::abs(direct - affine));
            }
        }
        return worst;
    }, 1e-11);

    // --- three-level models ---
    run.check("closed-form oracle agreement on grid", [] {
        const GeneratorBasis basis = generate_basis(3);
        double worst = 0.0;
        for (const PsbrParams& params : parameter_grid()) {
            const CoherenceAffineForm generic =
                coherence_form(v_system_dissipator(params), basis);
            const CoherenceAffineForm oracle = v_system_coherence_oracle(params);
            for (std::size_t i = 0; i < generic.r.size(); ++i)
                worst = std::max(worst, std::abs(generic.r[i] - oracle.r[i]));
            for (std::size_t i = 0; i < generic.k.size(); ++i)
                worst = std::max(worst, std::abs(generic.k[i] - oracle.k[i]));
        }
        return worst;
    }, 1e-11);

    run.check("coherence vector layout", [] {
        auto rng = make_rng(308);
        const GeneratorBasis basis = generate_basis(3);
        const double s2 = std::sqrt(2.0);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix rho = random_density(rng, 3);
            const double expected[8] = {
                s2 * rho(0, 1).real(),
                -s2 * rho(0, 1).imag(),
                s2 * 0.5 * (rho(0, 0) - rho(1, 1)).real(),
                s2 * rho(0, 2).real(),
                -s2 * rho(0, 2).imag(),
                s2 * rho(1, 2).real(),
                -s2 * rho(1, 2).imag(),
                s2 / std::sqrt(12.0) * (rho(0, 0) + rho(1, 1) - 2.0 * rho(2, 2)).real(),
            };
            for (int i = 0; i < 8; ++i) {
                const double vi = (rho * basis.f(i + 1)).trace().real();
                worst = std::max(worst, std::abs(vi - expected[i]));
            }
        }
        return worst;
    }, 1e-13);

    // --- CP analysis ---
    run.check("CP verdict invariant under rotation", [] {
        auto rng = make_rng(409);
        double worst = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            const KossakowskiMatrix a{3, random_hermitian(rng, 8), 0.0};
            const Matrix u = random_unitary(rng, 8);
            const KossakowskiMatrix rotated{3, u * a.a * u.adjoint(), 0.0};
            const CpVerdict v1 = cp_verdict(a);
            const CpVerdict v2 = cp_verdict(rotated);
            if (v1.is_cp != v2.is_cp) return 1.0;
            worst = std::max(worst, std::abs(v1.min_eigenvalue - v2.min_eigenvalue));
        }
        return worst;
    }, 1e-10);

    run.check("diagonal form reassembly", [] {
        auto rng = make_rng(410);
        double worst = 0.0;
        for (int n : {2, 3}) {
            const GeneratorBasis basis = generate_basis(n);
            const VecOrdering ordering = VecOrdering::row_major(n);
            for (int trial = 0; trial < 25; ++trial) {
                const KossakowskiMatrix a{n, random_hermitian(rng, n * n - 1), 0.0};
                const LindbladForm form = lindblad_form(a, basis);
                const Matrix id = Matrix::identity(n);
                Matrix super(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
                for (std::size_t k = 0; k < form.rates.size(); ++k) {
                    const Matrix& lk = form.operators[k];
                    const Matrix g = lk.adjoint() * lk;
                    Matrix term = kron(lk, lk.adjoint().transpose());
                    term -= kron(id, g.transpose()) * cplx(0.5);
                    term -= kron(g, id) * cplx(0.5);
                    super += term * cplx(form.rates[k]);
                }
                const Dissipator direct = reconstruct_dissipator(a, basis, ordering);
                worst = std::max(worst, (super - direct.matrix).norm_fro());
            }
        }
        return worst;
    }, 1e-10);

    run.check("restore_cp idempotent", [] {
        auto rng = make_rng(411);
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const KossakowskiMatrix a{3, random_hermitian(rng, 8), 0.0};
            const KossakowskiMatrix once = restore_cp(a);
            const KossakowskiMatrix twice = restore_cp(once);
            worst = std::max(worst, (twice.a - once.a).norm_fro());
        }
        return worst;
    }, 1e-12);

    const auto spectrum_at = [](double ratio, double nbar, double p,
                                const GeneratorBasis& basis) {
        PsbrParams params;
        params.gamma1 = ratio;
        params.gamma2 = 1.0;
        params.nbar = nbar;
        params.p = p;
        return cp_verdict(kossakowski_trace(v_system_dissipator(params), basis)).spectrum;
    };

    run.check("weak-pumping nonzero eigenvalue counts", [&] {
        const GeneratorBasis basis = generate_basis(3);
        const SweepSpec spec = SweepSpec::defaults();
        for (double p : {0.0, 0.5, 1.0}) {
            const int expected = (p == 1.0) ? 2 : 4;
            for (double ratio : spec.ratios) {
                const std::vector<double> ev = spectrum_at(ratio, 0.01, p, basis);
                int count = 0;
                for (double e : ev)
                    if (e > 1e-9 * std::max(1.0, ev.front())) ++count;
                if (count != expected) return 1.0;
            }
        }
        return 0.0;
    }, 0.5);

    run.check("eigenvalues nondecreasing in gamma1/gamma2", [&] {
        const GeneratorBasis basis = generate_basis(3);
        const SweepSpec spec = SweepSpec::defaults();
        double worst = 0.0;
        for (double nbar : spec.nbars)
            for (double p : spec.ps) {
                std::vector<double> prev;
                for (double ratio : spec.ratios) {
                    const std::vector<double> ev = spectrum_at(ratio, nbar, p, basis);
                    if (!prev.empty())
                        for (int i = 0; i < 4; ++i)
                            worst = std::max(worst, prev[i] - ev[i]);
                    prev = ev;
                }
            }
        return worst;
    }, 1e-10);

    run.check("secular crossings and avoided crossing", [&] {
        const GeneratorBasis basis = generate_basis(3);
        // p = 0, gamma1 = gamma2: the four nonzero eigenvalues pair up.
        const std::vector<double> ev = spectrum_at(1.0, 0.01, 0.0, basis);
        double worst = std::max(ev[0] - ev[1], ev[2] - ev[3]);
        // p = 1/2: adjacent nonzero eigenvalues keep a finite gap.
        const SweepSpec spec = SweepSpec::defaults();
        double min_gap = 1e300, lam_max = 0.0;
        for (double ratio : spec.ratios) {
            const std::vector<double> e = spectrum_at(ratio, 0.01, 0.5, basis);
            lam_max = std::max(lam_max, e.front());
            for (int i = 0; i + 1 < 4; ++i) min_gap = std::min(min_gap, e[i] - e[i + 1]);
        }
        if (min_gap < 1e-6 * lam_max) worst = std::max(worst, 1.0);
        return worst;
    }, 1e-10);

    // --- interfaces ---
    run.check("CSV determinism and finiteness", [] {
        SweepSpec spec = SweepSpec::defaults();
        spec.ratios = {0.1, 1.0, 10.0};
        const std::vector<SweepRow> rows1 = run_sweep(spec);
        const std::vector<SweepRow> rows2 = run_sweep(spec);
        std::ostringstream s1, s2;
        write_csv(rows1, true, s1);
        write_csv(rows2, true, s2);
        if (s1.str() != s2.str()) return 1.0;
        for (const SweepRow& row : rows1) {
            if (!std::isfinite(row.ratio) || !std::isfinite(row.min_ev)) return 1.0;
            for (double e : row.ev)
                if (!std::isfinite(e)) return 1.0;
            if (row.vlambda_diff && !std::isfinite(*row.vlambda_diff)) return 1.0;
        }
        return 0.0;
    }, 0.5);

    run.check("liouvillian JSON roundtrip", [] {
        PsbrParams params;
        params.gamma1 = 1.0 / 3.0;
        params.gamma2 = 1.0;
        params.nbar = 0.37;
        params.p = 0.21;
        const Dissipator l = v_system_dissipator(params);
        const Dissipator back = liouvillian_from_json(liouvillian_to_json(l));
        if (back.ordering.name != l.ordering.name || back.n != l.n) return 1.0;
        return back.matrix == l.matrix ? 0.0 : 1.0;  // bit-exact
    }, 0.5);

    out << (run.failures == 0 ? "all checks passed\n"
                              : std::to_string(run.failures) + " check(s) failed\n");
    return run.failures == 0;
}

}  // namespace gkls
