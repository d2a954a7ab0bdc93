// Command-line front end: model construction, Kossakowski extraction, CP
// audit, parameter sweeps, tensor diagnostics and the invariant suite.
//
// Exit codes: 0 success, 1 selftest failure, 2 usage/input error,
// 3 dissipator validation failure, 4 input not GKLS-representable.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkls/cp_analysis.hpp"
#include "gkls/errors.hpp"
#include "gkls/json_io.hpp"
#include "gkls/kossakowski.hpp"
#include "gkls/linalg.hpp"
#include "gkls/models.hpp"
#include "gkls/selftest.hpp"
#include "gkls/sun_basis.hpp"
#include "gkls/superop.hpp"
#include "gkls/sweep.hpp"

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json matrix_to_json(const gkls::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_matrix(const gkls::Matrix& m, std::ostream& out) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const gkls::cplx v = m(r, c);
            char buf[64];
            std::snprintf(buf, sizeof buf, " %9.5f%+9.5fi", v.real(), v.imag());
            out << buf;
        }
        out << "\n";
    }
}

struct ModelFlags {
    std::string model;
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double nbar = 0.0;
    double p = 0.0;
    std::optional<double> r1, r2;
};

gkls::PsbrParams to_params(const ModelFlags& flags) {
    gkls::PsbrParams params;
    params.gamma1 = flags.gamma1;
    params.gamma2 = flags.gamma2;
    params.nbar = flags.nbar;
    params.p = flags.p;
    params.r1_override = flags.r1;
    params.r2_override = flags.r2;
    return params;
}

int cmd_basis(int n) {
    const gkls::GeneratorBasis basis = gkls::generate_basis(n);
    double ortho = 0.0;
    for (int i = 0; i < n * n; ++i)
        for (int k = 0; k < n * n; ++k) {
            const gkls::cplx t = (basis.f(i) * basis.f(k).adjoint()).trace();
            ortho = std::max(ortho, std::abs(t - gkls::cplx(i == k ? 1.0 : 0.0)));
        }
    std::cout << "generator basis for n = " << n << " (" << n * n << " matrices, F_0 = I/sqrt(n))\n";
    for (int i = 0; i < n * n; ++i) {
        std::cout << "F_" << i << ":\n";
        print_matrix(basis.f(i), std::cout);
    }
    const gkls::StructureConstants sc = gkls::structure_constants(basis);
    int f_nonzero = 0, d_nonzero = 0;
    for (double v : sc.f)
        if (std::abs(v) > 1e-12) ++f_nonzero;
    for (double v : sc.d)
        if (std::abs(v) > 1e-12) ++d_nonzero;
    std::cout << "structure constants: " << f_nonzero << " nonzero f_ijk, " << d_nonzero
              << " nonzero d_ijk\n";
    std::cout << "max orthonormality residual: " << fmt17(ortho) << "\n";
    return ortho < 1e-12 ? 0 : 1;
}

int cmd_kossakowski(const ModelFlags& flags, const std::string& input,
                    const std::string& method, std::optional<double> tol) {
    gkls::Dissipator l;
    if (!input.empty()) {
        l = gkls::load_liouvillian(input);
    } else if (flags.model == "v") {
        l = gkls::v_system_dissipator(to_params(flags));
    } else if (flags.model == "lambda") {
        l = gkls::lambda_system_dissipator(to_params(flags));
    } else {
        throw std::invalid_argument("kossakowski: pass --model v|lambda or --input FILE");
    }

    const gkls::GeneratorBasis basis = gkls::generate_basis(l.n);
    const gkls::ValidationReport rep = gkls::validate_dissipator(l);
    if (!rep.pass())
        throw gkls::InvalidDissipatorError("input Liouvillian failed dissipator validation",
                                           rep.trace_residual, rep.hermiticity_residual);

    std::optional<gkls::KossakowskiMatrix> a_trace, a_pinv;
    if (method == "trace" || method == "both") a_trace = gkls::kossakowski_trace(l, basis);
    if (method == "pinv" || method == "both") {
        const gkls::TransformationTensor tensor =
            gkls::build_tensor(gkls::structure_constants(basis), l.n);
        a_pinv = gkls::kossakowski_pinv(gkls::coherence_form(l, basis), tensor);
    }
    const gkls::KossakowskiMatrix& a = a_trace ? *a_trace : *a_pinv;
    const gkls::CpVerdict verdict = gkls::cp_verdict(a, tol);

    json report;
    report["n"] = l.n;
    report["method"] = method;
    report["kossakowski_matrix"] = matrix_to_json(a.a);
    report["spectrum"] = verdict.spectrum;
    report["is_cp"] = verdict.is_cp;
    report["min_eigenvalue"] = verdict.min_eigenvalue;
    report["cp_tolerance"] = verdict.tolerance_used;
    report["hermitization_residual"] = a.hermitization_residual;
    report["validation"] = {{"trace_residual", rep.trace_residual},
                            {"hermiticity_residual", rep.hermiticity_residual}};
    if (a_trace && a_pinv)
        report["cross_method_discrepancy"] = (a_trace->a - a_pinv->a).norm_fro();
    std::cout << report.dump(1) << "\n";
    return 0;
}

int cmd_sweep(const gkls::SweepSpec& spec, const std::string& out_path) {
    const std::vector<gkls::SweepRow> rows = gkls::run_sweep(spec);
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write CSV to " + out_path);
    gkls::write_csv(rows, spec.include_v && spec.include_lambda, out);
    if (!out) throw std::invalid_argument("write failed for " + out_path);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int cmd_svd_tensor(int n) {
    const gkls::StructureConstants sc = gkls::structure_constants(gkls::generate_basis(n));
    const gkls::TransformationTensor tensor = gkls::build_tensor(sc, n);
    const std::vector<double> sv = gkls::singular_values(tensor.t_square);
    int zeros = 0;
    for (double s : sv)
        if (s < 1e-10 * sv.front()) ++zeros;
    std::cout << "singular values of the transformation tensor, n = " << n << " ("
              << sv.size() << " values):\n";
    for (double s : sv) std::cout << fmt17(s) << "\n";
    std::cout << "values below 1e-10*sigma_max: " << zeros << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kossakowski-matrix tools for Markovian master equations"};
    app.require_subcommand(1);

    int basis_n = 0;
    CLI::App* basis = app.add_subcommand("basis", "print a generator basis and its summary");
    basis->add_option("--n", basis_n, "Hilbert-space dimension")->required();

    ModelFlags flags;
    std::string input, method = "both";
    std::optional<double> tol;
    CLI::App* kossa =
        app.add_subcommand("kossakowski", "extract the Kossakowski matrix, report CP verdict");
    kossa->add_option("--model", flags.model, "built-in model")
        ->check(CLI::IsMember({"v", "lambda"}));
    kossa->add_option("--gamma1", flags.gamma1, "spontaneous emission rate 1");
    kossa->add_option("--gamma2", flags.gamma2, "spontaneous emission rate 2");
    kossa->add_option("--nbar", flags.nbar, "mean photon occupation");
    kossa->add_option("--p", flags.p, "transition-dipole alignment");
    kossa->add_option("--r1", flags.r1, "pumping rate 1 override");
    kossa->add_option("--r2", flags.r2, "pumping rate 2 override");
    kossa->add_option("--input", input, "Liouvillian JSON document");
    kossa->add_option("--method", method, "extraction method")
        ->check(CLI::IsMember({"trace", "pinv", "both"}));
    kossa->add_option("--tol", tol, "CP verdict tolerance");

    gkls::SweepSpec spec = gkls::SweepSpec::defaults();
    std::string sweep_model = "both", sweep_out;
    int ratio_count = 50;
    double ratio_min = 0.1, ratio_max = 10.0;
    CLI::App* sweep = app.add_subcommand("sweep", "Kossakowski spectra over a parameter grid");
    sweep->add_option("--model", sweep_model, "models to sweep")
        ->check(CLI::IsMember({"v", "lambda", "both"}));
    sweep->add_option("--out", sweep_out, "output CSV path")->required();
    sweep->add_option("--gamma2", spec.gamma2, "reference rate gamma2");
    sweep->add_option("--nbar-list", spec.nbars, "nbar grid");
    sweep->add_option("--p-list", spec.ps, "alignment grid");
    sweep->add_option("--ratio-count", ratio_count, "log-spaced ratio points");
    sweep->add_option("--ratio-min", ratio_min, "smallest gamma1/gamma2");
    sweep->add_option("--ratio-max", ratio_max, "largest gamma1/gamma2");

    int svd_n = 0;
    CLI::App* svd = app.add_subcommand("svd-tensor", "singular values of the transformation tensor");
    svd->add_option("--n", svd_n, "Hilbert-space dimension")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the cross-module invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (basis->parsed()) {
            if (basis_n < 2) {
                std::cerr << "error: --n must be >= 2\n";
                return 2;
            }
            return cmd_basis(basis_n);
        }
        if (kossa->parsed()) return cmd_kossakowski(flags, input, method, tol);
        if (sweep->parsed()) {
            spec.include_v = sweep_model != "lambda";
            spec.include_lambda = sweep_model != "v";
            if (ratio_count < 1 || !(ratio_min > 0.0) || !(ratio_max >= ratio_min)) {
                std::cerr << "error: bad ratio grid\n";
                return 2;
            }
            spec.ratios.clear();
            for (int i = 0; i < ratio_count; ++i) {
                const double t = ratio_count == 1 ? 0.0 : static_cast<double>(i) / (ratio_count - 1);
                spec.ratios.push_back(ratio_min * std::pow(ratio_max / ratio_min, t));
            }
            return cmd_sweep(spec, sweep_out);
        }
        if (svd->parsed()) {
            if (svd_n < 2) {
                std::cerr << "error: --n must be >= 2\n";
                return 2;
            }
            return cmd_svd_tensor(svd_n);
        }
        if (selftest->parsed()) return gkls::run_selftest(std::cout) ? 0 : 1;
    } catch (const gkls::InvalidDissipatorError& e) {
        std::cerr << "error: " << e.what() << " (trace residual " << e.trace_residual
                  << ", hermiticity residual " << e.hermiticity_residual << ")\n";
        return 3;
    } catch (const gkls::NotGklsRepresentableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
