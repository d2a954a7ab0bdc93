// Python bindings for the main operations: basis construction, model
// Liouvillians, Kossakowski extraction by both methods, CP analysis.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include "gkls/cp_analysis.hpp"
#include "gkls/errors.hpp"
#include "gkls/kossakowski.hpp"
#include "gkls/linalg.hpp"
#include "gkls/models.hpp"
#include "gkls/sun_basis.hpp"
#include "gkls/superop.hpp"

namespace py = pybind11;

namespace {

using gkls::cplx;
using gkls::Matrix;

py::array_t<cplx> to_numpy(const Matrix& m) {
    py::array_t<cplx> out({m.rows(), m.cols()});
    auto buf = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
    return out;
}

Matrix from_numpy(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
    Matrix m(arr.shape(0), arr.shape(1));
    auto buf = arr.unchecked<2>();
    for (py::ssize_t i = 0; i < arr.shape(0); ++i)
        for (py::ssize_t j = 0; j < arr.shape(1); ++j) m(i, j) = buf(i, j);
    return m;
}

gkls::VecOrdering make_ordering(const std::string& name, int n) {
    if (name == "row-major") return gkls::VecOrdering::row_major(n);
    if (name == "paper-v3") {
        if (n != 3) throw std::invalid_argument("paper-v3 ordering requires n = 3");
        return gkls::VecOrdering::paper_v3();
    }
    throw std::invalid_argument("unknown ordering '" + name + "'");
}

gkls::Dissipator make_dissipator(const py::array_t<cplx, py::array::c_style |
                                                             py::array::forcecast>& arr,
                                 const std::string& ordering) {
    Matrix m = from_numpy(arr);
    if (m.rows() != m.cols()) throw std::invalid_argument("Liouvillian must be square");
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m.rows()))));
    if (static_cast<std::size_t>(n) * n != m.rows())
        throw std::invalid_argument("Liouvillian size must be a perfect square");
    return gkls::Dissipator{n, make_ordering(ordering, n), std::move(m)};
}

gkls::PsbrParams make_params(double gamma1, double gamma2, double nbar, double p,
                             std::optional<double> r1, std::optional<double> r2) {
    gkls::PsbrParams params;
    params.gamma1 = gamma1;
    params.gamma2 = gamma2;
    params.nbar = nbar;
    params.p = p;
    params.r1_override = r1;
    params.r2_override = r2;
    return params;
}

gkls::KossakowskiMatrix make_kossa(const py::array_t<cplx, py::array::c_style |
                                                              py::array::forcecast>& arr) {
    Matrix a = from_numpy(arr);
    if (a.rows() != a.cols()) throw std::invalid_argument("Kossakowski matrix must be square");
    const int n = static_cast<int>(std::lround(std::sqrt(a.rows() + 1.0)));
    if (static_cast<std::size_t>(n) * n != a.rows() + 1)
        throw std::invalid_argument("Kossakowski matrix must be (n^2-1) square");
    return gkls::KossakowskiMatrix{n, std::move(a), 0.0};
}

}  // namespace

PYBIND11_MODULE(pygkls, m) {
    m.doc() = "Kossakowski-matrix extraction and complete-positivity tests for "
              "Markovian master equations";

    py::register_exception<gkls::InvalidDissipatorError>(m, "InvalidDissipatorError",
                                                         PyExc_ValueError);
    py::register_exception<gkls::NotGklsRepresentableError>(m, "NotGklsRepresentableError",
                                                            PyExc_ValueError);
    py::register_exception<gkls::RankDeficiencyError>(m, "RankDeficiencyError", PyExc_ValueError);

    m.def(
        "basis",
        [](int n) {
            const gkls::GeneratorBasis basis = gkls::generate_basis(n);
            py::list out;
            for (const Matrix& f : basis.matrices) out.append(to_numpy(f));
            return out;
        },
        py::arg("n"),
        "Orthonormal generator basis F_0..F_M for dimension n (F_0 = I/sqrt(n)).");

    m.def(
        "structure_constants",
        [](int n) {
            const gkls::StructureConstants sc =
                gkls::structure_constants(gkls::generate_basis(n));
            const std::size_t m3 = sc.m;
            py::array_t<double> f({m3, m3, m3});
            py::array_t<double> d({m3, m3, m3});
            std::copy(sc.f.begin(), sc.f.end(), f.mutable_data());
            std::copy(sc.d.begin(), sc.d.end(), d.mutable_data());
            return py::make_tuple(f, d);
        },
        py::arg("n"), "Antisymmetric and symmetric structure constants (f, d).");

    m.def(
        "v_system_liouvillian",
        [](double gamma1, double gamma2, double nbar, double p, std::optional<double> r1,
           std::optional<double> r2) {
            return to_numpy(
                gkls::v_system_dissipator(make_params(gamma1, gamma2, nbar, p, r1, r2)).matrix);
        },
        py::arg("gamma1"), py::arg("gamma2"), py::arg("nbar"), py::arg("p"),
        py::arg("r1") = std::nullopt, py::arg("r2") = std::nullopt,
        "9x9 V-system dissipator in the paper-v3 ordering "
        "(rho11, rho22, rho33, rho12, rho21, rho13, rho31, rho23, rho32).");

    m.def(
        "lambda_system_liouvillian",
        [](double gamma1, double gamma2, double nbar, double p, std::optional<double> r1,
           std::optional<double> r2) {
            return to_numpy(
                gkls::lambda_system_dissipator(make_params(gamma1, gamma2, nbar, p, r1, r2))
                    .matrix);
        },
        py::arg("gamma1"), py::arg("gamma2"), py::arg("nbar"), py::arg("p"),
        py::arg("r1") = std::nullopt, py::arg("r2") = std::nullopt,
        "9x9 Lambda-system dissipator in the paper-v3 ordering.");

    m.def(
        "kossakowski",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& liouvillian,
           const std::string& ordering, const std::string& method) {
            const gkls::Dissipator l = make_dissipator(liouvillian, ordering);
            const gkls::GeneratorBasis basis = gkls::generate_basis(l.n);
            if (method == "trace") return to_numpy(gkls::kossakowski_trace(l, basis).a);
            if (method == "pinv") {
                const gkls::TransformationTensor tensor =
                    gkls::build_tensor(gkls::structure_constants(basis), l.n);
                return to_numpy(gkls::kossakowski_pinv(gkls::coherence_form(l, basis), tensor).a);
            }
            throw std::invalid_argument("method must be 'trace' or 'pinv'");
        },
        py::arg("liouvillian"), py::arg("ordering") = "paper-v3", py::arg("method") = "trace",
        "Kossakowski matrix of a dissipative Liouvillian supermatrix.");

    m.def(
        "reconstruct_liouvillian",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a,
           const std::string& ordering) {
            const gkls::KossakowskiMatrix kossa = make_kossa(a);
            const gkls::GeneratorBasis basis = gkls::generate_basis(kossa.n);
            return to_numpy(
                gkls::reconstruct_dissipator(kossa, basis, make_ordering(ordering, kossa.n))
                    .matrix);
        },
        py::arg("kossakowski_matrix"), py::arg("ordering") = "paper-v3",
        "GKLS supermatrix generated by a Hermitian Kossakowski matrix.");

    m.def(
        "spectrum",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
            return gkls::hermitian_eig(from_numpy(a)).eigenvalues;
        },
        py::arg("hermitian_matrix"), "Descending eigenvalues of a Hermitian matrix.");

    m.def(
        "cp_verdict",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a,
           std::optional<double> tol) {
            const gkls::CpVerdict v = gkls::cp_verdict(make_kossa(a), tol);
            py::dict out;
            out["is_cp"] = v.is_cp;
            out["min_eigenvalue"] = v.min_eigenvalue;
            out["tolerance_used"] = v.tolerance_used;
            out["spectrum"] = v.spectrum;
            return out;
        },
        py::arg("kossakowski_matrix"), py::arg("tol") = std::nullopt,
        "Complete-positivity verdict from the Kossakowski spectrum.");

    m.def(
        "lindblad_form",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
            const gkls::KossakowskiMatrix kossa = make_kossa(a);
            const gkls::LindbladForm form =
                gkls::lindblad_form(kossa, gkls::generate_basis(kossa.n));
            py::list ops;
            for (const Matrix& op : form.operators) ops.append(to_numpy(op));
            return py::make_tuple(form.rates, ops);
        },
        py::arg("kossakowski_matrix"),
        "Canonical diagonal form: (rates, operators), rates descending.");

    m.def(
        "restore_cp",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
            return to_numpy(gkls::restore_cp(make_kossa(a)).a);
        },
        py::arg("kossakowski_matrix"),
        "Closest PSD Kossakowski matrix (negative eigenvalues clipped).");

    m.def(
        "transformation_tensor",
        [](int n) {
            const gkls::TransformationTensor t =
                gkls::build_tensor(gkls::structure_constants(gkls::generate_basis(n)), n);
            return py::make_tuple(to_numpy(t.t_square), to_numpy(t.t_aug));
        },
        py::arg("n"), "The (square, augmented) transformation tensors for dimension n.");

    m.def(
        "singular_values",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& m_in) {
            return gkls::singular_values(from_numpy(m_in));
        },
        py::arg("matrix"), "Descending singular values.");
}
