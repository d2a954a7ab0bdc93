#include "gkls/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gkls/cp_analysis.hpp"
#include "gkls/models.hpp"

namespace gkls {

SweepSpec SweepSpec::defaults() {
    SweepSpec spec;
    const int points = 50;
    spec.ratios.reserve(points);
    for (int i = 0; i < points; ++i)
        spec.ratios.push_back(std::pow(10.0, -1.0 + 2.0 * i / (points - 1)));
    return spec;
}

void SweepSpec::validate() const {
    if (ratios.empty() || nbars.empty() || ps.empty())
        throw std::invalid_argument("SweepSpec: grids must be nonempty");
    if (!(gamma2 > 0.0)) throw std::invalid_argument("SweepSpec: gamma2 must be positive");
    for (double r : ratios)
        if (!(r > 0.0)) throw std::invalid_argument("SweepSpec: ratios must be positive");
    for (double nb : nbars)
        if (!(nb >= 0.0)) throw std::invalid_argument("SweepSpec: nbar values must be >= 0");
}

namespace {

struct Point {
    std::array<double, 8> ev;
    double min_ev;
    bool is_cp;
};

Point eval_point(bool v_model, double ratio, double nbar, double p, double gamma2,
                 const GeneratorBasis& basis) {
    PsbrParams params;
    params.gamma1 = ratio * gamma2;
    params.gamma2 = gamma2;
    params.nbar = nbar;
    params.p = p;
    const Dissipator l = v_model ? v_system_dissipator(params) : lambda_system_dissipator(params);
    const KossakowskiMatrix a = kossakowski_trace(l, basis);
    const CpVerdict verdict = cp_verdict(a);
    Point pt;
    for (int i = 0; i < 8; ++i) pt.ev[i] = verdict.spectrum[i];
    pt.min_ev = verdict.min_eigenvalue;
    pt.is_cp = verdict.is_cp;
    return pt;
}

double max_sorted_diff(const std::array<double, 8>& a, const std::array<double, 8>& b) {
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const GeneratorBasis basis = generate_basis(3);
    const bool both = spec.include_v && spec.include_lambda;

    std::vector<SweepRow> rows;
    std::vector<const char*> models;
    if (spec.include_v) models.push_back("v");
    if (spec.include_lambda) models.push_back("lambda");

    for (const char* model : models)
        for (double nbar : spec.nbars)
            for (double p : spec.ps)
                for (double ratio : spec.ratios) {
                    const bool is_v = model[0] == 'v';
                    const Point pt = eval_point(is_v, ratio, nbar, p, spec.gamma2, basis);
                    SweepRow row;
                    row.model = model;
                    row.ratio = ratio;
                    row.nbar = nbar;
                    row.p = p;
                    row.ev = pt.ev;
                    row.min_ev = pt.min_ev;
                    row.is_cp = pt.is_cp;
                    if (both) {
                        const Point other =
                            eval_point(!is_v, ratio, nbar, p, spec.gamma2, basis);
                        row.vlambda_diff = max_sorted_diff(pt.ev, other.ev);
                    }
                    rows.push_back(std::move(row));
                }
    return rows;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const std::vector<SweepRow>& rows, bool both_models, std::ostream& out) {
    out << "model,gamma1_over_gamma2,nbar,p";
    for (int i = 1; i <= 8; ++i) out << ",ev" << i;
    out << ",min_ev,is_cp";
    if (both_models) out << ",vlambda_max_spectral_diff";
    out << "\n";
    for (const SweepRow& row : rows) {
        out << row.model << ',' << fmt(row.ratio) << ',' << fmt(row.nbar) << ',' << fmt(row.p);
        for (double e : row.ev) out << ',' << fmt(e);
        out << ',' << fmt(row.min_ev) << ',' << (row.is_cp ? "true" : "false");
        if (both_models) out << ',' << fmt(row.vlambda_diff.value_or(0.0));
        out << "\n";
    }
}

}  // namespace gkls
