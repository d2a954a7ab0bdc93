#ifndef GKLS_SWEEP_HPP
#define GKLS_SWEEP_HPP

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gkls {

/// Parameter sweep over the three-level models: Kossakowski spectra as a
/// function of γ₁/γ₂ for each (n̄, p). Defaults reproduce the reference
/// regimes: 50 log-spaced ratios in [0.1, 10], n̄ ∈ {0.01, 1, 100},
/// p ∈ {0, 0.5, 1}.
struct SweepSpec {
    bool include_v = true;
    bool include_lambda = true;
    std::vector<double> ratios;
    std::vector<double> nbars = {0.01, 1.0, 100.0};
    std::vector<double> ps = {0.0, 0.5, 1.0};
    double gamma2 = 1.0;

    static SweepSpec defaults();
    void validate() const;
};

struct SweepRow {
    std::string model;  // "v" or "lambda"
    double ratio = 0.0;
    double nbar = 0.0;
    double p = 0.0;
    std::array<double, 8> ev{};  // descending
    double min_ev = 0.0;
    bool is_cp = false;
    std::optional<double> vlambda_diff;  // set when both models are swept
};

/// Rows in deterministic order: model (v before lambda), then n̄, then p,
/// then ratio, each ascending.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with 17-significant-digit floats; byte-identical across runs for the
/// same spec. The vlambda column appears only when both models are swept.
void write_csv(const std::vector<SweepRow>& rows, bool both_models, std::ostream& out);

}  // namespace gkls

#endif
