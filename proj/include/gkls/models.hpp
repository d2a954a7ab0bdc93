#ifndef GKLS_MODELS_HPP
#define GKLS_MODELS_HPP

#include <optional>

#include "gkls/kossakowski.hpp"
#include "gkls/superop.hpp"

namespace gkls {

/// Parameters of the partial secular Bloch-Redfield three-level models.
/// Pumping rates default to the blackbody-occupation scaling r_i = n̄·γ_i;
/// explicit overrides take precedence. `delta` (the excited/ground
/// splitting) is carried for bookkeeping only — it belongs to the
/// Hamiltonian part and never enters the dissipator.
struct PsbrParams {
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double nbar = 0.0;
    double p = 0.0;
    double delta = 0.0;
    std::optional<double> r1_override;
    std::optional<double> r2_override;

    double r1() const { return r1_override.value_or(nbar * gamma1); }
    double r2() const { return r2_override.value_or(nbar * gamma2); }
    void validate() const;
};

/// V system: excited states 1,2; ground state 3. The 9×9 supermatrix is
/// block-diagonal in the paper-v3 ordering: a 5×5 block on populations and
/// two-photon coherences and a 4×4 block on one-photon coherences.
Dissipator v_system_dissipator(const PsbrParams& params);

/// Λ system: ground states 1,2; excited state 3. Same block structure.
Dissipator lambda_system_dissipator(const PsbrParams& params);

/// Closed-form rate matrix and driving vector of the V-system
/// coherence-vector equation, written out entry by entry and independent of
/// the generic trace-based path. Two entries (R_38, R_83) are taken from the
/// equations of motion directly; see the comments at the definitions.
CoherenceAffineForm v_system_coherence_oracle(const PsbrParams& params);

}  // namespace gkls

#endif
