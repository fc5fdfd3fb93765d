#pragma once

#include "nwl/qmath.hpp"

namespace nwl {

/// Smallest eigenvalue of the partial transpose. Negative (beyond round-off)
/// exactly when a two-qubit state is entangled.
double ppt_min_eigenvalue(const DensityMatrix& rho);

enum class ConcurrenceMethod {
    /// sqrt-eigenvalues of sqrt(rho) * rho_tilde * sqrt(rho), the standard
    /// construction; rho_tilde = (Y (x) Y) conj(rho) (Y (x) Y).
    Wootters,
    /// Eigenvalues of rho_tilde taken directly — a shortcut that agrees with
    /// Wootters on maximally entangled and Werner states but diverges on
    /// generic states (it reports 1 for every pure state). Kept for
    /// comparison; do not use it for anything load-bearing.
    SpinFlipSpectrum,
};

/// Concurrence in [0, 1]; 0 for separable, 1 for maximally entangled.
double concurrence(const DensityMatrix& rho,
                   ConcurrenceMethod method = ConcurrenceMethod::Wootters);

enum class WernerRegionKind { I, II, III };

struct WernerRegion {
    WernerRegionKind kind;
    double p;
};

/// Werner-mixture regimes by mixing parameter, closed intervals:
///   I:   p <= 1/3        separable
///   II:  1/3 < p <= 1/sqrt(2)  entangled, no CHSH violation
///   III: p > 1/sqrt(2)   entangled and CHSH-violating
/// OutOfRange unless p lies in [0, 1].
WernerRegion classify_werner(double p);

const char* werner_region_name(WernerRegionKind kind);

struct EntanglementReport {
    double ppt_min_eigenvalue;
    double concurrence;
    bool is_entangled; // negativity witness: min PT eigenvalue < -1e-9
};

EntanglementReport report(const DensityMatrix& rho);

} // namespace nwl
