#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nwl/qmath.hpp"

namespace nwl {

enum class WitnessFamily {
    /// W(a) = -sqrt(2) (a1 ZZ + a2 XX); two coefficients. At a = (1, 1) this
    /// is exactly the collapsed CHSH operator.
    ChshForm,
    /// W(a) = a1 XX + a2 YY + a3 ZZ; three coefficients.
    PauliForm,
};

struct WitnessParams {
    WitnessFamily family;
    std::vector<double> alpha;
};

struct TrainConfig {
    /// Starting coefficients; empty means the family default ((4, 0) for
    /// ChshForm, seed-driven uniforms in [-1, 1) for PauliForm).
    std::vector<double> initial_alpha;
    std::size_t max_evals = 2000;
    double tol = 1e-6;
    double penalty_weight = 10.0;
    double norm_cap = 1.4142135623730951; // sqrt(2): a=(1,1) reproduces CHSH
    std::uint64_t seed = 0;
};

struct TrainResult {
    WitnessParams params; // trained coefficients, ||alpha|| <= norm_cap
    double witness_value; // cost at the trained coefficients (negative flags entanglement)
    std::vector<double> constraint_residuals; // |cost on ref| per separable reference
    std::size_t evals_used;
};

/// LengthMismatch unless alpha has 2 (ChshForm) / 3 (PauliForm) entries.
ComplexMatrix witness_matrix(const WitnessParams& params);

/// Tr(W rho).
double cost(const WitnessParams& params, const DensityMatrix& rho);

/// Training objective: cost on rho, plus penalty_weight times the summed
/// |cost| over the separable references (the zero-expectation constraint as
/// an exact penalty), plus penalty_weight * max(0, ||alpha|| - norm_cap)^2
/// (soft norm cap, so coefficient rescaling cannot fake a violation).
double penalized_objective(const WitnessParams& params, const DensityMatrix& rho,
                           const std::vector<DensityMatrix>& separable_refs,
                           const TrainConfig& cfg);

struct MinimizeResult {
    std::vector<double> x;
    double f;
    std::size_t evals;
};

/// Deterministic derivative-free minimiser: a linear model interpolated on a
/// dim+1 forward-difference simplex drives a trust-region step, with the
/// probe points themselves as fallback moves; the radius halves on failure
/// and the run finishes with a per-coordinate ternary polish at the final
/// radius (the exact-penalty kinks sit on coordinate hyperplanes, so the
/// polish pins them down to ~1e-12). No randomness anywhere: identical
/// inputs give identical output, bit for bit.
///
/// Stops when the radius falls below cfg.tol or the evaluation budget runs
/// out; always returns the best point seen. OutOfRange if
/// cfg.max_evals < dim + 2.
MinimizeResult cobyla_minimize(const std::function<double(std::span<const double>)>& objective,
                               std::span<const double> x0, const TrainConfig& cfg);

/// The four computational-basis projectors |ab><ab| — the separable
/// references every witness is constrained against.
std::vector<DensityMatrix> computational_basis_refs();

/// The same four projectors plus the maximally mixed state, used for
/// Werner-mixture training.
std::vector<DensityMatrix> werner_refs();

/// Full training pipeline: minimise the penalized objective from the
/// configured start, radially project the result onto the norm cap (the
/// soft cap leaves a small overshoot), then report the plain cost and the
/// per-reference residuals at the trained coefficients.
TrainResult train(const DensityMatrix& rho, WitnessFamily family,
                  const std::vector<DensityMatrix>& separable_refs, const TrainConfig& cfg = {});

} // namespace nwl
