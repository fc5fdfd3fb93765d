#pragma once

#include <array>
#include <span>
#include <string>

#include "nwl/qmath.hpp"

namespace nwl {

/// A four-outcome nonlocal measurement: Kraus operators K_i acting on the
/// two-qubit system, outcome labels for reporting, and the +-1 signs that
/// turn the outcome distribution into a correlator expectation value.
struct KrausSet {
    std::array<std::string, 4> labels;
    std::array<ComplexMatrix, 4> operators;
    std::array<int, 4> signs;
};

/// Joint-parity measurement (ZZ). Outcomes ordered (up-up, up-down,
/// down-up, down-down); the equal-parity operators project onto
/// span{|00>,|11>}, the odd-parity ones onto span{|01>,|10>}, each scaled
/// by 1/sqrt(2) so that opposite outcomes share the same POVM element.
KrausSet kraus_zz();

/// Joint XX measurement. Outcomes ordered (oo, ox, xo, xx) in the
/// plus/cross pointer basis; the operators are (IX + XI)/(2 sqrt 2) and
/// (IX - XI)/(2 sqrt 2) up to outcome-dependent signs.
KrausSet kraus_xx();

/// Outcome distribution p_i = Tr(K_i^H K_i rho), clipped of -0.0 noise.
std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const KrausSet& meas);

/// Signed sum of probabilities: sum_i sign_i p_i. NotNormalized if the
/// probabilities do not sum to 1 within 1e-6 (sampled estimates included).
double expectation_from_probs(std::span<const double> probs, std::span<const int> signs);

/// Unconditional post-measurement state sum_i K_i rho K_i^H.
DensityMatrix post_measurement_state(const DensityMatrix& rho, const KrausSet& meas);

/// Which state the XX outcome statistics are computed on. The device
/// measures both pointers on the same preparation, so the pre-measurement
/// state is the default; the sequential variant is kept for comparison.
enum class XxInput { PreMeasurement, AfterZz };

struct ProtocolResult {
    double zz;          // joint-parity correlator
    double xx;          // joint-XX correlator
    DensityMatrix rho1; // state after the ZZ pointer readout
    DensityMatrix rho2; // state after both readouts
};

/// Full analytic protocol on an arbitrary two-qubit state: ZZ statistics,
/// state update, XX statistics, second state update.
ProtocolResult run_protocol_analytic(const DensityMatrix& rho,
                                     XxInput xx_input = XxInput::PreMeasurement);

} // namespace nwl
