#pragma once

#include "nwl/qmath.hpp"

namespace nwl {

/// One CHSH measurement configuration: two observables per side, each a
/// two-outcome (+-1) observable, i.e. Hermitian with A^2 = I.
struct ChshSettings {
    ComplexMatrix alice_0; // Alice's first setting
    ComplexMatrix alice_1; // Alice's second setting
    ComplexMatrix bob_0;   // Bob's first setting
    ComplexMatrix bob_1;   // Bob's second setting
};

/// The settings used throughout this project: Alice measures X and Z, Bob
/// measures -(Z + X)/sqrt(2) and (Z - X)/sqrt(2). With these, the CHSH
/// operator collapses to -sqrt(2) (XX + ZZ), so the whole correlation test
/// reduces to the two joint correlators the device actually measures.
ChshSettings standard_settings();

/// S = (A0 + A1) (x) B0 + (A0 - A1) (x) B1.
/// InvalidObservable if any setting is not Hermitian with A^2 = I (1e-12).
ComplexMatrix chsh_operator(const ChshSettings& settings);

/// Tr(S rho) for the given settings (standard settings by default).
double chsh_expectation(const DensityMatrix& rho);
double chsh_expectation(const DensityMatrix& rho, const ChshSettings& settings);

/// True when |value| exceeds the local-hidden-variable bound 2 (with a 1e-9
/// guard band). OutOfPhysicalRange when |value| exceeds the quantum ceiling
/// 2 sqrt(2) beyond 1e-9.
bool violates_lhv(double value);

} // namespace nwl
