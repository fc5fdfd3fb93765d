#pragma once

#include "nwl/qmath.hpp"

namespace nwl {

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Two-qubit system state cos(theta)|00> + e^(i*phi) sin(theta)|11>.
/// At theta = pi/4, phi = 0 this is the maximally entangled PhiPlus state;
/// at theta = 0 or pi/2 it is a product state.
PureState pure_system_state(double theta, double phi);

PureState bell_state(BellKind kind);

/// Werner mixture p |PsiMinus><PsiMinus| + (1 - p) I/4.
/// OutOfRange unless p lies in [0, 1].
DensityMatrix werner_state(double p);

/// Initial meter state for pointer `which` (1 or 2):
///   1 -> (|00> + |11>)/sqrt(2)   (parity pointer, up/down basis)
///   2 -> (|01> + |10>)/sqrt(2)   (correlation pointer, plus/cross basis)
/// InvalidIndex for any other value.
PureState meter_state(int which);

} // namespace nwl
