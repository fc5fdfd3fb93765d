#include "nwl/states.hpp"

#include <cmath>

namespace nwl {

PureState pure_system_state(double theta, double phi) {
    const Complex phase = std::polar(1.0, phi);
    return PureState(2, {std::cos(theta), 0.0, 0.0, phase * std::sin(theta)});
}

PureState bell_state(BellKind kind) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case BellKind::PhiPlus:
        return PureState(2, {s, 0.0, 0.0, s});
    case BellKind::PhiMinus:
        return PureState(2, {s, 0.0, 0.0, -s});
    case BellKind::PsiPlus:
        return PureState(2, {0.0, s, s, 0.0});
    case BellKind::PsiMinus:
        return PureState(2, {0.0, s, -s, 0.0});
    }
    throw InvalidIndex("unknown Bell state kind");
}

DensityMatrix werner_state(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("Werner parameter must lie in [0, 1]");
    ComplexMatrix m(4, 4);
    // p |PsiMinus><PsiMinus| + (1 - p)/4 I, written out entrywise.
    m(0, 0) = (1.0 - p) / 4.0;
    m(1, 1) = (1.0 + p) / 4.0;
    m(2, 2) = (1.0 + p) / 4.0;
    m(3, 3) = (1.0 - p) / 4.0;
    m(1, 2) = -p / 2.0;
    m(2, 1) = -p / 2.0;
    return DensityMatrix(std::move(m));
}

PureState meter_state(int which) {
    const double s = 1.0 / std::sqrt(2.0);
    if (which == 1)
        return PureState(2, {s, 0.0, 0.0, s});
    if (which == 2)
        return PureState(2, {0.0, s, s, 0.0});
    throw InvalidIndex("meter index must be 1 or 2");
}

} // namespace nwl
