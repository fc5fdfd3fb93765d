#include "nwl/nonlocal.hpp"

#include <cmath>

namespace nwl {

namespace {

ComplexMatrix diag_projector_pair(std::size_t i, std::size_t j, double scale) {
    ComplexMatrix m(4, 4);
    m(i, i) = scale;
    m(j, j) = scale;
    return m;
}

} // namespace

KrausSet kraus_zz() {
    const double s = 1.0 / std::sqrt(2.0);
    KrausSet set;
    set.labels = {"↑↑", "↑↓", "↓↑", "↓↓"};
    // Equal-parity outcomes share (|00><00| + |11><11|)/sqrt(2); odd-parity
    // outcomes share (|01><01| + |10><10|)/sqrt(2).
    set.operators[0] = diag_projector_pair(0, 3, s);
    set.operators[1] = diag_projector_pair(1, 2, s);
    set.operators[2] = diag_projector_pair(1, 2, s);
    set.operators[3] = diag_projector_pair(0, 3, s);
    set.signs = {+1, -1, -1, +1};
    return set;
}

KrausSet kraus_xx() {
    const double q = 1.0 / (2.0 * std::sqrt(2.0));
    const ComplexMatrix ix = tensor_product(ops::pauli_i(), ops::pauli_x());
    const ComplexMatrix xi = tensor_product(ops::pauli_x(), ops::pauli_i());
    const ComplexMatrix sum = q * (ix + xi);
    const ComplexMatrix diff = q * (ix - xi);
    KrausSet set;
    set.labels = {"∘∘", "∘×", "×∘", "××"};
    set.operators[0] = sum;
    set.operators[1] = -1.0 * diff;
    set.operators[2] = diff;
    set.operators[3] = -1.0 * sum;
    set.signs = {+1, -1, -1, +1};
    return set;
}

std::array<double, 4> outcome_probabilities(const DensityMatrix& rho, const KrausSet& meas) {
    if (rho.dim() != 4)
        throw DimensionMismatch("nonlocal measurement expects a two-qubit state");
    std::array<double, 4> probs{};
    for (std::size_t i = 0; i < 4; ++i) {
        const ComplexMatrix& k = meas.operators[i];
        const Complex t = (k.adjoint() * k * rho.matrix()).trace();
        probs[i] = std::max(t.real(), 0.0); // clip -1e-17-style round-off
    }
    return probs;
}

double expectation_from_probs(std::span<const double> probs, std::span<const int> signs) {
    if (probs.size() != signs.size())
        throw DimensionMismatch("probability and sign lists differ in length");
    double total = 0.0;
    double value = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        total += probs[i];
        value += signs[i] * probs[i];
    }
    if (std::abs(total - 1.0) > 1e-6)
        throw NotNormalized("outcome probabilities do not sum to 1 within 1e-6");
    return value;
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const KrausSet& meas) {
    if (rho.dim() != 4)
        throw DimensionMismatch("nonlocal measurement expects a two-qubit state");
    ComplexMatrix out(4, 4);
    for (const ComplexMatrix& k : meas.operators)
        out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(std::move(out));
}

ProtocolResult run_protocol_analytic(const DensityMatrix& rho, XxInput xx_input) {
    const KrausSet zz = kraus_zz();
    const KrausSet xx = kraus_xx();

    const std::array<double, 4> p_zz = outcome_probabilities(rho, zz);
    DensityMatrix rho1 = post_measurement_state(rho, zz);

    const DensityMatrix& xx_state = xx_input == XxInput::PreMeasurement ? rho : rho1;
    const std::array<double, 4> p_xx = outcome_probabilities(xx_state, xx);
    DensityMatrix rho2 = post_measurement_state(rho1, xx);

    return ProtocolResult{
        expectation_from_probs(p_zz, zz.signs),
        expectation_from_probs(p_xx, xx.signs),
        std::move(rho1),
        std::move(rho2),
    };
}

} // namespace nwl
