#include "nwl/chsh.hpp"

#include <cmath>

namespace nwl {

namespace {

void require_dichotomic(const ComplexMatrix& a, const char* which) {
    if (a.rows() != 2 || a.cols() != 2)
        throw InvalidObservable(std::string(which) + ": setting must be a 2x2 observable");
    if (a.hermiticity_defect() > 1e-12)
        throw InvalidObservable(std::string(which) + ": setting is not Hermitian");
    if ((a * a).max_abs_diff(ComplexMatrix::identity(2)) > 1e-12)
        throw InvalidObservable(std::string(which) + ": setting must square to identity");
}

} // namespace

ChshSettings standard_settings() {
    const double s = 1.0 / std::sqrt(2.0);
    const ComplexMatrix& x = ops::pauli_x();
    const ComplexMatrix& z = ops::pauli_z();
    return ChshSettings{x, z, -s * (z + x), s * (z - x)};
}

ComplexMatrix chsh_operator(const ChshSettings& settings) {
    require_dichotomic(settings.alice_0, "alice_0");
    require_dichotomic(settings.alice_1, "alice_1");
    require_dichotomic(settings.bob_0, "bob_0");
    require_dichotomic(settings.bob_1, "bob_1");
    return tensor_product(settings.alice_0 + settings.alice_1, settings.bob_0) +
           tensor_product(settings.alice_0 - settings.alice_1, settings.bob_1);
}

double chsh_expectation(const DensityMatrix& rho) {
    return chsh_expectation(rho, standard_settings());
}

double chsh_expectation(const DensityMatrix& rho, const ChshSettings& settings) {
    if (rho.dim() != 4)
        throw DimensionMismatch("CHSH expectation expects a two-qubit state");
    return (chsh_operator(settings) * rho.matrix()).trace().real();
}

bool violates_lhv(double value) {
    const double tsirelson = 2.0 * std::sqrt(2.0);
    if (std::abs(value) > tsirelson + 1e-9)
        throw OutOfPhysicalRange("correlation value exceeds the quantum ceiling 2*sqrt(2)");
    return std::abs(value) > 2.0 + 1e-9;
}

} // namespace nwl
