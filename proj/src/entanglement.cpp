#include "nwl/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace nwl {

namespace {

ComplexMatrix spin_flipped(const DensityMatrix& rho) {
    const ComplexMatrix yy = tensor_product(ops::pauli_y(), ops::pauli_y());
    return yy * rho.matrix().conjugate() * yy;
}

} // namespace

double ppt_min_eigenvalue(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw DimensionMismatch("partial-transpose criterion expects a two-qubit state");
    const std::vector<double> eig = hermitian_eigenvalues(partial_transpose_b(rho.matrix()));
    return eig.back(); // eigenvalues are sorted descending
}

double concurrence(const DensityMatrix& rho, ConcurrenceMethod method) {
    if (rho.dim() != 4)
        throw DimensionMismatch("concurrence expects a two-qubit state");
    const ComplexMatrix rho_tilde = spin_flipped(rho);

    std::vector<double> lambdas;
    if (method == ConcurrenceMethod::Wootters) {
        // The lambdas are the singular values of m = sqrt(rho~) sqrt(rho):
        // m'm = sqrt(rho) rho~ sqrt(rho). Reading them off the Hermitian
        // dilation [[0, m], [m', 0]] (eigenvalues come in +/- sigma pairs)
        // avoids taking sqrt of a near-zero computed eigenvalue, which would
        // turn round-off into 1e-8-scale errors.
        const ComplexMatrix m = psd_sqrt(rho_tilde) * psd_sqrt(rho.matrix());
        ComplexMatrix dilation(8, 8);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                dilation(i, 4 + j) = m(i, j);
                dilation(4 + i, j) = std::conj(m(j, i));
            }
        }
        const std::vector<double> eig = hermitian_eigenvalues(dilation);
        for (std::size_t k = 0; k < 4; ++k)
            lambdas.push_back(std::max(eig[k], 0.0));
    } else {
        for (double v : hermitian_eigenvalues(rho_tilde))
            lambdas.push_back(std::max(v, 0.0));
    }
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

WernerRegion classify_werner(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("Werner parameter must lie in [0, 1]");
    const double chsh_threshold = 1.0 / std::sqrt(2.0);
    if (p <= 1.0 / 3.0)
        return {WernerRegionKind::I, p};
    if (p <= chsh_threshold)
        return {WernerRegionKind::II, p};
    return {WernerRegionKind::III, p};
}

const char* werner_region_name(WernerRegionKind kind) {
    switch (kind) {
    case WernerRegionKind::I:
        return "I";
    case WernerRegionKind::II:
        return "II";
    case WernerRegionKind::III:
        return "III";
    }
    return "?";
}

EntanglementReport report(const DensityMatrix& rho) {
    const double ppt = ppt_min_eigenvalue(rho);
    return EntanglementReport{ppt, concurrence(rho), ppt < -1e-9};
}

} // namespace nwl
