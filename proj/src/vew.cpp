#include "nwl/vew.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nwl/rng.hpp"

namespace nwl {

namespace {

std::size_t family_dim(WitnessFamily family) {
    return family == WitnessFamily::ChshForm ? 2 : 3;
}

double norm2(std::span<const double> v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

} // namespace

ComplexMatrix witness_matrix(const WitnessParams& params) {
    if (params.alpha.size() != family_dim(params.family))
        throw LengthMismatch("coefficient count does not match the witness family");
    const ComplexMatrix xx = tensor_product(ops::pauli_x(), ops::pauli_x());
    const ComplexMatrix zz = tensor_product(ops::pauli_z(), ops::pauli_z());
    if (params.family == WitnessFamily::ChshForm)
        return -std::sqrt(2.0) * (params.alpha[0] * zz + params.alpha[1] * xx);
    const ComplexMatrix yy = tensor_product(ops::pauli_y(), ops::pauli_y());
    return params.alpha[0] * xx + params.alpha[1] * yy + params.alpha[2] * zz;
}

double cost(const WitnessParams& params, const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw DimensionMismatch("witness cost expects a two-qubit state");
    return (witness_matrix(params) * rho.matrix()).trace().real();
}

double penalized_objective(const WitnessParams& params, const DensityMatrix& rho,
                           const std::vector<DensityMatrix>& separable_refs,
                           const TrainConfig& cfg) {
    double value = cost(params, rho);
    for (const DensityMatrix& ref : separable_refs)
        value += cfg.penalty_weight * std::abs(cost(params, ref));
    const double excess = std::max(0.0, norm2(params.alpha) - cfg.norm_cap);
    return value + cfg.penalty_weight * excess * excess;
}

MinimizeResult cobyla_minimize(const std::function<double(std::span<const double>)>& objective,
                               std::span<const double> x0, const TrainConfig& cfg) {
    const std::size_t n = x0.size();
    if (n == 0)
        throw LengthMismatch("cannot minimise over zero variables");
    if (cfg.max_evals < n + 2)
        throw OutOfRange("evaluation budget must be at least dim + 2");

    std::size_t evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return objective(std::span<const double>(x));
    };
    auto budget_left = [&](std::size_t need) { return evals + need <= cfg.max_evals; };

    std::vector<double> x(x0.begin(), x0.end());
    double fx = eval(x);
    std::vector<double> best_x = x;
    double best_f = fx;
    auto remember = [&] {
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    };

    double radius = 1.0;
    std::vector<double> fplus(n), grad(n), probe(n), candidate(n);

    while (radius >= cfg.tol && budget_left(n + 1)) {
        // Forward-difference simplex: x plus a step along each coordinate.
        for (std::size_t i = 0; i < n; ++i) {
            probe = x;
            probe[i] += radius;
            fplus[i] = eval(probe);
            grad[i] = (fplus[i] - fx) / radius;
        }

        // Linear-model step to the trust-region boundary.
        double fc = std::numeric_limits<double>::infinity();
        const double gnorm = norm2(grad);
        if (gnorm > 0.0 && budget_left(1)) {
            for (std::size_t i = 0; i < n; ++i)
                candidate[i] = x[i] - radius * grad[i] / gnorm;
            fc = eval(candidate);
        }

        const std::size_t bi = static_cast<std::size_t>(
            std::min_element(fplus.begin(), fplus.end()) - fplus.begin());

        if (fc < fx && fc <= fplus[bi]) {
            x = candidate;
            fx = fc;
            remember();
            continue;
        }
        if (fplus[bi] < fx) {
            x[bi] += radius;
            fx = fplus[bi];
            remember();
            continue;
        }

        // Nothing ahead of us: look backwards before giving up on this radius.
        bool moved = false;
        for (std::size_t i = 0; i < n && budget_left(1); ++i) {
            probe = x;
            probe[i] -= radius;
            const double fm = eval(probe);
            if (fm < fx) {
                x = probe;
                fx = fm;
                remember();
                moved = true;
                break;
            }
        }
        if (!moved)
            radius *= 0.5;
    }

    // Terminal polish: ternary search along each coordinate near the final
    // point. The exact-penalty kinks lie on coordinate hyperplanes, so this
    // sharpens them far beyond what radius-halving alone reaches.
    const double window = 16.0 * cfg.tol;
    for (int sweep = 0; sweep < 2; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            double lo = x[i] - window;
            double hi = x[i] + window;
            while (hi - lo > cfg.tol * 1e-6 && budget_left(2)) {
                const double m1 = lo + (hi - lo) / 3.0;
                const double m2 = hi - (hi - lo) / 3.0;
                probe = x;
                probe[i] = m1;
                const double f1 = eval(probe);
                probe[i] = m2;
                const double f2 = eval(probe);
                if (f1 < f2)
                    hi = m2;
                else
                    lo = m1;
            }
            if (!budget_left(1))
                break;
            probe = x;
            probe[i] = 0.5 * (lo + hi);
            const double fp = eval(probe);
            if (fp < fx) {
                x = probe;
                fx = fp;
                remember();
            }
        }
    }

    return MinimizeResult{best_x, best_f, evals};
}

std::vector<DensityMatrix> computational_basis_refs() {
    std::vector<DensityMatrix> refs;
    refs.reserve(4);
    for (std::size_t i = 0; i < 4; ++i) {
        ComplexMatrix m(4, 4);
        m(i, i) = 1.0;
        refs.emplace_back(std::move(m));
    }
    return refs;
}

std::vector<DensityMatrix> werner_refs() {
    std::vector<DensityMatrix> refs = computational_basis_refs();
    refs.emplace_back(0.25 * ComplexMatrix::identity(4));
    return refs;
}

TrainResult train(const DensityMatrix& rho, WitnessFamily family,
                  const std::vector<DensityMatrix>& separable_refs, const TrainConfig& cfg) {
    const std::size_t dim = family_dim(family);

    std::vector<double> start = cfg.initial_alpha;
    if (start.empty()) {
        if (family == WitnessFamily::ChshForm) {
            start = {4.0, 0.0};
        } else {
            SplitMix64 rng(cfg.seed);
            start.resize(dim);
            for (double& v : start)
                v = rng.next_double(-1.0, 1.0);
        }
    }
    if (start.size() != dim)
        throw LengthMismatch("initial coefficient count does not match the witness family");

    auto objective = [&](std::span<const double> a) {
        return penalized_objective(WitnessParams{family, {a.begin(), a.end()}}, rho,
                                   separable_refs, cfg);
    };
    MinimizeResult min = cobyla_minimize(objective, start, cfg);

    // The soft cap leaves the optimum slightly outside the disk; pull it
    // back radially so the reported coefficients respect the cap exactly.
    const double norm = norm2(min.x);
    if (norm > cfg.norm_cap)
        for (double& v : min.x)
            v *= cfg.norm_cap / norm;

    WitnessParams trained{family, std::move(min.x)};
    TrainResult result;
    result.witness_value = cost(trained, rho);
    result.constraint_residuals.reserve(separable_refs.size());
    for (const DensityMatrix& ref : separable_refs)
        result.constraint_residuals.push_back(std::abs(cost(trained, ref)));
    result.params = std::move(trained);
    result.evals_used = min.evals;
    return result;
}

} // namespace nwl
