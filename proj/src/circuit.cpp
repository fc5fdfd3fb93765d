#include "nwl/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nwl/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nwl {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits_ == 0)
        throw DimensionMismatch("circuit needs at least one qubit");
}

void Circuit::check_qubit(std::size_t q) const {
    if (q >= n_qubits_)
        throw InvalidIndex("qubit index outside the register");
}

Circuit& Circuit::h(std::size_t q) {
    check_qubit(q);
    gates_.push_back({"h", {q}, {}, {}});
    return *this;
}

Circuit& Circuit::x(std::size_t q) {
    check_qubit(q);
    gates_.push_back({"x", {q}, {}, {}});
    return *this;
}

Circuit& Circuit::sdg(std::size_t q) {
    check_qubit(q);
    gates_.push_back({"sdg", {q}, {}, {}});
    return *this;
}

Circuit& Circuit::u3(double theta, double phi, double lambda, std::size_t q) {
    check_qubit(q);
    gates_.push_back({"u3", {q}, {}, {theta, phi, lambda}});
    return *this;
}

Circuit& Circuit::cx(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target)
        throw InvalidIndex("cx control and target must differ");
    gates_.push_back({"cx", {target}, {control}, {}});
    return *this;
}

Circuit& Circuit::measure(std::vector<std::size_t> qubits) {
    for (std::size_t q : qubits)
        check_qubit(q);
    std::vector<std::size_t> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidIndex("duplicate qubit in readout list");
    measured_ = std::move(qubits);
    return *this;
}

ComplexMatrix u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = c;
    m(0, 1) = -std::polar(1.0, lambda) * s;
    m(1, 0) = std::polar(1.0, phi) * s;
    m(1, 1) = std::polar(1.0, phi + lambda) * c;
    return m;
}

Circuit build_protocol_circuit(double theta, double phi) {
    Circuit c(6);
    // System pair: u3 doubles the angle so the prepared state carries
    // cos(theta), sin(theta) amplitudes (not half-angle ones).
    c.u3(2.0 * theta, phi, 0.0, 0);
    c.cx(0, 1);
    // Parity pointer in (|00> + |11>)/sqrt(2).
    c.h(2);
    c.cx(2, 3);
    // XX pointer in (|01> + |10>)/sqrt(2).
    c.h(4);
    c.x(5);
    c.cx(4, 5);
    // First coupling: system drives the parity pointer.
    c.cx(0, 2);
    c.cx(1, 3);
    // Second coupling: XX pointer drives the system (inverted CX).
    c.cx(4, 0);
    c.cx(5, 1);
    // Rotate the XX pointer into its readout basis.
    c.h(4);
    c.h(5);
    c.measure({2, 3, 4, 5});
    return c;
}

namespace {

using Amp = std::vector<Complex>;
using Mat2 = std::array<Complex, 4>; // row-major 2x2

// ---- serial reference kernels -------------------------------------------
//
// Straight sweep over the full index space, skipping the half where the
// target bit is set. Kept deliberately simple; the OpenMP variants below are
// checked against these in the tests.

void apply_1q_serial(Amp& amp, std::size_t mask, const Mat2& u) {
    const std::size_t dim = amp.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask)
            continue;
        const Complex a0 = amp[i];
        const Complex a1 = amp[i | mask];
        amp[i] = u[0] * a0 + u[1] * a1;
        amp[i | mask] = u[2] * a0 + u[3] * a1;
    }
}

void apply_controlled_1q_serial(Amp& amp, std::size_t cmask, std::size_t tmask, const Mat2& u) {
    const std::size_t dim = amp.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & cmask) || (i & tmask))
            continue;
        const Complex a0 = amp[i];
        const Complex a1 = amp[i | tmask];
        amp[i] = u[0] * a0 + u[1] * a1;
        amp[i | tmask] = u[2] * a0 + u[3] * a1;
    }
}

// ---- OpenMP kernels ------------------------------------------------------
//
// Iterate over amplitude pairs directly: the pair index is split at the
// target bit and re-interleaved, so every iteration touches a disjoint
// (i0, i1) pair and the loop parallelises without any synchronisation.

void apply_1q_parallel(Amp& amp, std::size_t mask, const Mat2& u) {
    const std::size_t pairs = amp.size() >> 1;
    const std::size_t lo = mask - 1;         // bits below the target
    const std::size_t hi = ~lo;              // bits at/above the target (pre-shift)
    Complex* a = amp.data();
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(pairs); ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        const std::size_t i0 = ((i & hi) << 1) | (i & lo);
        const std::size_t i1 = i0 | mask;
        const Complex a0 = a[i0];
        const Complex a1 = a[i1];
        a[i0] = u[0] * a0 + u[1] * a1;
        a[i1] = u[2] * a0 + u[3] * a1;
    }
}

void apply_controlled_1q_parallel(Amp& amp, std::size_t cmask, std::size_t tmask, const Mat2& u) {
    const std::size_t dim = amp.size();
    Complex* a = amp.data();
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < static_cast<long long>(dim); ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        if (!(i & cmask) || (i & tmask))
            continue;
        const Complex a0 = a[i];
        const Complex a1 = a[i | tmask];
        a[i] = u[0] * a0 + u[1] * a1;
        a[i | tmask] = u[2] * a0 + u[3] * a1;
    }
}

Mat2 as_mat2(const ComplexMatrix& m) {
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

Mat2 gate_unitary(const Gate& g) {
    if (g.name == "h")
        return as_mat2(ops::hadamard());
    if (g.name == "x" || g.name == "cx")
        return as_mat2(ops::pauli_x());
    if (g.name == "sdg")
        return {Complex(1, 0), 0.0, 0.0, Complex(0, -1)};
    if (g.name == "u3")
        return as_mat2(u3_matrix(g.params.at(0), g.params.at(1), g.params.at(2)));
    throw Error("unsupported gate: " + g.name);
}

bool pick_parallel(const Circuit& c, Exec exec) {
    if (exec == Exec::Serial)
        return false;
    if (exec == Exec::Parallel)
        return true;
#ifdef _OPENMP
    // Thread startup costs more than the whole sweep below ~2k amplitudes.
    return c.n_qubits() >= 11 && omp_get_max_threads() > 1;
#else
    (void)c;
    return false;
#endif
}

} // namespace

PureState simulate_statevector(const Circuit& circuit, Exec exec) {
    const std::size_t n = circuit.n_qubits();
    if (n > 12)
        throw DimensionMismatch("statevector simulation is capped at 12 qubits");
    const bool parallel = pick_parallel(circuit, exec);

    Amp amp(std::size_t{1} << n);
    amp[0] = 1.0;
    auto qubit_mask = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };

    for (const Gate& g : circuit.gates()) {
        const Mat2 u = gate_unitary(g);
        const std::size_t tmask = qubit_mask(g.targets.at(0));
        if (g.controls.empty()) {
            if (parallel)
                apply_1q_parallel(amp, tmask, u);
            else
                apply_1q_serial(amp, tmask, u);
        } else {
            const std::size_t cmask = qubit_mask(g.controls.at(0));
            if (parallel)
                apply_controlled_1q_parallel(amp, cmask, tmask, u);
            else
                apply_controlled_1q_serial(amp, cmask, tmask, u);
        }
    }
    return PureState(n, std::move(amp));
}

std::vector<double> exact_distribution(const Circuit& circuit, Exec exec) {
    const std::vector<std::size_t>& measured = circuit.measured_qubits();
    if (measured.empty())
        throw InvalidIndex("circuit declares no measured qubits");
    const PureState psi = simulate_statevector(circuit, exec);

    const std::size_t n = circuit.n_qubits();
    const std::size_t k = measured.size();
    std::vector<double> dist(std::size_t{1} << k, 0.0);
    // Serial accumulation on purpose: a deterministic summation order keeps
    // the sampled histograms reproducible across thread counts.
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        std::size_t out = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t bit = (idx >> (n - 1 - measured[j])) & 1;
            out |= bit << (k - 1 - j);
        }
        dist[out] += std::norm(psi[idx]);
    }
    return dist;
}

OutcomeCounts sample_counts(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                            Exec exec) {
    if (shots == 0)
        throw OutOfRange("shots must be at least 1");
    const std::vector<double> dist = exact_distribution(circuit, exec);

    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0; // guard against accumulated round-off at the top end

    std::vector<std::uint64_t> hist(dist.size(), 0);
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double();
        const std::size_t idx = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        ++hist[std::min(idx, hist.size() - 1)];
    }

    OutcomeCounts out;
    out.shots = shots;
    out.seed = seed;
    const std::size_t k = circuit.measured_qubits().size();
    for (std::size_t i = 0; i < hist.size(); ++i)
        out.counts.emplace(outcome_string(i, k), hist[i]);
    return out;
}

MeterMarginals marginalize(const OutcomeCounts& counts) {
    if (counts.counts.empty() || counts.shots == 0)
        throw EmptyCounts("cannot marginalise an empty histogram");
    MeterMarginals m{{0, 0, 0, 0}, {0, 0, 0, 0}};
    const double total = static_cast<double>(counts.shots);
    for (const auto& [key, value] : counts.counts) {
        if (key.size() != 4)
            throw DimensionMismatch("marginalize expects four-bit outcome strings");
        const auto bit = [&key](std::size_t i) { return key[i] == '1' ? 1u : 0u; };
        m.m1[2 * bit(0) + bit(1)] += value / total;
        m.m2[2 * bit(2) + bit(3)] += value / total;
    }
    return m;
}

std::string outcome_string(std::size_t index, std::size_t k) {
    std::string s(k, '0');
    for (std::size_t j = 0; j < k; ++j)
        if (index >> (k - 1 - j) & 1)
            s[j] = '1';
    return s;
}

std::string to_text(const Circuit& circuit) {
    std::string out = "qubits " + std::to_string(circuit.n_qubits()) + "\n";
    char buf[64];
    for (const Gate& g : circuit.gates()) {
        out += g.name;
        for (std::size_t t : g.targets)
            out += " " + std::to_string(t);
        for (std::size_t c : g.controls)
            out += " @" + std::to_string(c);
        if (!g.params.empty()) {
            out += " (";
            for (std::size_t i = 0; i < g.params.size(); ++i) {
                std::snprintf(buf, sizeof buf, "%.17g", g.params[i]);
                out += (i == 0 ? "" : ",");
                out += buf;
            }
            out += ")";
        }
        out += "\n";
    }
    if (!circuit.measured_qubits().empty()) {
        out += "measure";
        for (std::size_t q : circuit.measured_qubits())
            out += " " + std::to_string(q);
        out += "\n";
    }
    return out;
}

} // namespace nwl
