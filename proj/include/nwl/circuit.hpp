#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nwl/qmath.hpp"

namespace nwl {

struct Gate {
    std::string name;                  // "h", "x", "sdg", "cx", "u3"
    std::vector<std::size_t> targets;
    std::vector<std::size_t> controls; // empty except for cx
    std::vector<double> params;        // u3 angles (theta, phi, lambda)
};

/// Gate list on a fixed-width qubit register plus a readout order.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<std::size_t>& measured_qubits() const { return measured_; }

    Circuit& h(std::size_t q);
    Circuit& x(std::size_t q);
    Circuit& sdg(std::size_t q);
    Circuit& u3(double theta, double phi, double lambda, std::size_t q);
    Circuit& cx(std::size_t control, std::size_t target);

    /// Declares which qubits are read out and in what order; outcome strings
    /// list these qubits left to right.
    Circuit& measure(std::vector<std::size_t> qubits);

  private:
    void check_qubit(std::size_t q) const;

    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> measured_;
};

/// General single-qubit rotation
///   [[cos(t/2),            -e^(i*lambda) sin(t/2)],
///    [e^(i*phi) sin(t/2),   e^(i*(phi+lambda)) cos(t/2)]].
ComplexMatrix u3_matrix(double theta, double phi, double lambda);

/// The six-qubit measurement-protocol circuit (13 gates):
///   q0, q1  system pair, prepared in cos(theta)|00> + e^(i*phi) sin(theta)|11>
///   q2, q3  parity pointer, coupled via CX(q0->q2), CX(q1->q3)
///   q4, q5  XX pointer, coupled via inverted CX(q4->q0), CX(q5->q1),
///           then rotated into the readout basis with two Hadamards.
/// Readout order (q2, q3, q4, q5): bits 0-1 are the parity pointer, bits 2-3
/// the XX pointer.
Circuit build_protocol_circuit(double theta, double phi);

/// Execution path for the statevector kernels. Serial is the reference
/// implementation; Parallel is the OpenMP path (bit-identical results — the
/// kernels have no cross-iteration reductions). Auto picks Parallel only for
/// registers large enough to amortise thread startup.
enum class Exec { Auto, Serial, Parallel };

/// Applies all gates to |0...0>. Register width is capped at 12 qubits.
PureState simulate_statevector(const Circuit& circuit, Exec exec = Exec::Auto);

/// Exact readout distribution: probabilities over the 2^k outcomes of the
/// measured qubits, marginalised over the rest.
std::vector<double> exact_distribution(const Circuit& circuit, Exec exec = Exec::Auto);

/// Shot histogram. Keys are bitstrings over the measured qubits (all 2^k
/// keys present, zeros included); values sum to `shots`.
struct OutcomeCounts {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::uint64_t> counts;
};

/// Multinomial sampling from the exact readout distribution by inverse-CDF
/// draws; bit-identical for identical (seed, circuit, shots).
OutcomeCounts sample_counts(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                            Exec exec = Exec::Auto);

/// Per-pointer marginals of a four-bit outcome histogram: bits 0-1 form the
/// first index, bits 2-3 the second ("01" -> index 1, etc.).
struct MeterMarginals {
    std::array<double, 4> m1;
    std::array<double, 4> m2;
};

MeterMarginals marginalize(const OutcomeCounts& counts);

/// Outcome bitstring for an index over k measured qubits (MSB first).
std::string outcome_string(std::size_t index, std::size_t k);

/// Line-based dump for debugging: a header, one gate per line
/// (name, targets, @controls, (params)), and the readout order. Not a
/// stability contract.
std::string to_text(const Circuit& circuit);

} // namespace nwl
