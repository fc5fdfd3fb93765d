#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nwl/errors.hpp"

namespace nwl {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Everything in this library lives in dimension <= 64 (six qubits), so a
/// flat vector with O(n^3) textbook algorithms is the right tool; no sparse
/// storage, no BLAS.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Builds from nested row lists: ComplexMatrix::from_rows({{1, 0}, {0, 1}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const; // matrix product
    ComplexMatrix& operator+=(const ComplexMatrix& other);

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    /// max_{ij} |a_ij - b_ij|; matrices must have equal shape.
    double max_abs_diff(const ComplexMatrix& other) const;

    /// max_{ij} |a_ij - a*_ji| — zero for an exactly Hermitian matrix.
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return is_square() && hermiticity_defect() <= tol; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m);
ComplexMatrix operator*(double scalar, const ComplexMatrix& m);

/// Kronecker product; (ra*rb) x (ca*cb). The left factor is the more
/// significant tensor slot, matching the qubit-ordering convention below.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Qubit-ordering convention used throughout: qubit q_i occupies tensor slot i,
// with the leftmost slot most significant. For n qubits, basis index of
// |b_0 b_1 ... b_{n-1}> is sum_i b_i * 2^(n-1-i).

/// Normalised state vector on n qubits.
class PureState {
  public:
    /// Validates the 2-norm (must be 1 within 1e-12, else NotNormalized) and
    /// that the length is a power of two (else DimensionMismatch).
    PureState(std::size_t n_qubits, std::vector<Complex> amplitudes);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |psi><psi| as a dense matrix.
    ComplexMatrix projector() const;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

/// Validated density operator: Hermitian within 1e-12, unit trace within
/// 1e-12, and positive semidefinite (minimum eigenvalue >= -1e-10).
///
/// Construction is the single validation point; code taking a DensityMatrix
/// may rely on these invariants without rechecking.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  private:
    ComplexMatrix m_;
};

/// |psi><psi| as a validated density operator.
DensityMatrix density_matrix(const PureState& psi);

/// Transposes the second-qubit indices of a two-qubit operator:
/// out[(a,b'),(a',b)] = in[(a,b),(a',b')]. Input must be 4x4.
ComplexMatrix partial_transpose_b(const ComplexMatrix& m);

/// Traces out the qubits NOT listed in `keep` from an n-qubit density
/// operator. Kept qubits retain their relative order. `keep` must be
/// non-empty and duplicate-free; keeping all n qubits returns the input
/// unchanged.
DensityMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& keep,
                            std::size_t n_qubits);

struct EigenSystem {
    std::vector<double> values; // descending
    ComplexMatrix vectors;      // column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, descending.
///
/// Cyclic Jacobi rotations; converged when the off-diagonal Frobenius norm
/// drops below 1e-12, with a hard cap of 100 sweeps. Input hermiticity is
/// checked within 1e-10 (NotHermitian).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Same solver, but also accumulates the eigenvector matrix.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a);

/// Principal square root of a PSD matrix. Eigenvalues in [-1e-10, 0) are
/// treated as exact zeros (diagonalisation round-off).
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Operator constants (2x2 unless noted).
namespace ops {
const ComplexMatrix& pauli_i();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& hadamard();
const ComplexMatrix& cnot(); // 4x4, control on the first slot
} // namespace ops

} // namespace nwl
