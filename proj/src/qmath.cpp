#include "nwl/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nwl {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix shapes differ");
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw DimensionMismatch("ragged row list");
        std::size_t j = 0;
        for (const Complex& v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    require_same_shape(*this, other);
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] + other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    require_same_shape(*this, other);
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] - other.data_[i];
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionMismatch("inner dimensions differ in matrix product");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == 0.0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out(i, j) += aik * other(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square())
        throw DimensionMismatch("trace of a non-square matrix");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_shape(*this, other);
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square())
        throw DimensionMismatch("hermiticity defect of a non-square matrix");
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = scalar * m(i, j);
    return out;
}

ComplexMatrix operator*(double scalar, const ComplexMatrix& m) {
    return Complex(scalar, 0.0) * m;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == 0.0)
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

PureState::PureState(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (!is_power_of_two(amplitudes_.size()) || amplitudes_.size() != (std::size_t{1} << n_qubits_))
        throw DimensionMismatch("amplitude vector length must be 2^n_qubits");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_)
        norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw NotNormalized("state vector norm differs from 1 beyond 1e-12");
}

ComplexMatrix PureState::projector() const {
    const std::size_t d = dim();
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() == 0)
        throw InvalidState("density matrix must be square and non-empty");
    if (m_.hermiticity_defect() > 1e-12)
        throw InvalidState("density matrix is not Hermitian within 1e-12");
    if (std::abs(m_.trace() - Complex(1.0)) > 1e-12)
        throw InvalidState("density matrix trace differs from 1 beyond 1e-12");
    const std::vector<double> eig = hermitian_eigenvalues(m_);
    if (eig.back() < -1e-10)
        throw InvalidState("density matrix has an eigenvalue below -1e-10");
}

DensityMatrix density_matrix(const PureState& psi) {
    return DensityMatrix(psi.projector());
}

ComplexMatrix partial_transpose_b(const ComplexMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4)
        throw DimensionMismatch("partial transpose is defined here for 4x4 operators");
    ComplexMatrix out(4, 4);
    // Index (a, b) -> 2a + b; transpose the b indices only.
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t bp = 0; bp < 2; ++bp)
                    out(2 * a + bp, 2 * ap + b) = m(2 * a + b, 2 * ap + bp);
    return out;
}

DensityMatrix partial_trace(const ComplexMatrix& rho, const std::vector<std::size_t>& keep,
                            std::size_t n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (rho.rows() != dim || rho.cols() != dim)
        throw DimensionMismatch("density matrix dimension does not match qubit count");
    if (keep.empty())
        throw InvalidIndex("must keep at least one qubit");

    std::vector<std::size_t> kept = keep;
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end())
        throw InvalidIndex("duplicate qubit in keep set");
    if (kept.back() >= n_qubits)
        throw InvalidIndex("keep set references a qubit outside the register");

    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n_qubits; ++q)
        if (!std::binary_search(kept.begin(), kept.end(), q))
            traced.push_back(q);

    const std::size_t k = kept.size();
    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dt = std::size_t{1} << traced.size();

    // Bit position of qubit q inside a full index (leftmost = most significant).
    auto bit_shift = [n_qubits](std::size_t q) { return n_qubits - 1 - q; };

    auto compose = [&](std::size_t kept_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (kept_bits >> (k - 1 - j) & 1)
                idx |= std::size_t{1} << bit_shift(kept[j]);
        for (std::size_t j = 0; j < traced.size(); ++j)
            if (traced_bits >> (traced.size() - 1 - j) & 1)
                idx |= std::size_t{1} << bit_shift(traced[j]);
        return idx;
    };

    ComplexMatrix out(dk, dk);
    for (std::size_t r = 0; r < dk; ++r)
        for (std::size_t c = 0; c < dk; ++c) {
            Complex sum = 0.0;
            for (std::size_t t = 0; t < dt; ++t)
                sum += rho(compose(r, t), compose(c, t));
            out(r, c) = sum;
        }
    return DensityMatrix(std::move(out));
}

namespace {

// One Jacobi similarity A <- J^H A J that annihilates A(p, q), plus the
// matching right-update of the accumulated eigenvector matrix V <- V J.
// J differs from identity only in rows/columns p and q:
//   J(p,p) = c,          J(p,q) = s * f,
//   J(q,p) = -s * conj(f), J(q,q) = c,
// with f = A(p,q) / |A(p,q)| carrying the phase and (c, s) the classic real
// rotation for the 2x2 block [[a_pp, |a_pq|], [|a_pq|, a_qq]].
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0)
        return;

    const Complex f = apq / abs_apq;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = a.rows();

    // Rows p and q of J^H A.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * f * aqk;
        a(q, k) = s * std::conj(f) * apk + c * aqk;
    }
    // Columns p and q of (J^H A) J.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * std::conj(f) * akq;
        a(k, q) = s * f * akp + c * akq;
    }
    // The pivot is now zero and the diagonal real; pin both against round-off.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    if (v) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * std::conj(f) * vkq;
            (*v)(k, q) = s * f * vkp + c * vkq;
        }
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

EigenSystem jacobi_eigensystem(const ComplexMatrix& input, bool want_vectors) {
    if (!input.is_square())
        throw DimensionMismatch("eigendecomposition of a non-square matrix");
    if (input.hermiticity_defect() > 1e-10)
        throw NotHermitian("matrix is not Hermitian within 1e-10");

    const std::size_t n = input.rows();
    // Symmetrise exactly so tiny (<= 1e-10) input defects cannot drift.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    ComplexMatrix v;
    if (want_vectors)
        v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    constexpr double kConverged = 1e-12; // off-diagonal Frobenius norm
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kConverged)
            break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                jacobi_rotate(a, want_vectors ? &v : nullptr, p, q);
    }

    EigenSystem sys;
    sys.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
    for (std::size_t i = 0; i < n; ++i)
        sys.values[i] = a(order[i], order[i]).real();
    if (want_vectors) {
        sys.vectors = ComplexMatrix(n, n);
        for (std::size_t col = 0; col < n; ++col)
            for (std::size_t row = 0; row < n; ++row)
                sys.vectors(row, col) = v(row, order[col]);
    }
    return sys;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    return jacobi_eigensystem(a, /*want_vectors=*/false).values;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& a) {
    return jacobi_eigensystem(a, /*want_vectors=*/true);
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    const EigenSystem sys = hermitian_eigensystem(a);
    const std::size_t n = a.rows();
    // Eigenvalues at round-off scale (either sign) are diagonalisation noise
    // on a PSD input; the square root would amplify +1e-16 junk to 1e-8.
    const double floor =
        sys.values.empty() ? 0.0 : std::max(sys.values.front(), 0.0) * 1e-13;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = sys.values[k] > floor ? sys.values[k] : 0.0;
        const double root = std::sqrt(lambda);
        if (root == 0.0)
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += root * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return out;
}

namespace ops {

const ComplexMatrix& pauli_i() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m =
        ComplexMatrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}});
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
    return m;
}

const ComplexMatrix& hadamard() {
    static const ComplexMatrix m = [] {
        const double s = 1.0 / std::sqrt(2.0);
        return ComplexMatrix::from_rows({{s, s}, {s, -s}});
    }();
    return m;
}

const ComplexMatrix& cnot() {
    static const ComplexMatrix m =
        ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    return m;
}

} // namespace ops

} // namespace nwl
