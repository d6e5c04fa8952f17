#pragma once

// Value model for complex-valued Hopfield networks: quadrant states, dense
// square matrices, the network record, the split-sign activation and the two
// energy functions.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvhnn {

using Complex = std::complex<double>;

/// One neuron state, a point of {+1+i, +1-i, -1+i, -1-i}.
///
/// Stored as a 2-bit code: bit 0 set means the real part is -1, bit 1 set
/// means the imaginary part is -1. So 1+i -> 0, -1+i -> 1, 1-i -> 2, -1-i -> 3.
class QuadState {
public:
    constexpr QuadState() = default;

    /// Build from component signs; anything other than +1/-1 throws.
    QuadState(int re, int im);

    static constexpr QuadState from_code(std::uint8_t code) {
        QuadState q;
        q.code_ = code & 3u;
        return q;
    }

    [[nodiscard]] constexpr std::uint8_t code() const { return code_; }
    [[nodiscard]] constexpr int re() const { return (code_ & 1u) ? -1 : 1; }
    [[nodiscard]] constexpr int im() const { return (code_ & 2u) ? -1 : 1; }
    [[nodiscard]] Complex value() const { return {double(re()), double(im())}; }

    friend constexpr bool operator==(QuadState, QuadState) = default;

private:
    std::uint8_t code_ = 0;
};

/// Length-N network state. Equality is exact, component-wise.
class StateVector {
public:
    StateVector() = default;
    /// All components set to `fill`; n must be >= 1.
    explicit StateVector(std::size_t n, QuadState fill = {});
    StateVector(std::initializer_list<QuadState> init);
    explicit StateVector(std::vector<QuadState> components);

    [[nodiscard]] std::size_t size() const { return data_.size(); }
    QuadState& operator[](std::size_t i) { return data_[i]; }
    QuadState operator[](std::size_t i) const { return data_[i]; }
    [[nodiscard]] std::span<const QuadState> components() const { return data_; }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    std::vector<QuadState> data_;
};

std::string to_string(QuadState q);
std::string to_string(const StateVector& s);

/// Dense n x n matrix, row-major.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    /// Row-major nested initializer; rows must all have length == row count.
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows);

    [[nodiscard]] std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    [[nodiscard]] std::span<const T> row(std::size_t i) const {
        return std::span<const T>(data_).subspan(i * n_, n_);
    }
    [[nodiscard]] std::span<const T> data() const { return data_; }

    [[nodiscard]] SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<Complex>;
using ComplexVector = std::vector<Complex>;

/// A network R = (M, T): weights M (n x n), thresholds T (length n).
/// Construction rejects shape mismatches and non-finite entries.
class Network {
public:
    Network(ComplexMatrix weights, ComplexVector thresholds);
    /// Zero thresholds.
    explicit Network(ComplexMatrix weights);

    [[nodiscard]] std::size_t size() const { return weights_.size(); }
    [[nodiscard]] const ComplexMatrix& weights() const { return weights_; }
    [[nodiscard]] const ComplexVector& thresholds() const { return thresholds_; }

private:
    ComplexMatrix weights_;
    ComplexVector thresholds_;
};

/// Structural classes a weight matrix may belong to. A matrix can carry
/// several at once (the zero matrix carries every structural tag).
enum class StructureTag {
    Hermitian,
    SkewHermitian,
    BraidedHermitian,
    BraidedSkewHermitian,
    SymmetricComplex,
    AntisymmetricComplex,
    Unstructured,
};

std::string to_string(StructureTag tag);

/// +1 for x >= 0, -1 for x < 0. Throws std::domain_error on NaN/Inf.
int sign_real(double x);

/// Applies sign_real to the real and imaginary parts independently.
QuadState split_sign(Complex z);

/// sum_j M_ij s_j - T_i, accumulated in ascending j.
Complex local_field(const Network& net, const StateVector& s, std::size_t i);

/// E_S(s) = -Re{ s* M s - 2 s* T }.
double energy_serial(const Network& net, const StateVector& s);

/// E_P(s1, s2) = -Re{ s1* M s2 - (s1 + s2)* T }. E_P(s, s) == E_S(s) bit for bit.
double energy_parallel(const Network& net, const StateVector& s1, const StateVector& s2);

// ---------------------------------------------------------------------------

template <typename T>
SquareMatrix<T>::SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw std::invalid_argument("SquareMatrix: ragged or non-square initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

}  // namespace cvhnn
