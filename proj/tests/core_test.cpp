#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cvhnn/core.hpp"
#include "cvhnn/structure.hpp"
#include "test_util.hpp"

using namespace cvhnn;
using namespace testutil;

TEST(SignReal, ZeroIsPositive) { EXPECT_EQ(sign_real(0.0), 1); }

TEST(SignReal, Examples) {
    EXPECT_EQ(sign_real(3.7), 1);
    EXPECT_EQ(sign_real(-1e-300), -1);
    EXPECT_EQ(sign_real(-0.0), 1);
}

TEST(SignReal, RejectsNonFinite) {
    EXPECT_THROW(sign_real(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    EXPECT_THROW(sign_real(std::numeric_limits<double>::infinity()), std::domain_error);
    EXPECT_THROW(sign_real(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(SplitSign, Examples) {
    EXPECT_EQ(split_sign({3.0, -0.5}), kPM);
    EXPECT_EQ(split_sign({0.0, 0.0}), kPP);
    EXPECT_EQ(split_sign({-2.0, 7.0}), kMP);
    EXPECT_THROW(split_sign({1.0, std::nan("")}), std::domain_error);
}

TEST(SplitSign, IdempotentOnQuadrantPoints) {
    for (auto q : {kPP, kPM, kMP, kMM}) EXPECT_EQ(split_sign(q.value()), q);
}

TEST(QuadState, CodesAndComponents) {
    EXPECT_EQ(kPP.code(), 0);
    EXPECT_EQ(kMP.code(), 1);
    EXPECT_EQ(kPM.code(), 2);
    EXPECT_EQ(kMM.code(), 3);
    EXPECT_EQ(kMM.value(), Complex(-1, -1));
    EXPECT_THROW(QuadState(0, 1), std::invalid_argument);
    EXPECT_THROW(QuadState(1, 2), std::invalid_argument);
}

TEST(Network, RejectsBadShapesAndValues) {
    EXPECT_THROW(Network(ComplexMatrix(2), ComplexVector(3)), std::invalid_argument);
    EXPECT_THROW(Network(ComplexMatrix(0)), std::invalid_argument);
    ComplexMatrix m(2);
    m(0, 1) = Complex(std::numeric_limits<double>::infinity(), 0);
    EXPECT_THROW(Network{m}, std::domain_error);
    EXPECT_THROW(Network(ComplexMatrix(1), ComplexVector{Complex(0, std::nan(""))}), std::domain_error);
    EXPECT_THROW(StateVector(std::size_t{0}), std::invalid_argument);
}

TEST(LocalField, ZeroNetwork) {
    const Network net(ComplexMatrix(3));
    const StateVector s{kPM, kMM, kMP};
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(local_field(net, s, i), Complex(0, 0));
}

TEST(LocalField, RotationByI) {
    const Network net(ComplexMatrix{{Complex(0, 1)}});
    EXPECT_EQ(local_field(net, StateVector{kPP}, 0), Complex(-1, 1));
}

TEST(LocalField, TwoNeuronsWithThreshold) {
    const Network net(ComplexMatrix{{0, 1}, {-1, 0}}, ComplexVector{Complex(1, 0), Complex(0, 0)});
    const StateVector s{kPP, kPM};
    const Complex field = local_field(net, s, 0);
    EXPECT_EQ(field, Complex(0, -1));
    // Independent straight-loop evaluation.
    const auto m = to_ref(net.weights());
    const refmodel::Vec v = to_ref(s);
    EXPECT_EQ(m[0][0] * v[0] + m[0][1] * v[1] - net.thresholds()[0], field);
}

TEST(LocalField, IndexAndSizeErrors) {
    const Network net(ComplexMatrix(2));
    EXPECT_THROW(local_field(net, StateVector(2), 2), std::out_of_range);
    EXPECT_THROW(local_field(net, StateVector(3), 0), std::invalid_argument);
}

TEST(Energy, SerialExamples) {
    EXPECT_EQ(energy_serial(Network(ComplexMatrix(3)), StateVector{kPM, kMM, kMP}), 0.0);
    EXPECT_EQ(energy_serial(Network(ComplexMatrix{{2.0}}), StateVector{kPP}), -4.0);
    EXPECT_EQ(energy_serial(Network(ComplexMatrix{{0.0}}, ComplexVector{1.0}), StateVector{kPP}), 2.0);
    EXPECT_DOUBLE_EQ(refmodel::energy_serial({{2.0}}, {0.0}, {Complex(1, 1)}), -4.0);
    EXPECT_DOUBLE_EQ(refmodel::energy_serial({{0.0}}, {1.0}, {Complex(1, 1)}), 2.0);
}

TEST(Energy, ParallelExamples) {
    EXPECT_EQ(energy_parallel(Network(ComplexMatrix(2)), StateVector{kPM, kMM}, StateVector{kPP, kMP}), 0.0);
    const Network one(ComplexMatrix{{1.0}});
    EXPECT_EQ(energy_parallel(one, StateVector{kPP}, StateVector{kPM}), 0.0);
    EXPECT_DOUBLE_EQ(refmodel::energy_parallel({{1.0}}, {0.0}, {Complex(1, 1)}, {Complex(1, -1)}), 0.0);
    EXPECT_THROW(energy_parallel(one, StateVector(2), StateVector(1)), std::invalid_argument);
    EXPECT_THROW(energy_serial(one, StateVector(2)), std::invalid_argument);
}

namespace {

StateVector random_state(std::size_t n, SeededRng& rng) {
    std::vector<QuadState> v(n);
    for (auto& q : v) q = QuadState::from_code(static_cast<std::uint8_t>(rng.uniform_int(0, 3)));
    return StateVector(std::move(v));
}

}  // namespace

TEST(EnergyProperty, ParallelOnDiagonalEqualsSerialExactly) {
    for (std::uint64_t k = 0; k < 500; ++k) {
        SeededRng rng(11, k);
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 30));
        const RealMatrix a = gen_real_constrained({n, SymmetryKind::Arbitrary, SignKind::Arbitrary}, rng);
        const RealMatrix b = gen_real_constrained({n, SymmetryKind::Arbitrary, SignKind::Arbitrary}, rng);
        const Network net(compose_weights(a, b), gen_threshold(n, ThresholdMode::UniformScaled, rng));
        const StateVector s = random_state(n, rng);
        ASSERT_EQ(energy_parallel(net, s, s), energy_serial(net, s));
        EXPECT_NEAR(energy_serial(net, s),
                    refmodel::energy_serial(testutil::to_ref(net.weights()), net.thresholds(), to_ref(s)), 1e-9);
    }
}

TEST(EnergyProperty, HermitianQuadraticFormIsReal) {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        SeededRng rng(12, k);
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 30));
        const ComplexMatrix m = gen_hermitian(n, SignKind::Arbitrary, SignKind::Arbitrary, k % 2 == 0, rng);
        const StateVector s = random_state(n, rng);
        Complex quad = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) quad += std::conj(s[i].value()) * m(i, j) * s[j].value();
        ASSERT_LE(std::abs(quad.imag()), 1e-9);
        const Network net(m, gen_threshold(n, ThresholdMode::UniformScaled, rng));
        Complex lin = 0;
        for (std::size_t i = 0; i < n; ++i) lin += std::conj(s[i].value()) * net.thresholds()[i];
        EXPECT_NEAR(energy_serial(net, s), -quad.real() + 2 * lin.real(), 1e-9);
    }
}

TEST(EnergyProperty, Bounded) {
    for (std::uint64_t k = 0; k < 300; ++k) {
        SeededRng rng(13, k);
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 25));
        const RealMatrix a = gen_real_constrained({n, SymmetryKind::Arbitrary, SignKind::Arbitrary}, rng);
        const RealMatrix b = gen_real_constrained({n, SymmetryKind::Symmetric, SignKind::Positive}, rng);
        const Network net(compose_weights(a, b), gen_threshold(n, ThresholdMode::UniformScaled, rng));
        double bound = 0;
        for (const Complex& w : net.weights().data()) bound += 2 * std::abs(w);
        for (const Complex& t : net.thresholds()) bound += 4 * std::abs(t);
        const StateVector s1 = random_state(n, rng), s2 = random_state(n, rng);
        EXPECT_LE(std::abs(energy_serial(net, s1)), bound);
        EXPECT_LE(std::abs(energy_parallel(net, s1, s2)), bound);
    }
}

TEST(StateVector, ToString) { EXPECT_EQ(to_string(StateVector{kPP, kMM}), "[+1+i, -1-i]"); }
