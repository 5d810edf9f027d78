// Copyright 2026 The Uncertainty Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support.hpp"

using namespace uncertainty;
using oracle::I;
using oracle::pi;

namespace {

DensityMatrix maximally_mixed(Index n) {
    return DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n)));
}

} // namespace

TEST(PureState, Validation) {
    EXPECT_ERROR_CODE(PureState(oracle::vec({1.0, 1.0})), ErrorCode::NotNormalized);
    EXPECT_NO_THROW(PureState(oracle::vec({1.0, 1e-11})));
    const PureState p = PureState::normalized(oracle::vec({3.0, 4.0 * I}));
    EXPECT_NEAR(p.amplitudes().norm(), 1.0, 1e-15);
    EXPECT_ERROR_CODE(PureState::normalized(ComplexVector::Zero(3)), ErrorCode::NotNormalized);
}

TEST(DensityMatrix, Validation) {
    EXPECT_ERROR_CODE(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(2, 2))),
                      ErrorCode::NotNormalized);
    EXPECT_ERROR_CODE(DensityMatrix(oracle::mat2(1.5, 0, 0, -0.5)),
                      ErrorCode::NotPositiveSemidefinite);
    EXPECT_ERROR_CODE(DensityMatrix(oracle::mat2(0.5, 1, 0, 0.5)), ErrorCode::NonHermitianInput);
}

TEST(DensityMatrix, RootSquaresBack) {
    const DensityMatrix rho = random_density(4, 3, 17);
    EXPECT_LE((rho.root() * rho.root() - rho.matrix()).norm(), 1e-12);
    EXPECT_EQ(rho.rank(), 3);
}

TEST(Expectation, Values) {
    const Observable z(oracle::sz());
    EXPECT_NEAR(expectation(z, PureState::basis(2, 0)), 1.0, 1e-15);
    EXPECT_NEAR(expectation(z, maximally_mixed(2)), 0.0, 1e-15);
    const Observable x(oracle::sx());
    for (double theta : {0.0, 0.4, 1.3, pi}) {
        for (double phi : {0.0, 0.9, 2.5, 5.0}) {
            EXPECT_NEAR(expectation(x, bloch_state(theta, phi)), std::sin(theta) * std::cos(phi),
                        1e-14);
        }
    }
}

TEST(Expectation, DimensionMismatch) {
    EXPECT_ERROR_CODE(expectation(Observable(oracle::sz()), PureState::basis(3, 0)),
                      ErrorCode::DimensionMismatch);
}

TEST(Stddev, Values) {
    EXPECT_NEAR(stddev(Observable(oracle::sx()), PureState::basis(2, 0)), 1.0, 1e-15);
    EXPECT_NEAR(stddev(Observable(oracle::mat2(1.5, 0, 0, -2.0)), PureState::basis(2, 0)), 0.0,
                1e-15);
}

TEST(Stddev, MatchesVarianceFormula) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Observable a = random_hermitian(5, seed);
        const DensityMatrix rho = random_density(5, 1 + static_cast<Index>(seed % 5), seed + 100);
        const double d = stddev(a, rho);
        EXPECT_NEAR(d * d, oracle::variance(a.matrix(), rho.matrix()), 1e-11);
        const PureState psi = random_pure_state(5, seed + 200);
        const double dp = stddev(a, psi);
        EXPECT_NEAR(dp * dp, oracle::variance(a.matrix(), psi.projector()), 1e-11);
    }
}

TEST(Stddev, MixedReducesToPure) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Observable a = random_hermitian(4, seed);
        const PureState psi = random_pure_state(4, seed + 7);
        EXPECT_NEAR(stddev(a, psi), stddev(a, DensityMatrix::from_pure(psi)), 1e-12);
    }
}

TEST(Center, Values) {
    const CenteredObservable c = center(Observable(oracle::sz()), PureState::basis(2, 0));
    EXPECT_LE((c.matrix.matrix() - (oracle::sz() - ComplexMatrix::Identity(2, 2))).norm(), 1e-15);

    const Observable a = random_hermitian(3, 4);
    const CenteredObservable m = center(a, maximally_mixed(3));
    const Complex mean = a.matrix().trace() / 3.0;
    EXPECT_LE((m.matrix.matrix() - (a.matrix() - mean * ComplexMatrix::Identity(3, 3))).norm(),
              1e-14);

    const double theta = 0.7;
    const double phi = 1.9;
    const CenteredObservable b = center(Observable(oracle::sx()), bloch_state(theta, phi));
    EXPECT_NEAR(b.mean, std::sin(theta) * std::cos(phi), 1e-15);
}

TEST(GramPair, PauliAtGroundState) {
    const GramPair g = gram_pair(Observable(oracle::sx()), Observable(oracle::sy()),
                                 PureState::basis(2, 0));
    // ⟨0|σxσy|0⟩ = i.
    const Eigen::Matrix2cd expected = oracle::mat2(1, I, -I, 1);
    EXPECT_LE((g.c1 - expected).norm(), 1e-15);
    EXPECT_LE((g.c2 - expected).norm(), 1e-15);
    EXPECT_NEAR(std::abs(g.c1.determinant()), 0.0, 1e-15);
}

TEST(GramPair, CommutingDiagonalPair) {
    const Observable a(oracle::mat2(1, 0, 0, 2));
    const Observable b(oracle::mat2(3, 0, 0, 4));
    const PureState psi(oracle::vec({1.0, 1.0}) / std::sqrt(2.0));
    const GramPair g = gram_pair(a, b, psi);
    // Both real; C2 carries the negated covariance, so the sum is diagonal.
    EXPECT_LE(g.c1.imag().norm(), 1e-15);
    EXPECT_LE(g.c2.imag().norm(), 1e-15);
    EXPECT_NEAR(g.c1(0, 1).real(), 0.25, 1e-15);
    EXPECT_NEAR(g.c2(0, 1).real(), -0.25, 1e-15);
    const double da = stddev(a, psi);
    const double db = stddev(b, psi);
    EXPECT_NEAR(g.sum().determinant().real(), 4.0 * da * da * db * db, 1e-14);
}

TEST(GramPair, TracesAgreeAndMatricesArePsd) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Observable a = random_hermitian(4, seed);
        const Observable b = random_hermitian(4, seed + 50);
        const DensityMatrix rho = random_density(4, 2, seed + 99);
        const GramPair g = gram_pair(a, b, rho);
        EXPECT_NEAR(std::abs(g.c1.trace() - g.c2.trace()), 0.0, 1e-12);
        for (const auto &c : {g.c1, g.c2}) {
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(c);
            EXPECT_GE(es.eigenvalues().minCoeff(), -1e-10);
        }
    }
}
