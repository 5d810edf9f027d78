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

#include <set>

#include "support.hpp"

using namespace uncertainty;
using oracle::pi;

TEST(SampleConfig, Validation) {
    EXPECT_NO_THROW((SampleConfig{4, 2, 0, 1}.validate()));
    EXPECT_ERROR_CODE((SampleConfig{0, 1, 0, 1}.validate()), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE((SampleConfig{2, 3, 0, 1}.validate()), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE((SampleConfig{2, 0, 0, 1}.validate()), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE((SampleConfig{2, 2, 0, 0}.validate()), ErrorCode::InvalidArgument);
}

TEST(DeriveSeed, DistinctStreams) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 100; ++i) {
        for (std::uint64_t s = 0; s < 5; ++s) {
            seen.insert(derive_seed(7, i, s));
        }
    }
    EXPECT_EQ(seen.size(), 500U);
    EXPECT_EQ(derive_seed(7, 3, 1), derive_seed(7, 3, 1));
    EXPECT_NE(derive_seed(7, 3, 1), derive_seed(8, 3, 1));
}

TEST(RandomHermitian, ScalarCase) {
    const Observable a = random_hermitian(1, 42);
    EXPECT_EQ(a.dim(), 1);
    EXPECT_EQ(a.matrix()(0, 0).imag(), 0.0);
}

TEST(RandomHermitian, DeterministicAndExactlyHermitian) {
    const Observable a = random_hermitian(4, 99);
    const Observable b = random_hermitian(4, 99);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_EQ(a.matrix(), ComplexMatrix(a.matrix().adjoint()));
    EXPECT_NE(a.matrix(), random_hermitian(4, 100).matrix());
}

TEST(HaarUnitary, ScalarCase) {
    const ComplexMatrix u = haar_unitary(1, 5);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(HaarUnitary, UnitaryAndDeterministic) {
    for (Index n : {2, 3, 8}) {
        const ComplexMatrix u = haar_unitary(n, 13);
        EXPECT_LE((u.adjoint() * u - ComplexMatrix::Identity(n, n)).norm(), 1e-12);
        for (Index j = 0; j < n; ++j) {
            EXPECT_NEAR(u.col(j).norm(), 1.0, 1e-12);
        }
        EXPECT_EQ(u, haar_unitary(n, 13));
    }
}

TEST(HaarUnitary, FirstEntryIsUnbiasedInPhase) {
    // With the phase correction, the mean of U₁₁ over many draws vanishes;
    // without it the diagonal is biased toward the positive reals.
    Complex mean = 0;
    const int draws = 4000;
    for (int k = 0; k < draws; ++k) {
        mean += haar_unitary(3, static_cast<std::uint64_t>(k))(0, 0);
    }
    mean /= static_cast<double>(draws);
    EXPECT_LT(std::abs(mean), 0.05);
}

TEST(RandomStates, PureNorm) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_NEAR(random_pure_state(5, seed).amplitudes().norm(), 1.0, 1e-12);
    }
}

TEST(RandomStates, FullRankDensity) {
    const DensityMatrix rho = random_density(2, 2, 3);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GT(rho.spectrum().values.minCoeff(), 0.0);
    EXPECT_EQ(rho.rank(), 2);
}

TEST(RandomStates, RankOneDensityIsAProjector) {
    const DensityMatrix rho = random_density(4, 1, 3);
    const ComplexVector v = rho.spectrum().vectors.col(0);
    EXPECT_LE((rho.matrix() - oracle::projector(v)).norm(), 1e-12);
    EXPECT_EQ(rho.rank(), 1);
}

TEST(RandomStates, OrthonormalPair) {
    const auto [psi, phi] = random_orthonormal_pair(6, 1);
    EXPECT_NEAR(std::abs(psi.amplitudes().dot(phi.amplitudes())), 0.0, 1e-14);
    EXPECT_ERROR_CODE(random_orthonormal_pair(1, 1), ErrorCode::InvalidArgument);
}

TEST(BlochState, Values) {
    EXPECT_EQ(bloch_state(0.0, 1.3).amplitudes(), oracle::vec({1.0, 0.0}));
    const ComplexVector south = bloch_state(pi, 0.0).amplitudes();
    EXPECT_NEAR(std::abs(south(0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(south(1) - 1.0), 0.0, 1e-15);
    const ComplexVector eq = bloch_state(pi / 2, 0.0).amplitudes();
    EXPECT_NEAR(std::abs(eq(0) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(eq(1) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}
