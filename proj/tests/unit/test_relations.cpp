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

const Observable X(oracle::sx(), "X");
const Observable Y(oracle::sy(), "Y");
const Observable Z(oracle::sz(), "Z");

PureState plus() { return PureState(oracle::vec({1.0, 1.0}) / std::sqrt(2.0)); }
PureState minus() { return PureState(oracle::vec({1.0, -1.0}) / std::sqrt(2.0)); }

DensityMatrix half_identity() {
    return DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(2, 2) * 0.5));
}

} // namespace

TEST(BoundReport, ViolationIsAnError) {
    EXPECT_ERROR_CODE(make_report("x", 1.0, 1.1, {}, ""), ErrorCode::BoundViolation);
    const BoundReport r = make_report("x", 1.0, 1.0 + 1e-13, {}, "");
    EXPECT_TRUE(r.saturated);
    EXPECT_FALSE(make_report("x", 2.0, 1.0, {}, "").saturated);
}

TEST(Robertson, PauliGroundState) {
    const BoundReport r = robertson(X, Y, PureState::basis(2, 0));
    EXPECT_NEAR(r.lhs, 1.0, 1e-15);
    EXPECT_NEAR(r.rhs, 1.0, 1e-15);
    EXPECT_TRUE(r.saturated);
    EXPECT_EQ(r.name, "robertson_pure");
}

TEST(Robertson, PauliMaximallyMixed) {
    const BoundReport r = robertson(X, Y, half_identity());
    EXPECT_NEAR(r.lhs, 1.0, 1e-15);
    EXPECT_NEAR(r.rhs, 0.0, 1e-15);
    EXPECT_FALSE(r.saturated);
    EXPECT_EQ(r.name, "robertson_mixed");
}

TEST(Robertson, BlockExample) {
    const BoundReport r = robertson(golden::m4_a(), golden::m4_b(), golden::m4_rho());
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, 1.0, 1e-12);
    EXPECT_TRUE(r.saturated);
}

// The example's display reads |tr([A,B]ρ)|² = 1; the commutator expectation
// is actually 2i, so the unit value is Robertson's |tr([A,B]ρ)/2|².
TEST(Robertson, BlockExampleCommutatorValue) {
    const ComplexMatrix a = golden::m4_a().matrix();
    const ComplexMatrix b = golden::m4_b().matrix();
    const Complex t = oracle::trace_product(a * b - b * a, golden::m4_rho().matrix());
    EXPECT_NEAR(std::abs(t - 2.0 * I), 0.0, 1e-15);
    EXPECT_NEAR(std::norm(t), 4.0, 1e-14);
}

TEST(Robertson, RandomAgainstOracle) {
    for (Index n : {2, 3, 5}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Observable a = random_hermitian(n, seed);
            const Observable b = random_hermitian(n, seed + 1000);
            const DensityMatrix rho = random_density(n, n, seed + 2000);
            const BoundReport r = robertson(a, b, rho);
            const ComplexMatrix &m = rho.matrix();
            EXPECT_NEAR(r.lhs,
                        std::sqrt(oracle::variance(a.matrix(), m) * oracle::variance(b.matrix(), m)),
                        1e-10);
            EXPECT_NEAR(r.rhs, std::sqrt(oracle::robertson_rhs(a.matrix(), b.matrix(), m)), 1e-10);
            EXPECT_GE(r.slack, -r.threshold());
        }
    }
}

TEST(Schrodinger, Examples) {
    const BoundReport p = schrodinger(X, Y, PureState::basis(2, 0));
    EXPECT_NEAR(p.lhs, 1.0, 1e-15);
    EXPECT_NEAR(p.rhs, 1.0, 1e-15);
    EXPECT_TRUE(p.saturated);

    const BoundReport m = schrodinger(golden::m4_a(), golden::m4_b(), golden::m4_rho());
    EXPECT_NEAR(m.lhs, 1.0, 1e-12);
    EXPECT_NEAR(m.rhs, 1.0, 1e-12);
    EXPECT_TRUE(m.saturated);

    const BoundReport zz = schrodinger(Z, Z, plus());
    EXPECT_NEAR(zz.lhs, 1.0, 1e-15);
    EXPECT_NEAR(zz.rhs, 1.0, 1e-15);
    EXPECT_TRUE(zz.saturated);
}

TEST(Schrodinger, RandomAgainstOracleAndDominatesRobertson) {
    for (Index n : {2, 4}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Observable a = random_hermitian(n, seed);
            const Observable b = random_hermitian(n, seed + 1000);
            const DensityMatrix rho = random_density(n, 1 + static_cast<Index>(seed % n), seed);
            const BoundReport s = schrodinger(a, b, rho);
            const BoundReport r = robertson(a, b, rho);
            EXPECT_NEAR(s.rhs, oracle::schrodinger_rhs(a.matrix(), b.matrix(), rho.matrix()), 1e-10);
            EXPECT_NEAR(s.lhs, r.lhs * r.lhs, 1e-12);
            EXPECT_GE(s.rhs, r.rhs * r.rhs - 1e-10);
        }
    }
}

TEST(MpFrame, DeviationsAreTailNorms) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Observable a = random_hermitian(4, seed);
        const Observable b = random_hermitian(4, seed + 1);
        const auto [psi, phi] = random_orthonormal_pair(4, seed + 2);
        const MPFrame f = mp_frame(a, b, psi, phi);
        EXPECT_NEAR(f.u.norm(), stddev(a, psi), 1e-12);
        EXPECT_NEAR(f.v.norm(), stddev(b, psi), 1e-12);
        // c = ⟨ψ|A|φ⟩ is the first entry of ⟨u| (φ is the second basis column).
        EXPECT_NEAR(std::abs(f.c - std::conj(f.u(0))), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(f.d - std::conj(f.v(0))), 0.0, 1e-12);
    }
}

TEST(MpChain, StepOneIsIdentityForQubits) {
    for (double theta = 0.0; theta <= pi; theta += 0.3) {
        for (double phi = 0.0; phi < 2 * pi; phi += 0.5) {
            const ChainReport c = mp_chain(X, Y, bloch_state(theta, phi),
                                           golden::bloch_partner(theta, phi), kI);
            EXPECT_LE(std::abs(c.steps[0].slack), 1e-12);
        }
    }
}

TEST(MpChain, NorthPoleSaturatesAllSteps) {
    const ChainReport c = mp_chain(X, Y, bloch_state(0, 0), golden::bloch_partner(0, 0), kI);
    for (const auto &s : c.steps) {
        EXPECT_TRUE(s.saturated) << s.name << " slack " << s.slack;
    }
}

TEST(MpChain, RandomSlacksNonNegative) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Observable a = random_hermitian(4, seed);
        const Observable b = random_hermitian(4, seed + 1);
        const auto [psi, phi] = random_orthonormal_pair(4, seed + 2);
        const ChainReport c = mp_chain(a, b, psi, phi, kI);
        for (const auto &s : c.steps) {
            EXPECT_GE(s.slack, -1e-10);
        }
    }
}

TEST(MpChain, RejectsNonUnitMu) {
    EXPECT_ERROR_CODE(mp_chain(X, Y, PureState::basis(2, 0), PureState::basis(2, 1), 2.0),
                      ErrorCode::InvalidArgument);
}

TEST(MuRatio, BlochClosedForm) {
    for (double theta : {0.3, 1.1, 2.0}) {
        for (double phi : {0.2, 1.0, 4.0}) {
            const auto mu = mu_ratio(X, Y, bloch_state(theta, phi), golden::bloch_partner(theta, phi));
            ASSERT_TRUE(mu);
            const Complex expected = (-std::sin(phi) + I * std::cos(theta) * std::cos(phi)) /
                                     (std::cos(phi) + I * std::cos(theta) * std::sin(phi));
            EXPECT_NEAR(std::abs(*mu - expected), 0.0, 1e-12);
        }
    }
}

TEST(ChooseMu, SignRule) {
    const MuChoice m0 = choose_mu(X, Y, PureState::basis(2, 0));
    EXPECT_EQ(m0.mu, -kI);
    EXPECT_NEAR(std::abs(m0.commutator_expectation - 2.0 * I), 0.0, 1e-15);
    EXPECT_FALSE(m0.tie_broken);
    EXPECT_EQ(choose_mu(X, Y, PureState::basis(2, 1)).mu, kI);
    const MuChoice tie = choose_mu(X, Y, plus());
    EXPECT_EQ(tie.mu, kI);
    EXPECT_TRUE(tie.tie_broken);
}

TEST(Mp3, PauliExamples) {
    const Mp3Report r = mp3(X, Y, PureState::basis(2, 0), PureState::basis(2, 1));
    EXPECT_EQ(r.mu.mu, -kI);
    EXPECT_NEAR(r.bound.lhs, 2.0, 1e-15);
    EXPECT_NEAR(r.bound.rhs, 2.0, 1e-15);
    EXPECT_TRUE(r.bound.saturated);

    const Mp3Report s = mp3(X, Y, plus(), minus());
    EXPECT_EQ(s.mu.mu, kI);
    EXPECT_NEAR(s.bound.lhs, 1.0, 1e-15);
    EXPECT_NEAR(s.bound.rhs, 1.0, 1e-15);
    EXPECT_TRUE(s.bound.saturated);
}

TEST(Mp3, RandomAgainstOracle) {
    for (Index n : {2, 3, 6}) {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Observable a = random_hermitian(n, seed);
            const Observable b = random_hermitian(n, seed + 1);
            const auto [psi, phi] = random_orthonormal_pair(n, seed + 2);
            const Mp3Report r = mp3(a, b, psi, phi);
            const ComplexVector &p = psi.amplitudes();
            const ComplexMatrix rho = oracle::projector(p);
            const Complex mu = r.mu.mu;
            const double lhs =
                oracle::variance(a.matrix(), rho) + oracle::variance(b.matrix(), rho);
            const Complex comm = oracle::braket(p, a.matrix() * b.matrix() - b.matrix() * a.matrix(), p);
            const double rhs = (mu * comm).real() +
                               std::norm(oracle::braket(p, a.matrix() + mu * b.matrix(), phi.amplitudes()));
            EXPECT_NEAR(r.bound.lhs, lhs, 1e-10);
            EXPECT_NEAR(r.bound.rhs, rhs, 1e-10);
            EXPECT_GE((mu * comm).real(), -1e-12);
            EXPECT_GE(r.bound.slack, -1e-10);
        }
    }
}

TEST(Mp3, RequiresOrthogonalPair) {
    EXPECT_ERROR_CODE(mp3(X, Y, PureState::basis(2, 0), plus()), ErrorCode::NotOrthogonal);
}

TEST(Mp6, PauliGroundState) {
    const Mp6Report r = mp6(X, Y, PureState::basis(2, 0), PureState::basis(2, 1));
    EXPECT_EQ(r.mu.mu, -kI);
    ASSERT_TRUE(r.product);
    EXPECT_NEAR(r.product->lhs, 1.0, 1e-15);
    EXPECT_NEAR(r.product->rhs, 1.0, 1e-15);
    EXPECT_TRUE(r.product->saturated);
    // Q = σx − iσy has ⟨0|Q|1⟩ = 0.
    EXPECT_NEAR(r.denominator, 1.0, 1e-15);
}

TEST(Mp6, ZeroDeviation) {
    EXPECT_ERROR_CODE(mp6(Z, X, PureState::basis(2, 0), PureState::basis(2, 1)),
                      ErrorCode::ZeroDeviation);
}

TEST(Mp6, RandomFormsAreConsistent) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Observable a = random_hermitian(4, seed);
        const Observable b = random_hermitian(4, seed + 1);
        const auto [psi, phi] = random_orthonormal_pair(4, seed + 2);
        const Mp6Report r = mp6(a, b, psi, phi);
        EXPECT_GE(r.reformulated.slack, -1e-10);
        if (r.product) {
            EXPECT_GE(r.product->slack, -1e-10);
            // Same inequality rearranged: product lhs·denominator = reformulated rhs·ΔAΔB.
            EXPECT_NEAR(r.product->rhs * r.denominator, r.reformulated.rhs * r.product->lhs, 1e-10);
        }
    }
}
