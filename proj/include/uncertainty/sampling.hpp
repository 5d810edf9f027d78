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
#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "uncertainty/states.hpp"

namespace uncertainty {

struct SampleConfig {
    Index dimension{2};
    Index rank{2};
    std::uint64_t seed{0};
    Index count{1};

    void validate() const {
        if (dimension < 1) {
            throw Error(ErrorCode::InvalidArgument, "SampleConfig: dimension must be >= 1");
        }
        if (rank < 1 || rank > dimension) {
            throw Error(ErrorCode::InvalidArgument, "SampleConfig: need 1 <= rank <= dimension");
        }
        if (count < 1) {
            throw Error(ErrorCode::InvalidArgument, "SampleConfig: count must be >= 1");
        }
    }

    bool operator==(const SampleConfig &) const = default;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent seed for (master seed, trial index, stream). Trials never
/// share generator state, so results do not depend on execution order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                    std::uint64_t stream = 0) noexcept {
    return mix64(mix64(master ^ mix64(index)) ^ mix64(~stream));
}

namespace detail {

// Entries with E|z|² = 1.
inline ComplexMatrix complex_gaussian(Index rows, Index cols, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            const double re = normal(engine);
            const double im = normal(engine);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

} // namespace detail

/// (G + G†)/2 with complex Gaussian G; exactly Hermitian.
inline Observable random_hermitian(Index n, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "random_hermitian: n must be >= 1");
    }
    const ComplexMatrix g = detail::complex_gaussian(n, n, seed);
    return Observable(HermitianMatrix(ComplexMatrix((g + g.adjoint()) * 0.5)));
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// diagonal of R rotated to the positive reals.
inline ComplexMatrix haar_unitary(Index n, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "haar_unitary: n must be >= 1");
    }
    const ComplexMatrix z = detail::complex_gaussian(n, n, seed);
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix &r = qr.matrixQR();
    for (Index i = 0; i < n; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) {
            q.col(i) *= r(i, i) / mag;
        }
    }
    return q;
}

inline PureState random_pure_state(Index n, std::uint64_t seed) {
    return PureState::normalized(haar_unitary(n, seed).col(0));
}

/// First two columns of a Haar unitary.
inline std::pair<PureState, PureState> random_orthonormal_pair(Index n, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "random_orthonormal_pair: n must be >= 2");
    }
    const ComplexMatrix u = haar_unitary(n, seed);
    return {PureState(u.col(0)), PureState(u.col(1))};
}

/// GG†/tr(GG†) with G an n×rank complex Gaussian matrix.
inline DensityMatrix random_density(Index n, Index rank, std::uint64_t seed) {
    SampleConfig{n, rank, seed, 1}.validate();
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, 1, 0xd15ea5e);
        const ComplexMatrix g = detail::complex_gaussian(n, rank, s);
        const ComplexMatrix m = g * g.adjoint();
        DensityMatrix rho(ComplexMatrix(m / m.trace().real()));
        if (rho.rank() == rank) {
            return rho;
        }
    }
    throw Error(ErrorCode::RankUnachieved,
                "random_density: could not reach rank " + std::to_string(rank));
}

/// (cos(θ/2), e^{iφ} sin(θ/2)).
inline PureState bloch_state(double theta, double phi) {
    ComplexVector v(2);
    v << std::cos(theta / 2.0), std::polar(1.0, phi) * std::sin(theta / 2.0);
    return PureState(v);
}

} // namespace uncertainty
