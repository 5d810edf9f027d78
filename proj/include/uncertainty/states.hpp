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

#include <string>
#include <utility>
#include <variant>

#include "uncertainty/matrix_core.hpp"

namespace uncertainty {

namespace pauli {
inline ComplexMatrix x() { return (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished(); }
inline ComplexMatrix y() { return (ComplexMatrix(2, 2) << 0, -kI, kI, 0).finished(); }
inline ComplexMatrix z() { return (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished(); }
} // namespace pauli

class Observable {
  public:
    explicit Observable(HermitianMatrix m, std::string label = {})
        : matrix_(std::move(m)), label_(std::move(label)) {}
    explicit Observable(const ComplexMatrix &m, std::string label = {})
        : matrix_(m), label_(std::move(label)) {}

    [[nodiscard]] const HermitianMatrix &hermitian() const noexcept { return matrix_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_.matrix(); }
    [[nodiscard]] Index dim() const noexcept { return matrix_.dim(); }
    [[nodiscard]] const std::string &label() const noexcept { return label_; }

  private:
    HermitianMatrix matrix_;
    std::string label_;
};

class PureState {
  public:
    explicit PureState(ComplexVector amplitudes, double norm_tol = defaults::norm_tol)
        : amplitudes_(std::move(amplitudes)) {
        require_finite(amplitudes_, "PureState");
        const double norm = amplitudes_.norm();
        if (std::abs(norm - 1.0) > norm_tol) {
            throw Error(ErrorCode::NotNormalized, "PureState: norm " + std::to_string(norm));
        }
    }

    static PureState normalized(const ComplexVector &v) {
        const double norm = v.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw Error(ErrorCode::NotNormalized, "PureState::normalized: zero or non-finite vector");
        }
        return PureState(v / norm);
    }

    /// Computational basis vector |k⟩ in ℂⁿ.
    static PureState basis(Index n, Index k) { return PureState(ComplexVector::Unit(n, k)); }

    [[nodiscard]] const ComplexVector &amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Index dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] ComplexMatrix projector() const {
        return amplitudes_ * amplitudes_.adjoint();
    }

  private:
    ComplexVector amplitudes_;
};

/// PSD, unit-trace Hermitian matrix. The spectrum and ρ^{1/2} are computed
/// once at construction so that every mixed-state routine reuses them.
class DensityMatrix {
  public:
    explicit DensityMatrix(const ComplexMatrix &m, double psd_tol = defaults::psd_tol,
                           double norm_tol = defaults::norm_tol)
        : matrix_(m), spectrum_(hermitian_eig(matrix_)) {
        const double trace = matrix_.matrix().trace().real();
        if (std::abs(trace - 1.0) > norm_tol) {
            throw Error(ErrorCode::NotNormalized, "DensityMatrix: trace " + std::to_string(trace));
        }
        detail::require_psd(spectrum_, std::max(1.0, matrix_.norm()), psd_tol, "DensityMatrix");
        root_ = power(0.5);
    }

    static DensityMatrix from_pure(const PureState &psi) { return DensityMatrix(psi.projector()); }

    [[nodiscard]] const HermitianMatrix &hermitian() const noexcept { return matrix_; }
    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_.matrix(); }
    [[nodiscard]] Index dim() const noexcept { return matrix_.dim(); }
    [[nodiscard]] const EigenSystem &spectrum() const noexcept { return spectrum_; }
    /// ρ^{1/2}.
    [[nodiscard]] const ComplexMatrix &root() const noexcept { return root_; }

    /// ρ^r for r > 0, with rounding-level eigenvalues treated as zero.
    [[nodiscard]] ComplexMatrix power(double r) const {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw Error(ErrorCode::InvalidArgument, "DensityMatrix::power: exponent must be > 0");
        }
        return detail::spectral_power(spectrum_, r, detail::support_cutoff(dim(), 1.0));
    }

    /// Number of eigenvalues above threshold·tr(ρ).
    [[nodiscard]] Index rank(double threshold = 1e-10) const {
        return (spectrum_.values.array() > threshold).count();
    }

  private:
    HermitianMatrix matrix_;
    EigenSystem spectrum_;
    ComplexMatrix root_;
};

class QuantumState {
  public:
    QuantumState(PureState psi) : state_(std::move(psi)) {}      // NOLINT(google-explicit-constructor)
    QuantumState(DensityMatrix rho) : state_(std::move(rho)) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_pure() const noexcept { return std::holds_alternative<PureState>(state_); }
    [[nodiscard]] const PureState &pure() const { return std::get<PureState>(state_); }
    [[nodiscard]] const DensityMatrix &mixed() const { return std::get<DensityMatrix>(state_); }
    [[nodiscard]] Index dim() const noexcept {
        return std::visit([](const auto &s) { return s.dim(); }, state_);
    }

    /// ψ as an n×1 matrix for pure states, ρ^{1/2} for mixed ones. Every
    /// second moment is a Frobenius inner product of M·factor() terms.
    [[nodiscard]] ComplexMatrix factor() const {
        if (is_pure()) {
            return pure().amplitudes();
        }
        return mixed().root();
    }

    [[nodiscard]] DensityMatrix to_density() const {
        return is_pure() ? DensityMatrix::from_pure(pure()) : mixed();
    }

  private:
    std::variant<PureState, DensityMatrix> state_;
};

inline void require_dims(const Observable &a, const QuantumState &s, const char *what) {
    if (a.dim() != s.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": observable is " + std::to_string(a.dim()) +
                        "-dimensional, state is " + std::to_string(s.dim()) + "-dimensional");
    }
}

/// ⟨ψ|M|ψ⟩ or tr(Mρ) for an arbitrary square M.
inline Complex state_expectation(const ComplexMatrix &m, const QuantumState &s) {
    if (m.rows() != s.dim() || m.cols() != s.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "state_expectation: operator/state dimensions");
    }
    if (s.is_pure()) {
        const ComplexVector &psi = s.pure().amplitudes();
        return psi.dot(m * psi);
    }
    return (m * s.mixed().matrix()).trace();
}

inline double expectation(const Observable &a, const QuantumState &s) {
    require_dims(a, s, "expectation");
    const Complex value = state_expectation(a.matrix(), s);
    if (std::abs(value.imag()) > defaults::imag_tol * std::max(1.0, a.hermitian().norm())) {
        throw Error(ErrorCode::NonRealExpectation,
                    "expectation: imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

struct CenteredObservable {
    HermitianMatrix matrix;
    double mean;
};

inline CenteredObservable center(const Observable &a, const QuantumState &s) {
    const double mean = expectation(a, s);
    ComplexMatrix shifted = a.matrix();
    shifted.diagonal().array() -= mean;
    return CenteredObservable{HermitianMatrix::hermitian_part(shifted), mean};
}

namespace detail {

// (A - αI)·S with S = ψ or ρ^{1/2}, plus α.
struct CenteredFactor {
    double mean;
    ComplexMatrix product;
};

inline CenteredFactor centered_factor(const Observable &a, const QuantumState &s,
                                      const ComplexMatrix &factor) {
    const CenteredObservable c = center(a, s);
    return CenteredFactor{c.mean, c.matrix.matrix() * factor};
}

} // namespace detail

/// Δ(A) = ‖(A − αI)ψ‖ or ‖(A − αI)ρ^{1/2}‖_F.
inline double stddev(const Observable &a, const QuantumState &s) {
    require_dims(a, s, "stddev");
    return detail::centered_factor(a, s, s.factor()).product.norm();
}

/// The 2×2 matrices C1 and C2 whose positivity drives the Robertson bound.
struct GramPair {
    Eigen::Matrix2cd c1;
    Eigen::Matrix2cd c2;

    [[nodiscard]] Eigen::Matrix2cd sum() const { return c1 + c2; }
};

inline GramPair gram_pair(const Observable &a, const Observable &b, const QuantumState &s) {
    require_dims(a, s, "gram_pair");
    require_dims(b, s, "gram_pair");
    const ComplexMatrix factor = s.factor();
    const ComplexMatrix x = detail::centered_factor(a, s, factor).product;
    const ComplexMatrix y = detail::centered_factor(b, s, factor).product;
    const double xx = x.squaredNorm();
    const double yy = y.squaredNorm();
    const Complex xy = frobenius_inner(x, y);
    const Complex yx = std::conj(xy);
    GramPair g;
    g.c1 << xx, xy, yx, yy;
    g.c2 << xx, -yx, -xy, yy;
    return g;
}

} // namespace uncertainty
