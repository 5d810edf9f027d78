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

// Dense complex matrix primitives: Hermitian eigensystems, PSD powers,
// Frobenius inner products, unitary completion and the tolerance-aware
// dependence tests that back every saturation decision.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>

#include "uncertainty/error.hpp"

namespace uncertainty {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

namespace defaults {
inline constexpr double hermiticity_tol = 1e-10;
inline constexpr double recon_tol = 1e-12;
inline constexpr double psd_tol = 1e-10;
inline constexpr double norm_tol = 1e-10;
inline constexpr double imag_tol = 1e-10;
inline constexpr double orthonormal_tol = 1e-10;
} // namespace defaults

/// Absolute-plus-relative tolerance. The threshold for a comparison at
/// magnitude `scale` is `absolute + relative * scale`.
struct Tolerance {
    double absolute{1e-12};
    double relative{1e-9};

    [[nodiscard]] constexpr double at(double scale) const noexcept {
        return absolute + relative * scale;
    }

    bool operator==(const Tolerance &) const = default;
};

inline void require_finite(const ComplexMatrix &m, const char *what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": dimensions must be >= 1");
    }
    if (!m.allFinite()) {
        throw Error(ErrorCode::NonFiniteEntry, std::string(what) + ": NaN or Inf entry");
    }
}

inline void require_same_shape(const ComplexMatrix &x, const ComplexMatrix &y, const char *what) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(x.rows()) + "x" +
                        std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) + "x" +
                        std::to_string(y.cols()));
    }
}

/// Wraps an angle into [0, 2π).
inline double wrap_angle(double angle) noexcept {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) {
        w += kTwoPi;
    }
    return w >= kTwoPi ? 0.0 : w;
}

/// Square complex matrix that is Hermitian within tolerance. The stored
/// matrix is the Hermitian part (H + H†)/2, which is bitwise identical to
/// the input when the input is exactly Hermitian.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const ComplexMatrix &m, double tol = defaults::hermiticity_tol) {
        require_finite(m, "HermitianMatrix");
        if (m.rows() != m.cols()) {
            throw Error(ErrorCode::DimensionMismatch, "HermitianMatrix: matrix is not square");
        }
        const double defect = (m - m.adjoint()).norm();
        if (defect > tol * std::max(1.0, m.norm())) {
            throw Error(ErrorCode::NonHermitianInput,
                        "HermitianMatrix: ||H - H^dagger||_F = " + std::to_string(defect));
        }
        matrix_ = (m + m.adjoint()) * 0.5;
    }

    /// Takes the Hermitian part without validation. For results that are
    /// Hermitian by construction up to rounding.
    static HermitianMatrix hermitian_part(const ComplexMatrix &m) {
        HermitianMatrix h;
        h.matrix_ = (m + m.adjoint()) * 0.5;
        return h;
    }

    [[nodiscard]] const ComplexMatrix &matrix() const noexcept { return matrix_; }
    [[nodiscard]] Index dim() const noexcept { return matrix_.rows(); }
    [[nodiscard]] double norm() const { return matrix_.norm(); }

  private:
    HermitianMatrix() = default;
    ComplexMatrix matrix_;
};

/// Eigenvalues in descending order with the matching unitary eigenvector columns.
struct EigenSystem {
    RealVector values;
    ComplexMatrix vectors;

    [[nodiscard]] ComplexMatrix reconstruct() const {
        return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
    }
};

inline EigenSystem hermitian_eig(const HermitianMatrix &h) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::InvalidArgument, "hermitian_eig: eigensolver did not converge");
    }
    // Eigen sorts ascending.
    return EigenSystem{solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
}

namespace detail {

// Eigenvalues at or below this level are rounding noise of the eigensolver
// and are treated as exact zeros before taking fractional powers.
inline double support_cutoff(Index n, double scale) noexcept {
    return 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
}

inline ComplexMatrix spectral_power(const EigenSystem &es, double r, double cutoff) {
    RealVector powered(es.values.size());
    for (Index i = 0; i < es.values.size(); ++i) {
        const double lambda = es.values(i);
        powered(i) = lambda > cutoff ? std::pow(lambda, r) : 0.0;
    }
    return es.vectors * powered.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

inline void require_psd(const EigenSystem &es, double scale, double psd_tol, const char *what) {
    const double min_eig = es.values(es.values.size() - 1);
    if (min_eig < -psd_tol * scale) {
        throw Error(ErrorCode::NotPositiveSemidefinite,
                    std::string(what) + ": minimum eigenvalue " + std::to_string(min_eig));
    }
}

} // namespace detail

/// U diag(max(λ,0)^r) U† for a positive semidefinite P and r > 0.
inline HermitianMatrix psd_power(const HermitianMatrix &p, double r,
                                 double psd_tol = defaults::psd_tol) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorCode::InvalidArgument, "psd_power: exponent must be a positive real");
    }
    const EigenSystem es = hermitian_eig(p);
    const double scale = p.norm();
    detail::require_psd(es, scale, psd_tol, "psd_power");
    return HermitianMatrix::hermitian_part(
        detail::spectral_power(es, r, detail::support_cutoff(p.dim(), scale)));
}

/// tr(X† Y).
inline Complex frobenius_inner(const ComplexMatrix &x, const ComplexMatrix &y) {
    require_same_shape(x, y, "frobenius_inner");
    return x.conjugate().cwiseProduct(y).sum();
}

inline ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "anticommutator");
    return a * b + b * a;
}

/// Extends orthonormal columns to an n×n unitary. The given columns are
/// copied verbatim; the rest come from Gram–Schmidt on e1, e2, … in order.
inline ComplexMatrix unitary_completion(std::span<const ComplexVector> columns,
                                        double tol = defaults::orthonormal_tol) {
    if (columns.empty()) {
        throw Error(ErrorCode::InvalidArgument, "unitary_completion: no columns given");
    }
    const Index n = columns.front().size();
    const auto k = static_cast<Index>(columns.size());
    if (n < 1 || k > n) {
        throw Error(ErrorCode::DimensionMismatch, "unitary_completion: need 1 <= k <= n columns");
    }
    ComplexMatrix u = ComplexMatrix::Zero(n, n);
    for (Index j = 0; j < k; ++j) {
        const auto &col = columns[static_cast<std::size_t>(j)];
        if (col.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "unitary_completion: ragged columns");
        }
        if (!col.allFinite()) {
            throw Error(ErrorCode::NonFiniteEntry, "unitary_completion: NaN or Inf entry");
        }
        u.col(j) = col;
    }
    const ComplexMatrix gram = u.leftCols(k).adjoint() * u.leftCols(k);
    const double defect = (gram - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (defect > tol) {
        throw Error(ErrorCode::NotOrthonormal,
                    "unitary_completion: Gram defect " + std::to_string(defect));
    }

    // Any basis vector whose residual clears 1/(2√n) is accepted. Since the
    // squared residuals of all n basis vectors sum to n - filled >= 1, the
    // in-order sweep always fills every column.
    const double accept = 0.5 / std::sqrt(static_cast<double>(n));
    Index filled = k;
    for (Index j = 0; j < n && filled < n; ++j) {
        ComplexVector v = ComplexVector::Unit(n, j);
        for (int pass = 0; pass < 2; ++pass) {
            v -= u.leftCols(filled) * (u.leftCols(filled).adjoint() * v);
        }
        const double norm = v.norm();
        if (norm > accept) {
            u.col(filled++) = v / norm;
        }
    }
    return u;
}

/// Outcome of a dependence test: the witness angle(s) when dependent, the
/// achieved residual, and the threshold the decision was made against.
struct PhaseDependence {
    std::optional<double> theta;
    double residual{0.0};
    double threshold{0.0};
    double scale{1.0};
};

struct ComplexDependence {
    std::optional<double> theta;
    std::optional<double> phi;
    double residual{0.0};
    double threshold{0.0};
    double scale{1.0};
};

inline double phase_residual(const ComplexVector &x, const ComplexVector &y, double theta) {
    return (std::cos(theta) * x + kI * std::sin(theta) * y).norm();
}

inline double dependence_residual(const ComplexMatrix &x, const ComplexMatrix &y, double theta,
                                  double phi) {
    return (std::cos(theta) * x + std::polar(1.0, phi) * std::sin(theta) * y).norm();
}

/// Searches ϑ ∈ [0, 2π) with cosϑ·x + i·sinϑ·y = 0, i.e. real-linear
/// dependence of x and i·y. The representative has cosϑ ≥ 0.
inline PhaseDependence phase_dependence_detail(const ComplexVector &x, const ComplexVector &y,
                                               const Tolerance &tol = {}) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::DimensionMismatch, "phase_dependence: vector lengths differ");
    }
    PhaseDependence out;
    const double nx = x.norm();
    const double ny = y.norm();
    out.scale = std::max({1.0, nx, ny});
    out.threshold = tol.at(out.scale);
    if (nx <= out.threshold) {
        out.theta = 0.0;
        out.residual = nx;
        return out;
    }
    if (ny <= out.threshold) {
        out.theta = std::numbers::pi / 2;
        out.residual = ny;
        return out;
    }

    const Index n = x.size();
    Eigen::MatrixX2d stacked(2 * n, 2);
    stacked.col(0).head(n) = x.real();
    stacked.col(0).tail(n) = x.imag();
    stacked.col(1).head(n) = -y.imag(); // real part of i·y
    stacked.col(1).tail(n) = y.real();  // imaginary part of i·y
    Eigen::JacobiSVD<Eigen::MatrixX2d> svd(stacked, Eigen::ComputeFullV);
    out.residual = svd.singularValues()(1);
    if (out.residual > out.threshold) {
        return out;
    }
    double a = svd.matrixV()(0, 1);
    double b = svd.matrixV()(1, 1);
    if (a < 0.0 || (a == 0.0 && b < 0.0)) {
        a = -a;
        b = -b;
    }
    const double theta = wrap_angle(std::atan2(b, a));
    out.residual = phase_residual(x, y, theta);
    if (out.residual <= out.threshold) {
        out.theta = theta;
    }
    return out;
}

inline std::optional<double> phase_dependence(const ComplexVector &x, const ComplexVector &y,
                                              const Tolerance &tol = {}) {
    return phase_dependence_detail(x, y, tol).theta;
}

/// Searches (ϑ, φ) with cosϑ·X + e^{iφ}·sinϑ·Y = 0 via the smaller singular
/// value of [vec X | vec Y]. ϑ ∈ [0, π/2], φ ∈ [0, 2π).
inline ComplexDependence complex_dependence_detail(const ComplexMatrix &x, const ComplexMatrix &y,
                                                   const Tolerance &tol = {}) {
    require_same_shape(x, y, "complex_dependence");
    ComplexDependence out;
    const double nx = x.norm();
    const double ny = y.norm();
    out.scale = std::max({1.0, nx, ny});
    out.threshold = tol.at(out.scale);
    if (nx <= out.threshold) {
        out.theta = 0.0;
        out.phi = 0.0;
        out.residual = nx;
        return out;
    }
    if (ny <= out.threshold) {
        out.theta = std::numbers::pi / 2;
        out.phi = 0.0;
        out.residual = ny;
        return out;
    }

    ComplexMatrix stacked(x.size(), 2);
    stacked.col(0) = x.reshaped();
    stacked.col(1) = y.reshaped();
    Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeFullV);
    out.residual = svd.singularValues()(1);
    if (out.residual > out.threshold) {
        return out;
    }
    Complex a = svd.matrixV()(0, 1);
    Complex b = svd.matrixV()(1, 1);
    if (std::abs(a) > 0.0) {
        const Complex unphase = std::conj(a) / std::abs(a);
        a *= unphase;
        b *= unphase;
    }
    const double theta = std::atan2(std::abs(b), a.real());
    const double phi = std::abs(b) > 0.0 ? wrap_angle(std::arg(b)) : 0.0;
    out.residual = dependence_residual(x, y, theta, phi);
    if (out.residual <= out.threshold) {
        out.theta = theta;
        out.phi = phi;
    }
    return out;
}

struct PhasePair {
    double theta;
    double phi;
};

inline std::optional<PhasePair> complex_dependence(const ComplexMatrix &x, const ComplexMatrix &y,
                                                   const Tolerance &tol = {}) {
    const auto dep = complex_dependence_detail(x, y, tol);
    if (!dep.theta) {
        return std::nullopt;
    }
    return PhasePair{*dep.theta, *dep.phi};
}

/// FNV-1a over the raw bytes of matrices. Stable across runs of the same
/// build; used to tag reports with the inputs they came from.
class Digest {
  public:
    Digest &update(const ComplexMatrix &m) {
        update_scalar(static_cast<std::uint64_t>(m.rows()));
        update_scalar(static_cast<std::uint64_t>(m.cols()));
        for (Index j = 0; j < m.cols(); ++j) {
            for (Index i = 0; i < m.rows(); ++i) {
                update_bytes(&m(i, j), sizeof(Complex));
            }
        }
        return *this;
    }

    [[nodiscard]] std::string hex() const {
        static constexpr char kDigits[] = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t h = hash_;
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = kDigits[h & 0xF];
            h >>= 4;
        }
        return out;
    }

  private:
    void update_scalar(std::uint64_t v) { update_bytes(&v, sizeof(v)); }

    void update_bytes(const void *data, std::size_t len) {
        const auto *bytes = static_cast<const unsigned char *>(data);
        for (std::size_t i = 0; i < len; ++i) {
            hash_ ^= bytes[i];
            hash_ *= 0x100000001b3ULL;
        }
    }

    std::uint64_t hash_{0xcbf29ce484222325ULL};
};

} // namespace uncertainty
