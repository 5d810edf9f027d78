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

// Equality characterizations and constructions of saturating states.
//
// Each checker decides saturation from the structural characterization (a
// dependence test or a norm identity) and then cross-checks that decision
// against the numeric slack of the matching BoundReport. The two can only
// disagree in a narrow band around the tolerance; outside that band a
// disagreement raises InconsistentSaturation.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uncertainty/relations.hpp"

namespace uncertainty {

enum class CertificateKind { RobertsonPure, RobertsonMixed, Schrodinger, MPChainAll, MP3, MP6 };

constexpr std::string_view to_string(CertificateKind kind) noexcept {
    switch (kind) {
    case CertificateKind::RobertsonPure: return "RobertsonPure";
    case CertificateKind::RobertsonMixed: return "RobertsonMixed";
    case CertificateKind::Schrodinger: return "Schrodinger";
    case CertificateKind::MPChainAll: return "MPChainAll";
    case CertificateKind::MP3: return "MP3";
    case CertificateKind::MP6: return "MP6";
    }
    return "Unknown";
}

struct SaturationCertificate {
    CertificateKind kind{CertificateKind::RobertsonPure};
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<Complex> mu;
    double residual{0.0};
    std::vector<double> r_checked;
    std::vector<double> r_residuals;

    bool operator==(const SaturationCertificate &) const = default;
};

inline const std::vector<double> &default_r_list() {
    static const std::vector<double> r_list{0.5, 1.0, 2.0, 3.0};
    return r_list;
}

namespace detail {

// Agreement band between a structural decision (residual against
// `threshold`, inputs of magnitude `scale`) and the report's slack. The slack
// is at most linear in the residual, while the residual can be as large as
// the square root of the slack, so the band is asymmetric.
inline void cross_check(const BoundReport &report, bool certified, double residual,
                        double threshold, double scale, std::string_view what) {
    if (certified && !report.saturated &&
        std::abs(report.slack) > 4.0 * threshold * scale * scale) {
        throw Error(ErrorCode::InconsistentSaturation,
                    std::string(what) + ": characterization holds (residual " +
                        std::to_string(residual) + ") but slack is " +
                        std::to_string(report.slack));
    }
    if (!certified && report.saturated &&
        residual > 2.0 * std::sqrt(report.threshold() * scale) + threshold) {
        throw Error(ErrorCode::InconsistentSaturation,
                    std::string(what) + ": slack " + std::to_string(report.slack) +
                        " is saturated but characterization residual is " +
                        std::to_string(residual));
    }
}

inline void require_r_list(const std::vector<double> &r_list, const char *what) {
    if (r_list.empty()) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": empty r list");
    }
    for (double r : r_list) {
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw Error(ErrorCode::InvalidArgument, std::string(what) + ": r must be > 0");
        }
    }
}

struct CenteredPair {
    ComplexMatrix a;  // A − αI
    ComplexMatrix b;  // B − βI
};

inline CenteredPair centered_pair(const Observable &a, const Observable &b,
                                  const QuantumState &s) {
    return CenteredPair{center(a, s).matrix.matrix(), center(b, s).matrix.matrix()};
}

// Verifies a witness at every exponent: the equality condition at r = 1/2
// is equivalent to the one at any r > 0, so a failure here is a fault.
template <typename ResidualAt>
void verify_r_list(SaturationCertificate &cert, const std::vector<double> &r_list,
                   const DensityMatrix &rho, const CenteredPair &c, const Tolerance &tol,
                   ResidualAt residual_at, const char *what) {
    for (double r : r_list) {
        const ComplexMatrix rho_r = rho.power(r);
        const ComplexMatrix x = c.a * rho_r;
        const ComplexMatrix y = c.b * rho_r;
        const double residual = residual_at(x, y);
        const double threshold = tol.at(std::max({1.0, x.norm(), y.norm()}));
        cert.r_checked.push_back(r);
        cert.r_residuals.push_back(residual);
        if (residual > 10.0 * threshold) {
            throw Error(ErrorCode::RIndependenceViolation,
                        std::string(what) + ": r = " + std::to_string(r) + " residual " +
                            std::to_string(residual));
        }
    }
}

} // namespace detail

/// Robertson equality for a pure state: ϑ with cosϑ(A−α)ψ + i sinϑ(B−β)ψ = 0.
inline std::optional<SaturationCertificate>
robertson_saturation_pure(const Observable &a, const Observable &b, const PureState &psi,
                          const Tolerance &tol = {}) {
    const QuantumState s(psi);
    require_dims(a, s, "robertson_saturation_pure");
    require_dims(b, s, "robertson_saturation_pure");
    const auto c = detail::centered_pair(a, b, s);
    const ComplexVector x = c.a * psi.amplitudes();
    const ComplexVector y = c.b * psi.amplitudes();
    const PhaseDependence dep = phase_dependence_detail(x, y, tol);
    const BoundReport report = robertson(a, b, s, tol);
    detail::cross_check(report, dep.theta.has_value(), dep.residual, dep.threshold, dep.scale,
                        "robertson_saturation_pure");
    if (!dep.theta) {
        return std::nullopt;
    }
    SaturationCertificate cert;
    cert.kind = CertificateKind::RobertsonPure;
    cert.theta = dep.theta;
    cert.residual = dep.residual;
    return cert;
}

/// Robertson equality for a density matrix: ϑ found on (A−α)ρ^{1/2},
/// (B−β)ρ^{1/2} and then verified on (A−α)ρ^r, (B−β)ρ^r for each r.
inline std::optional<SaturationCertificate>
robertson_saturation_mixed(const Observable &a, const Observable &b, const DensityMatrix &rho,
                           const Tolerance &tol = {},
                           const std::vector<double> &r_list = default_r_list()) {
    detail::require_r_list(r_list, "robertson_saturation_mixed");
    const QuantumState s(rho);
    require_dims(a, s, "robertson_saturation_mixed");
    require_dims(b, s, "robertson_saturation_mixed");
    const auto c = detail::centered_pair(a, b, s);
    const ComplexMatrix x = c.a * rho.root();
    const ComplexMatrix y = c.b * rho.root();
    const PhaseDependence dep = phase_dependence_detail(x.reshaped(), y.reshaped(), tol);
    const BoundReport report = robertson(a, b, s, tol);
    detail::cross_check(report, dep.theta.has_value(), dep.residual, dep.threshold, dep.scale,
                        "robertson_saturation_mixed");
    if (!dep.theta) {
        return std::nullopt;
    }
    SaturationCertificate cert;
    cert.kind = CertificateKind::RobertsonMixed;
    cert.theta = dep.theta;
    cert.residual = dep.residual;
    const double theta = *dep.theta;
    detail::verify_r_list(
        cert, r_list, rho, c, tol,
        [theta](const ComplexMatrix &xr, const ComplexMatrix &yr) {
            return (std::cos(theta) * xr + kI * std::sin(theta) * yr).norm();
        },
        "robertson_saturation_mixed");
    return cert;
}

/// Schrödinger equality: (A−α)ρ^r and (B−β)ρ^r linearly dependent, witnessed
/// by (ϑ, φ) with cosϑ(A−α)ρ^r + e^{iφ} sinϑ(B−β)ρ^r = 0.
inline std::optional<SaturationCertificate>
schrodinger_saturation(const Observable &a, const Observable &b, const QuantumState &state,
                       const Tolerance &tol = {},
                       const std::vector<double> &r_list = default_r_list()) {
    detail::require_r_list(r_list, "schrodinger_saturation");
    require_dims(a, state, "schrodinger_saturation");
    require_dims(b, state, "schrodinger_saturation");
    const DensityMatrix rho = state.to_density();
    const QuantumState s(rho);
    const auto c = detail::centered_pair(a, b, s);
    const ComplexMatrix x = c.a * rho.root();
    const ComplexMatrix y = c.b * rho.root();
    const ComplexDependence dep = complex_dependence_detail(x, y, tol);
    const BoundReport report = schrodinger(a, b, s, tol);
    detail::cross_check(report, dep.theta.has_value(), dep.residual, dep.threshold, dep.scale,
                        "schrodinger_saturation");
    if (!dep.theta) {
        return std::nullopt;
    }
    SaturationCertificate cert;
    cert.kind = CertificateKind::Schrodinger;
    cert.theta = dep.theta;
    cert.phi = dep.phi;
    cert.residual = dep.residual;
    const double theta = *dep.theta;
    const double phi = *dep.phi;
    detail::verify_r_list(
        cert, r_list, rho, c, tol,
        [theta, phi](const ComplexMatrix &xr, const ComplexMatrix &yr) {
            return dependence_residual(xr, yr, theta, phi);
        },
        "schrodinger_saturation");
    return cert;
}

struct ChainSaturation {
    std::array<bool, 3> steps{};
    std::array<double, 3> residuals{};
    /// ‖(A − μ*B)ψ − (α − μ*β)ψ‖, reported whether or not all steps hold.
    double eigen_residual{0.0};
    std::optional<SaturationCertificate> all;
};

/// Per-step equality conditions of the three-step Maccone–Pati chain.
inline ChainSaturation mp_chain_saturation(const Observable &a, const Observable &b,
                                           const PureState &psi, const PureState &phi,
                                           Complex mu, const Tolerance &tol = {}) {
    const ChainReport chain = mp_chain(a, b, psi, phi, mu, tol);
    const MPFrame &f = chain.frame;
    const double nu = f.u.norm();
    const double nv = f.v.norm();
    const double ac = std::abs(f.c);
    const double ad = std::abs(f.d);
    const double scale = std::max({1.0, nu, nv});
    const double threshold = tol.at(scale);

    ChainSaturation out;
    out.residuals[0] = std::max(std::abs(nu - ac), std::abs(nv - ad));
    out.residuals[1] = std::abs(ac - ad);
    out.residuals[2] = std::abs((ac + ad) - std::abs(f.c + mu * f.d));
    for (std::size_t k = 0; k < 3; ++k) {
        out.steps[k] = out.residuals[k] <= threshold;
        detail::cross_check(chain.steps[k], out.steps[k], out.residuals[k], threshold, scale,
                            "mp_chain_saturation");
    }

    const ComplexVector &v = psi.amplitudes();
    const Complex mu_conj = std::conj(mu);
    out.eigen_residual =
        ((a.matrix() - mu_conj * b.matrix()) * v - (f.alpha - mu_conj * f.beta) * v).norm();
    if (out.steps[0] && out.steps[1] && out.steps[2]) {
        if (out.eigen_residual > 4.0 * std::sqrt(threshold * scale) + threshold) {
            throw Error(ErrorCode::InconsistentSaturation,
                        "mp_chain_saturation: all steps hold but psi is not an eigenvector of "
                        "A - conj(mu) B (residual " +
                            std::to_string(out.eigen_residual) + ")");
        }
        SaturationCertificate cert;
        cert.kind = CertificateKind::MPChainAll;
        cert.mu = mu;
        cert.residual = out.eigen_residual;
        out.all = cert;
    }
    return out;
}

/// Scalar equality check: both sides and their difference.
struct SaturationCheck {
    bool saturated{false};
    double lhs{0.0};
    double rhs{0.0};
    double residual{0.0};
};

/// MP3 equality: ‖((A−α) − μ(B−β))ψ‖ = |⟨ψ|A + μB|φ⟩|.
inline SaturationCheck mp3_saturation(const Observable &a, const Observable &b,
                                      const PureState &psi, const PureState &phi, Complex mu,
                                      const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp3_saturation");
    detail::require_mu_pm_i(mu, "mp3_saturation");
    const QuantumState s(psi);
    const Complex comm = state_expectation(commutator(a.matrix(), b.matrix()), s);
    const double hypothesis = (mu * comm).real();
    if (hypothesis < -tol.at(std::max(1.0, a.hermitian().norm() * b.hermitian().norm()))) {
        throw Error(ErrorCode::HypothesisViolated,
                    "mp3_saturation: mu <[A,B]> = " + std::to_string(hypothesis) + " < 0");
    }
    const auto c = detail::centered_pair(a, b, s);
    SaturationCheck out;
    out.lhs = ((c.a - mu * c.b) * psi.amplitudes()).norm();
    out.rhs = std::abs(psi.amplitudes().dot((a.matrix() + mu * b.matrix()) * phi.amplitudes()));
    out.residual = out.lhs - out.rhs;
    const double scale = std::max({1.0, out.lhs, out.rhs});
    const double threshold = tol.at(scale);
    out.saturated = std::abs(out.residual) <= threshold;
    detail::cross_check(mp3_at(a, b, psi, phi, mu, tol), out.saturated, std::abs(out.residual),
                        threshold, scale, "mp3_saturation");
    return out;
}

/// MP6 equality: ‖((A−α)/Δ(A) − μ(B−β)/Δ(B))ψ‖ = |⟨ψ|Q_μ(A,B)|φ⟩|.
inline SaturationCheck mp6_saturation(const Observable &a, const Observable &b,
                                      const PureState &psi, const PureState &phi, Complex mu,
                                      const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp6_saturation");
    detail::require_mu_pm_i(mu, "mp6_saturation");
    const QuantumState s(psi);
    const auto dev = detail::require_nonzero_deviations(a, b, s, tol, "mp6_saturation");
    const auto c = detail::centered_pair(a, b, s);
    SaturationCheck out;
    out.lhs = ((c.a / dev.a - mu * c.b / dev.b) * psi.amplitudes()).norm();
    const ComplexMatrix q = a.matrix() / dev.a + mu * b.matrix() / dev.b;
    out.rhs = std::abs(psi.amplitudes().dot(q * phi.amplitudes()));
    out.residual = out.lhs - out.rhs;
    const double scale = std::max({1.0, out.lhs, out.rhs});
    const double threshold = tol.at(scale);
    out.saturated = std::abs(out.residual) <= threshold;
    MuChoice choice;
    choice.mu = mu;
    choice.commutator_expectation = state_expectation(commutator(a.matrix(), b.matrix()), s);
    detail::cross_check(mp6_at(a, b, psi, phi, choice, tol).reformulated, out.saturated,
                        std::abs(out.residual), threshold, scale, "mp6_saturation");
    return out;
}

enum class ConstructionTarget { MP3, MP6 };

constexpr std::string_view to_string(ConstructionTarget t) noexcept {
    return t == ConstructionTarget::MP3 ? "mp3" : "mp6";
}

inline constexpr double kConstructionTol = 1e-8;

struct ConstructedPair {
    Complex mu;
    PureState psi;
    PureState phi;
    ConstructionTarget target;
    /// The target inequality evaluated on (ψ, φ); MP6 uses the reformulated form.
    BoundReport report;
    SaturationCheck check;
    /// The degenerate branch was taken and φ defaulted to e₂.
    bool degenerate{false};

    /// |slack| / max(1, |lhs|, |rhs|) of the target inequality.
    [[nodiscard]] double achieved_slack() const noexcept { return report.relative_gap(); }
    [[nodiscard]] bool saturates(double construction_tol = kConstructionTol) const noexcept {
        return achieved_slack() <= construction_tol;
    }
};

namespace detail {

inline ComplexVector embed_tail(const ComplexVector &tail) {
    ComplexVector v = ComplexVector::Zero(tail.size() + 1);
    v.tail(tail.size()) = tail;
    return v;
}

inline ConstructedPair finish_mp3(const Observable &a, const Observable &b, PureState psi,
                                  PureState phi, const MuChoice &mu, bool degenerate,
                                  const Tolerance &tol) {
    const BoundReport report = mp3_at(a, b, psi, phi, mu.mu, tol);
    const SaturationCheck check = mp3_saturation(a, b, psi, phi, mu.mu, tol);
    return ConstructedPair{mu.mu, std::move(psi), std::move(phi), ConstructionTarget::MP3,
                           report, check, degenerate};
}

inline void require_square_pair(const Observable &a, const Observable &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": A and B differ in size");
    }
}

} // namespace detail

/// n = 2: μ from the sign of the (1,1) entry of μ[A,B]; ψ = |0⟩, φ = |1⟩.
inline ConstructedPair construct_case1(const Observable &a, const Observable &b,
                                       const Tolerance &tol = {}) {
    detail::require_square_pair(a, b, "construct_case1");
    if (a.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "construct_case1: requires n = 2");
    }
    PureState psi = PureState::basis(2, 0);
    const MuChoice mu = choose_mu(a, b, psi, tol);
    return detail::finish_mp3(a, b, std::move(psi), PureState::basis(2, 1), mu, false, tol);
}

/// n > 2: V = [1] ⊕ V₁ whose first column of V†(A − μB)V is supported on the
/// (1,1) and (2,1) entries; ψ, φ are the first two columns of V.
inline ConstructedPair construct_case2(const Observable &a, const Observable &b,
                                       const Tolerance &tol = {}) {
    detail::require_square_pair(a, b, "construct_case2");
    const Index n = a.dim();
    if (n <= 2) {
        throw Error(ErrorCode::DimensionMismatch, "construct_case2: requires n > 2");
    }
    PureState psi = PureState::basis(n, 0);
    const MuChoice mu = choose_mu(a, b, psi, tol);
    const ComplexMatrix m = a.matrix() - mu.mu * b.matrix();
    // u − μv: tail of the first column of A − μB.
    const ComplexVector w = m.col(0).tail(n - 1);
    const double norm = w.norm();
    if (norm <= tol.at(std::max(1.0, m.norm()))) {
        return detail::finish_mp3(a, b, std::move(psi), PureState::basis(n, 1), mu, true, tol);
    }
    // The (2,1) entry of V†(A − μB)V is then ‖w‖, real and nonnegative.
    PureState phi(detail::embed_tail(w / norm));
    return detail::finish_mp3(a, b, std::move(psi), std::move(phi), mu, false, tol);
}

/// W = [1] ⊕ W₁ with W₁'s first column along u/‖u‖ − μv/‖v‖, where u and v
/// are the sub-diagonal first columns of A and B; ψ, φ = first two columns.
inline ConstructedPair construct_w_mp6(const Observable &a, const Observable &b,
                                       const Tolerance &tol = {}) {
    detail::require_square_pair(a, b, "construct_w_mp6");
    const Index n = a.dim();
    if (n < 2) {
        throw Error(ErrorCode::DimensionMismatch, "construct_w_mp6: requires n >= 2");
    }
    PureState psi = PureState::basis(n, 0);
    const MuChoice mu = choose_mu(a, b, psi, tol);
    const ComplexVector u = a.matrix().col(0).tail(n - 1);
    const ComplexVector v = b.matrix().col(0).tail(n - 1);
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu <= tol.at(std::max(1.0, a.hermitian().norm())) ||
        nv <= tol.at(std::max(1.0, b.hermitian().norm()))) {
        throw Error(ErrorCode::ZeroDeviation, "construct_w_mp6: ||u|| = " + std::to_string(nu) +
                                                  ", ||v|| = " + std::to_string(nv));
    }
    const ComplexVector w = u / nu - mu.mu * v / nv;
    const double norm = w.norm();
    const bool degenerate = norm <= tol.at(1.0);
    PureState phi = degenerate ? PureState::basis(n, 1) : PureState(detail::embed_tail(w / norm));

    const Mp6Report report = mp6_at(a, b, psi, phi, mu, tol);
    const SaturationCheck check = mp6_saturation(a, b, psi, phi, mu.mu, tol);
    return ConstructedPair{mu.mu,           std::move(psi), std::move(phi),
                           ConstructionTarget::MP6, report.reformulated, check, degenerate};
}

enum class ZeroWitness { None, AZero, BZero, Both };

constexpr std::string_view to_string(ZeroWitness w) noexcept {
    switch (w) {
    case ZeroWitness::None: return "None";
    case ZeroWitness::AZero: return "AZero";
    case ZeroWitness::BZero: return "BZero";
    case ZeroWitness::Both: return "Both";
    }
    return "Unknown";
}

/// Both criteria for a vanishing Δ(A)Δ(B) or Δ(A)² + Δ(B)²: the operator
/// one (‖(A−α)ρ‖, ‖(B−β)ρ‖) and the deviation one. `borderline` marks
/// instances inside the rounding band where the two may legitimately differ;
/// the operator criterion decides those.
struct ZeroCharacterization {
    bool holds{false};
    ZeroWitness witness{ZeroWitness::None};
    double a_residual{0.0};
    double b_residual{0.0};
    double delta_a{0.0};
    double delta_b{0.0};
    bool borderline{false};
};

namespace detail {

struct ZeroInputs {
    double a_residual;
    double b_residual;
    double delta_a;
    double delta_b;
    double threshold;
    double scale;
};

inline ZeroInputs zero_inputs(const Observable &a, const Observable &b, const QuantumState &s,
                              const Tolerance &tol) {
    require_dims(a, s, "zero characterization");
    require_dims(b, s, "zero characterization");
    const DensityMatrix rho = s.to_density();
    const QuantumState state(rho);
    const auto c = centered_pair(a, b, state);
    const double scale = std::max({1.0, a.hermitian().norm(), b.hermitian().norm()});
    return ZeroInputs{(c.a * rho.matrix()).norm(), (c.b * rho.matrix()).norm(),
                      stddev(a, state), stddev(b, state), tol.at(scale), scale};
}

inline ZeroWitness witness_of(bool a_zero, bool b_zero) {
    if (a_zero && b_zero) {
        return ZeroWitness::Both;
    }
    if (a_zero) {
        return ZeroWitness::AZero;
    }
    return b_zero ? ZeroWitness::BZero : ZeroWitness::None;
}

inline ZeroCharacterization resolve(const ZeroInputs &in, bool operator_criterion,
                                    bool deviation_criterion, double band_deviation,
                                    const char *what) {
    ZeroCharacterization out;
    out.a_residual = in.a_residual;
    out.b_residual = in.b_residual;
    out.delta_a = in.delta_a;
    out.delta_b = in.delta_b;
    out.witness = witness_of(in.a_residual <= in.threshold, in.b_residual <= in.threshold);
    out.holds = operator_criterion;
    if (operator_criterion != deviation_criterion) {
        // Δ ≤ sqrt(‖Ã‖·‖Ãρ‖) and ‖Ãρ‖ ≤ Δ, so disagreement is only possible
        // when the relevant deviation sits near the square-root band.
        if (band_deviation > 2.0 * std::sqrt(in.threshold * in.scale)) {
            throw Error(ErrorCode::InconsistentCharacterization,
                        std::string(what) + ": operator criterion " +
                            (operator_criterion ? "true" : "false") +
                            " but deviation criterion " +
                            (deviation_criterion ? "true" : "false"));
        }
        out.borderline = true;
    }
    return out;
}

} // namespace detail

/// Δ(A)Δ(B) = 0 ⇔ (A−α)ρ = 0 or (B−β)ρ = 0.
inline ZeroCharacterization zero_product_characterization(const Observable &a, const Observable &b,
                                                          const QuantumState &s,
                                                          const Tolerance &tol = {}) {
    const auto in = detail::zero_inputs(a, b, s, tol);
    const bool op = in.a_residual <= in.threshold || in.b_residual <= in.threshold;
    const bool dev =
        in.delta_a * in.delta_b <= tol.at(std::max(1.0, in.scale * in.scale));
    return detail::resolve(in, op, dev, std::min(in.delta_a, in.delta_b),
                           "zero_product_characterization");
}

/// Δ(A)² + Δ(B)² = 0 ⇔ (A−α)ρ = (B−β)ρ = 0.
inline ZeroCharacterization zero_sum_characterization(const Observable &a, const Observable &b,
                                                      const QuantumState &s,
                                                      const Tolerance &tol = {}) {
    const auto in = detail::zero_inputs(a, b, s, tol);
    const bool op = in.a_residual <= in.threshold && in.b_residual <= in.threshold;
    const bool dev = in.delta_a * in.delta_a + in.delta_b * in.delta_b <=
                     tol.at(std::max(1.0, in.scale * in.scale));
    return detail::resolve(in, op, dev, std::max(in.delta_a, in.delta_b),
                           "zero_sum_characterization");
}

/// Qubit case: if (A−α)ρ = (B−β)ρ = 0 then A and B commute. Returns ‖[A,B]‖_F
/// when the hypothesis holds, empty otherwise.
inline std::optional<double> qubit_commutation_witness(const Observable &a, const Observable &b,
                                                       const QuantumState &s,
                                                       const Tolerance &tol = {}) {
    if (a.dim() != 2 || b.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "qubit_commutation_witness: requires n = 2");
    }
    const auto in = detail::zero_inputs(a, b, s, tol);
    if (in.a_residual > in.threshold || in.b_residual > in.threshold) {
        return std::nullopt;
    }
    const double comm = commutator(a.matrix(), b.matrix()).norm();
    if (comm > 4.0 * in.threshold * in.scale) {
        throw Error(ErrorCode::CorollaryViolation,
                    "qubit_commutation_witness: ||[A,B]||_F = " + std::to_string(comm) +
                        " although both centered products vanish");
    }
    return comm;
}

} // namespace uncertainty
