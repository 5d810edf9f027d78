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

// Evaluation of the Robertson, Schrödinger and Maccone–Pati inequalities.
// Every evaluation returns a BoundReport: both sides, the slack, whether the
// instance is saturated, and the tolerance that decision used. A slack below
// -tolerance is impossible mathematically and raises BoundViolation.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "uncertainty/states.hpp"

namespace uncertainty {

struct BoundReport {
    std::string name;
    double lhs{0.0};
    double rhs{0.0};
    double slack{0.0};
    bool saturated{false};
    Tolerance tol_used{};
    std::string inputs_digest;

    /// max(1, |lhs|, |rhs|), the magnitude the tolerance is applied at.
    [[nodiscard]] double scale() const noexcept {
        return std::max({1.0, std::abs(lhs), std::abs(rhs)});
    }
    [[nodiscard]] double threshold() const noexcept { return tol_used.at(scale()); }
    [[nodiscard]] double relative_gap() const noexcept { return std::abs(slack) / scale(); }

    bool operator==(const BoundReport &) const = default;
};

inline BoundReport make_report(std::string name, double lhs, double rhs, const Tolerance &tol,
                               std::string digest) {
    BoundReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.tol_used = tol;
    r.inputs_digest = std::move(digest);
    const double threshold = r.threshold();
    if (r.slack < -threshold) {
        throw Error(ErrorCode::BoundViolation, r.name + ": lhs " + std::to_string(lhs) +
                                                   " < rhs " + std::to_string(rhs) + " (slack " +
                                                   std::to_string(r.slack) + ")");
    }
    r.saturated = std::abs(r.slack) <= threshold;
    return r;
}

namespace detail {

inline std::string digest_of(const Observable &a, const Observable &b, const QuantumState &s) {
    Digest d;
    d.update(a.matrix()).update(b.matrix());
    if (s.is_pure()) {
        d.update(s.pure().amplitudes());
    } else {
        d.update(s.mixed().matrix());
    }
    return d.hex();
}

inline std::string digest_of(const Observable &a, const Observable &b, const PureState &psi,
                             const PureState &phi) {
    Digest d;
    d.update(a.matrix()).update(b.matrix()).update(psi.amplitudes()).update(phi.amplitudes());
    return d.hex();
}

inline void require_pair(const Observable &a, const Observable &b, const PureState &psi,
                         const PureState &phi, const char *what) {
    const Index n = a.dim();
    if (b.dim() != n || psi.dim() != n || phi.dim() != n) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": dimensions differ");
    }
    const double overlap = std::abs(phi.amplitudes().dot(psi.amplitudes()));
    if (overlap > defaults::orthonormal_tol) {
        throw Error(ErrorCode::NotOrthogonal,
                    std::string(what) + ": |<phi|psi>| = " + std::to_string(overlap));
    }
}

inline double real_part_checked(Complex value, double scale, const char *what) {
    if (std::abs(value.imag()) > defaults::imag_tol * std::max(1.0, scale)) {
        throw Error(ErrorCode::NonRealExpectation,
                    std::string(what) + ": imaginary residue " + std::to_string(value.imag()));
    }
    return value.real();
}

inline void require_unit_modulus(Complex mu, const char *what) {
    if (std::abs(std::abs(mu) - 1.0) > defaults::norm_tol) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": |mu| must be 1");
    }
}

} // namespace detail

/// Δ(A)Δ(B) ≥ |⟨[A,B]⟩|/2 for a pure or mixed state.
inline BoundReport robertson(const Observable &a, const Observable &b, const QuantumState &s,
                             const Tolerance &tol = {}) {
    require_dims(a, s, "robertson");
    require_dims(b, s, "robertson");
    const double lhs = stddev(a, s) * stddev(b, s);
    const double rhs = std::abs(state_expectation(commutator(a.matrix(), b.matrix()), s)) / 2.0;
    return make_report(s.is_pure() ? "robertson_pure" : "robertson_mixed", lhs, rhs, tol,
                       detail::digest_of(a, b, s));
}

/// Δ(A)²Δ(B)² ≥ |½⟨{A,B}⟩ − αβ|² + |⟨[A,B]⟩/(2i)|².
inline BoundReport schrodinger(const Observable &a, const Observable &b, const QuantumState &s,
                               const Tolerance &tol = {}) {
    require_dims(a, s, "schrodinger");
    require_dims(b, s, "schrodinger");
    const double da = stddev(a, s);
    const double db = stddev(b, s);
    const double alpha = expectation(a, s);
    const double beta = expectation(b, s);
    const Complex anti = state_expectation(anticommutator(a.matrix(), b.matrix()), s);
    const Complex comm = state_expectation(commutator(a.matrix(), b.matrix()), s);
    const double covariance = std::abs(0.5 * anti - alpha * beta);
    const double commutator_term = std::abs(comm / (2.0 * kI));
    const double rhs = covariance * covariance + commutator_term * commutator_term;
    BoundReport report = make_report(s.is_pure() ? "schrodinger_pure" : "schrodinger_mixed",
                                     da * da * db * db, rhs, tol, detail::digest_of(a, b, s));
    // The anticommutator term only adds to the squared Robertson bound.
    const double robertson_sq = commutator_term * commutator_term;
    if (rhs < robertson_sq - tol.at(std::max(1.0, robertson_sq))) {
        throw Error(ErrorCode::BoundViolation, "schrodinger: rhs below squared Robertson bound");
    }
    return report;
}

/// Proof frame for the Maccone–Pati results: with U unitary whose first two
/// columns are ψ, φ, U†AU = [[α, ⟨u|], [|u⟩, A₁]] and likewise for B with v.
struct MPFrame {
    double alpha{0.0};
    double beta{0.0};
    ComplexVector u;
    ComplexVector v;
    Complex c;  // ⟨ψ|A|φ⟩
    Complex d;  // ⟨ψ|B|φ⟩
    ComplexMatrix basis;
};

inline MPFrame mp_frame(const Observable &a, const Observable &b, const PureState &psi,
                        const PureState &phi) {
    detail::require_pair(a, b, psi, phi, "mp_frame");
    const std::array<ComplexVector, 2> cols{psi.amplitudes(), phi.amplitudes()};
    MPFrame f;
    f.basis = unitary_completion(cols);
    const ComplexMatrix at = f.basis.adjoint() * a.matrix() * f.basis;
    const ComplexMatrix bt = f.basis.adjoint() * b.matrix() * f.basis;
    const Index n = a.dim();
    f.alpha = at(0, 0).real();
    f.beta = bt(0, 0).real();
    f.u = at.col(0).tail(n - 1);
    f.v = bt.col(0).tail(n - 1);
    f.c = psi.amplitudes().dot(a.matrix() * phi.amplitudes());
    f.d = psi.amplitudes().dot(b.matrix() * phi.amplitudes());
    return f;
}

struct ChainReport {
    std::array<BoundReport, 3> steps;
    Complex mu;
    MPFrame frame;
};

/// Δ(A)²+Δ(B)² ≥ |c|²+|d|² ≥ ½(|c|+|d|)² ≥ ½|⟨ψ|(A+μB)|φ⟩|², |μ| = 1.
inline ChainReport mp_chain(const Observable &a, const Observable &b, const PureState &psi,
                            const PureState &phi, Complex mu, const Tolerance &tol = {}) {
    detail::require_unit_modulus(mu, "mp_chain");
    ChainReport out;
    out.frame = mp_frame(a, b, psi, phi);
    out.mu = mu;
    const QuantumState s(psi);
    const double da = stddev(a, s);
    const double db = stddev(b, s);
    const double ac = std::abs(out.frame.c);
    const double ad = std::abs(out.frame.d);
    const Complex combined = psi.amplitudes().dot((a.matrix() + mu * b.matrix()) * phi.amplitudes());
    const std::string digest = detail::digest_of(a, b, psi, phi);

    const double sum_sq = ac * ac + ad * ad;
    const double half_sum = 0.5 * (ac + ad) * (ac + ad);
    out.steps[0] = make_report("mp_chain_step1", da * da + db * db, sum_sq, tol, digest);
    out.steps[1] = make_report("mp_chain_step2", sum_sq, half_sum, tol, digest);
    out.steps[2] = make_report("mp_chain_step3", half_sum, 0.5 * std::norm(combined), tol, digest);
    return out;
}

/// μ = ⟨ψ|A|φ⟩ / ⟨ψ|B|φ⟩, the phase that aligns the last chain step. Empty
/// when ⟨ψ|B|φ⟩ vanishes.
inline std::optional<Complex> mu_ratio(const Observable &a, const Observable &b,
                                       const PureState &psi, const PureState &phi) {
    detail::require_pair(a, b, psi, phi, "mu_ratio");
    const Complex c = psi.amplitudes().dot(a.matrix() * phi.amplitudes());
    const Complex d = psi.amplitudes().dot(b.matrix() * phi.amplitudes());
    if (std::abs(d) <= defaults::norm_tol) {
        return std::nullopt;
    }
    return c / d;
}

struct MuChoice {
    Complex mu{kI};
    Complex commutator_expectation;
    bool tie_broken{false};

    bool operator==(const MuChoice &) const = default;
};

/// Picks μ ∈ {i, −i} with μ⟨ψ|[A,B]|ψ⟩ ≥ 0; μ = i when the expectation vanishes.
inline MuChoice choose_mu(const Observable &a, const Observable &b, const PureState &psi,
                          const Tolerance &tol = {}) {
    const QuantumState s(psi);
    require_dims(a, s, "choose_mu");
    require_dims(b, s, "choose_mu");
    MuChoice out;
    out.commutator_expectation = state_expectation(commutator(a.matrix(), b.matrix()), s);
    // ⟨[A,B]⟩ is purely imaginary, i·t; −i·(i·t) = t.
    const double t = out.commutator_expectation.imag();
    const double threshold = tol.at(std::max(1.0, a.hermitian().norm() * b.hermitian().norm()));
    if (std::abs(t) <= threshold) {
        out.mu = kI;
        out.tie_broken = true;
    } else {
        out.mu = t > 0.0 ? -kI : kI;
    }
    return out;
}

namespace detail {

inline void require_mu_pm_i(Complex mu, const char *what) {
    if (std::abs(mu - kI) > defaults::norm_tol && std::abs(mu + kI) > defaults::norm_tol) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + ": mu must be i or -i");
    }
}

} // namespace detail

/// MP3 evaluated at a caller-chosen μ ∈ {i, −i}. The inequality holds for
/// both signs; `mp3` uses the sign rule from choose_mu.
inline BoundReport mp3_at(const Observable &a, const Observable &b, const PureState &psi,
                          const PureState &phi, Complex mu, const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp3");
    detail::require_mu_pm_i(mu, "mp3");
    const QuantumState s(psi);
    const double da = stddev(a, s);
    const double db = stddev(b, s);
    const Complex comm = state_expectation(commutator(a.matrix(), b.matrix()), s);
    const Complex element = psi.amplitudes().dot((a.matrix() + mu * b.matrix()) * phi.amplitudes());
    const double scale = a.hermitian().norm() * b.hermitian().norm();
    const double rhs = detail::real_part_checked(mu * comm + std::norm(element), scale, "mp3");
    return make_report("mp3", da * da + db * db, rhs, tol, detail::digest_of(a, b, psi, phi));
}

struct Mp3Report {
    BoundReport bound;
    MuChoice mu;
};

/// Δ(A)² + Δ(B)² ≥ μ⟨ψ|[A,B]|ψ⟩ + |⟨ψ|A + μB|φ⟩|².
inline Mp3Report mp3(const Observable &a, const Observable &b, const PureState &psi,
                     const PureState &phi, const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp3");
    Mp3Report out;
    out.mu = choose_mu(a, b, psi, tol);
    out.bound = mp3_at(a, b, psi, phi, out.mu.mu, tol);
    return out;
}

struct Mp6Report {
    /// Δ(A)Δ(B) ≥ (μ/2)⟨[A,B]⟩ / (1 − ½|⟨ψ|Q_μ|φ⟩|²); absent when the
    /// denominator is not safely positive.
    std::optional<BoundReport> product;
    /// 1 − ½|⟨ψ|Q_μ|φ⟩|² ≥ (μ/2)⟨[A,B]⟩ / (Δ(A)Δ(B)).
    BoundReport reformulated;
    MuChoice mu;
    double denominator{0.0};
    bool denominator_degenerate{false};
};

namespace detail {

struct Deviations {
    double a;
    double b;
};

inline Deviations require_nonzero_deviations(const Observable &a, const Observable &b,
                                             const QuantumState &s, const Tolerance &tol,
                                             const char *what) {
    const Deviations d{stddev(a, s), stddev(b, s)};
    if (d.a <= tol.at(std::max(1.0, a.hermitian().norm())) ||
        d.b <= tol.at(std::max(1.0, b.hermitian().norm()))) {
        throw Error(ErrorCode::ZeroDeviation, std::string(what) + ": Delta(A) = " +
                                                  std::to_string(d.a) + ", Delta(B) = " +
                                                  std::to_string(d.b));
    }
    return d;
}

} // namespace detail

inline Mp6Report mp6_at(const Observable &a, const Observable &b, const PureState &psi,
                        const PureState &phi, const MuChoice &mu, const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp6");
    detail::require_mu_pm_i(mu.mu, "mp6");
    const QuantumState s(psi);
    const auto dev = detail::require_nonzero_deviations(a, b, s, tol, "mp6");
    const Complex comm = state_expectation(commutator(a.matrix(), b.matrix()), s);
    const double half_mu_comm = detail::real_part_checked(
        0.5 * mu.mu * comm, a.hermitian().norm() * b.hermitian().norm(), "mp6");
    const ComplexMatrix q = a.matrix() / dev.a + mu.mu * b.matrix() / dev.b;
    const Complex q_element = psi.amplitudes().dot(q * phi.amplitudes());
    const std::string digest = detail::digest_of(a, b, psi, phi);

    Mp6Report out;
    out.mu = mu;
    out.denominator = 1.0 - 0.5 * std::norm(q_element);
    out.reformulated = make_report("mp6_reformulated", out.denominator,
                                   half_mu_comm / (dev.a * dev.b), tol, digest);
    if (out.denominator > tol.at(1.0)) {
        out.product = make_report("mp6_product", dev.a * dev.b, half_mu_comm / out.denominator,
                                  tol, digest);
    } else {
        out.denominator_degenerate = true;
    }
    return out;
}

inline Mp6Report mp6(const Observable &a, const Observable &b, const PureState &psi,
                     const PureState &phi, const Tolerance &tol = {}) {
    detail::require_pair(a, b, psi, phi, "mp6");
    return mp6_at(a, b, psi, phi, choose_mu(a, b, psi, tol), tol);
}

} // namespace uncertainty
