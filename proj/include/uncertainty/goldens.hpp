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

// Closed-form instances with known answers, evaluated by `reproduce`.
#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "uncertainty/report.hpp"

namespace uncertainty {

namespace golden {

inline constexpr double kAngleTol = 1e-9;
inline constexpr double kExactTol = 1e-12;
inline constexpr double kRTol = 1e-9;

// M4 instance: A = [[0, I], [I, 0]], B = [[0, −iI], [iI, 0]], ρ = I/2 ⊕ 0.
inline Observable m4_a() {
    ComplexMatrix a = ComplexMatrix::Zero(4, 4);
    a.topRightCorner(2, 2).setIdentity();
    a.bottomLeftCorner(2, 2).setIdentity();
    return Observable(a, "A");
}

inline Observable m4_b() {
    ComplexMatrix b = ComplexMatrix::Zero(4, 4);
    b.topRightCorner(2, 2) = -kI * Eigen::Matrix2cd::Identity();
    b.bottomLeftCorner(2, 2) = kI * Eigen::Matrix2cd::Identity();
    return Observable(b, "B");
}

inline DensityMatrix m4_rho() {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.5;
    return DensityMatrix(rho);
}

/// (sin(θ/2), −e^{iφ} cos(θ/2)), orthogonal to bloch_state(θ, φ).
inline PureState bloch_partner(double theta, double phi) {
    ComplexVector v(2);
    v << std::sin(theta / 2.0), -std::polar(1.0, phi) * std::cos(theta / 2.0);
    return PureState(v);
}

/// Distance from (θ, φ) to the set where |⟨ψ|σx|φ⟩| = |⟨ψ|σy|φ⟩|:
/// θ ∈ {0, π} or φ an odd multiple of π/4.
inline double distance_to_step2_set(double theta, double phi) {
    using std::numbers::pi;
    const double to_theta = std::min(std::abs(theta), std::abs(pi - theta));
    const double shifted = wrap_angle(phi - pi / 4.0);
    const double quarter = std::fmod(shifted, pi / 2.0);
    const double to_phi = std::min(quarter, pi / 2.0 - quarter);
    return std::min(to_theta, to_phi);
}

inline double angle_error(double actual, double expected) {
    const double d = wrap_angle(actual - expected);
    return std::min(d, kTwoPi - d);
}

inline void expect(TrialRecord &t, bool ok, const std::string &message) {
    if (!ok) {
        t.failures.push_back(message);
    }
}

inline std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

template <typename Fn> TrialRecord evaluate(const std::string &id, Fn &&body) {
    TrialRecord t;
    t.label = id;
    try {
        body(t);
    } catch (const std::exception &e) {
        t.failures.push_back(std::string("unexpected error: ") + e.what());
    }
    return t;
}

inline TrialRecord pauli_pole(const std::string &id, double bloch_theta, double expected) {
    return evaluate(id, [&](TrialRecord &t) {
        const Observable a(pauli::x(), "sigma_x");
        const Observable b(pauli::y(), "sigma_y");
        const PureState psi = bloch_state(bloch_theta, 0.0);
        const BoundReport r = robertson(a, b, psi);
        t.bounds.push_back(r);
        expect(t, std::abs(r.lhs - r.rhs) <= kExactTol, "robertson slack " + fmt(r.slack));
        const auto cert = robertson_saturation_pure(a, b, psi);
        t.certificates.push_back({"robertson_pure", cert});
        expect(t, cert.has_value(), "no Robertson certificate");
        if (cert) {
            expect(t, angle_error(*cert->theta, expected) <= kAngleTol,
                   "theta " + fmt(*cert->theta) + ", expected " + fmt(expected));
        }
    });
}

inline TrialRecord pauli_pole_schrodinger() {
    return evaluate("example-2.2-schrodinger", [](TrialRecord &t) {
        const Observable a(pauli::x(), "sigma_x");
        const Observable b(pauli::y(), "sigma_y");
        for (double bloch_theta : {0.0, std::numbers::pi}) {
            const PureState psi = bloch_state(bloch_theta, 0.0);
            const BoundReport r = schrodinger(a, b, psi);
            t.bounds.push_back(r);
            expect(t, std::abs(r.slack) <= kExactTol, "schrodinger slack " + fmt(r.slack));
            const auto cert = schrodinger_saturation(a, b, psi);
            t.certificates.push_back({"schrodinger", cert});
            expect(t, cert.has_value(), "no Schrodinger certificate");
        }
        // Off the poles the Robertson bound is strict but Schrödinger's may not be;
        // the certificate must still agree with the slack (checked inside).
        const PureState equator = bloch_state(std::numbers::pi / 2.0, 0.3);
        t.bounds.push_back(schrodinger(a, b, equator));
        t.certificates.push_back({"schrodinger", schrodinger_saturation(a, b, equator)});
    });
}

inline TrialRecord block_robertson() {
    return evaluate("example-m4", [](TrialRecord &t) {
        const Observable a = m4_a();
        const Observable b = m4_b();
        const QuantumState rho(m4_rho());
        const Complex a2 = state_expectation(a.matrix() * a.matrix(), rho);
        const Complex b2 = state_expectation(b.matrix() * b.matrix(), rho);
        const Complex comm = state_expectation(commutator(a.matrix(), b.matrix()), rho);
        expect(t, std::abs(a2 * b2 - 1.0) <= kExactTol, "tr(A^2 rho) tr(B^2 rho) != 1");
        // Robertson's right-hand side |tr([A,B]ρ)/2|²; tr([A,B]ρ) itself is 2i.
        expect(t, std::abs(std::norm(0.5 * comm) - 1.0) <= kExactTol,
               "|tr([A,B] rho)/2|^2 = " + fmt(std::norm(0.5 * comm)));
        const BoundReport r = robertson(a, b, rho);
        t.bounds.push_back(r);
        expect(t, std::abs(r.lhs - 1.0) <= kExactTol && std::abs(r.rhs - 1.0) <= kExactTol,
               "robertson lhs " + fmt(r.lhs) + ", rhs " + fmt(r.rhs));
        const auto cert = robertson_saturation_mixed(a, b, rho.mixed());
        t.certificates.push_back({"robertson_mixed", cert});
        expect(t, cert.has_value(), "no mixed Robertson certificate");
        if (cert) {
            expect(t, angle_error(*cert->theta, std::numbers::pi / 4.0) <= kAngleTol,
                   "theta " + fmt(*cert->theta));
            expect(t, cert->r_checked == default_r_list(), "r list not fully checked");
            for (double res : cert->r_residuals) {
                expect(t, res <= kRTol, "r residual " + fmt(res));
            }
        }
    });
}

inline TrialRecord block_schrodinger() {
    return evaluate("example-m4-schrodinger", [](TrialRecord &t) {
        const QuantumState rho(m4_rho());
        const BoundReport r = schrodinger(m4_a(), m4_b(), rho);
        t.bounds.push_back(r);
        expect(t, std::abs(r.slack) <= kExactTol, "schrodinger slack " + fmt(r.slack));
        const auto cert = schrodinger_saturation(m4_a(), m4_b(), rho);
        t.certificates.push_back({"schrodinger", cert});
        expect(t, cert.has_value(), "no Schrodinger certificate");
        if (cert) {
            for (double res : cert->r_residuals) {
                expect(t, res <= kRTol, "r residual " + fmt(res));
            }
        }
    });
}

inline constexpr int kGridSize = 25;
inline constexpr double kGridSeparation = 0.1;
inline constexpr double kStep2Exact = 1e-10;
inline constexpr double kStep2Fail = 1e-6;

inline TrialRecord bloch_chain_grid() {
    return evaluate("example-3.2-grid", [](TrialRecord &t) {
        using std::numbers::pi;
        const Observable a(pauli::x(), "sigma_x");
        const Observable b(pauli::y(), "sigma_y");
        double worst_step1 = 0.0;
        int step2_exact = 0;
        int step2_separated = 0;
        for (int i = 0; i < kGridSize; ++i) {
            const double theta = pi * i / (kGridSize - 1);
            for (int k = 0; k < kGridSize; ++k) {
                const double phi = kTwoPi * k / (kGridSize - 1);
                const PureState psi = bloch_state(theta, phi);
                const PureState partner = bloch_partner(theta, phi);
                const ChainSaturation sat = mp_chain_saturation(a, b, psi, partner, kI);
                const ChainReport chain = mp_chain(a, b, psi, partner, kI);
                worst_step1 = std::max(worst_step1, std::abs(chain.steps[0].slack));
                const double dist = distance_to_step2_set(theta, phi);
                const std::string where = "(" + fmt(theta) + ", " + fmt(phi) + ")";
                if (dist <= 1e-12) {
                    ++step2_exact;
                    expect(t, sat.residuals[1] <= kStep2Exact,
                           "step 2 residual " + fmt(sat.residuals[1]) + " at " + where);
                    // Third step closes with the ratio μ = c/d, unimodular here.
                    if (const auto mu = mu_ratio(a, b, psi, partner)) {
                        const ChainSaturation all = mp_chain_saturation(a, b, psi, partner, *mu);
                        expect(t, all.residuals[2] <= kStep2Exact,
                               "step 3 residual " + fmt(all.residuals[2]) + " at " + where);
                    }
                } else if (dist >= kGridSeparation) {
                    ++step2_separated;
                    expect(t, sat.residuals[1] > kStep2Fail,
                           "step 2 holds away from the solution set at " + where);
                }
            }
        }
        expect(t, worst_step1 <= kExactTol, "step 1 residual " + fmt(worst_step1));
        expect(t, step2_exact > 0 && step2_separated > 0, "grid misses a region");

        const auto mu0 = mu_ratio(a, b, bloch_state(0.0, 0.7), bloch_partner(0.0, 0.7));
        const auto mupi = mu_ratio(a, b, bloch_state(pi, 0.7), bloch_partner(pi, 0.7));
        expect(t, mu0 && std::abs(*mu0 - kI) <= kExactTol, "mu at theta = 0 is not i");
        expect(t, mupi && std::abs(*mupi + kI) <= kExactTol, "mu at theta = pi is not -i");
    });
}

inline TrialRecord case1_pauli() {
    return evaluate("case1-pauli", [](TrialRecord &t) {
        const ConstructedPair p =
            construct_case1(Observable(pauli::x(), "sigma_x"), Observable(pauli::y(), "sigma_y"));
        t.bounds.push_back(p.report);
        expect(t, std::abs(p.report.slack) <= kExactTol, "mp3 slack " + fmt(p.report.slack));
        expect(t, p.check.saturated, "mp3 equality check failed");
    });
}

} // namespace golden

inline std::vector<TrialRecord> golden_records() {
    using std::numbers::pi;
    std::vector<TrialRecord> out;
    out.push_back(golden::pauli_pole("example-2.2-theta0", 0.0, pi / 4.0));
    out.push_back(golden::pauli_pole("example-2.2-theta-pi", pi, -pi / 4.0));
    out.push_back(golden::pauli_pole_schrodinger());
    out.push_back(golden::block_robertson());
    out.push_back(golden::block_schrodinger());
    out.push_back(golden::bloch_chain_grid());
    out.push_back(golden::case1_pauli());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].index = static_cast<Index>(k);
    }
    return out;
}

inline SuiteReport run_reproduce() {
    SuiteReport report;
    report.manifest.command = "reproduce";
    report.manifest.started = utc_timestamp();
    report.trials = golden_records();
    report.manifest.finished = utc_timestamp();
    report.summary = summarize(report.trials);
    return report;
}

/// IDs of goldens with at least one failure.
inline std::vector<std::string> failed_goldens(const SuiteReport &report) {
    std::vector<std::string> ids;
    for (const auto &t : report.trials) {
        if (!t.failures.empty()) {
            ids.push_back(t.label);
        }
    }
    return ids;
}

} // namespace uncertainty
