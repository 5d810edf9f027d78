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

// Run manifests, suite reports and their JSON/CSV serialization, plus the
// matrix file format used by the command-line tool.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "uncertainty/sampling.hpp"
#include "uncertainty/saturation.hpp"

namespace uncertainty {

inline constexpr const char *kVersion = "0.1.0";

using Json = nlohmann::json;

struct RunManifest {
    std::string command;
    SampleConfig config;
    Tolerance tolerance;
    std::string started;
    std::string finished;
    std::string version{kVersion};

    [[nodiscard]] std::uint64_t seed() const noexcept { return config.seed; }

    bool operator==(const RunManifest &) const = default;
};

struct CertificateRecord {
    std::string name;
    std::optional<SaturationCertificate> certificate;

    bool operator==(const CertificateRecord &) const = default;
};

struct TrialRecord {
    Index index{0};
    std::string label;
    std::vector<BoundReport> bounds;
    std::vector<CertificateRecord> certificates;
    /// Invariant violations. Any entry makes the suite fail.
    std::vector<std::string> failures;
    /// Checks not applicable to this sample (e.g. a vanishing deviation).
    std::vector<std::string> skipped;

    bool operator==(const TrialRecord &) const = default;
};

struct SuiteSummary {
    std::map<std::string, double> min_slack;
    std::map<std::string, Index> evaluated;
    std::map<std::string, Index> saturated;
    std::map<std::string, Index> certified;
    Index failure_count{0};
    std::vector<std::string> failures;

    bool operator==(const SuiteSummary &) const = default;
};

struct SuiteReport {
    RunManifest manifest;
    std::vector<TrialRecord> trials;
    SuiteSummary summary;

    [[nodiscard]] bool ok() const noexcept { return summary.failure_count == 0; }

    bool operator==(const SuiteReport &) const = default;
};

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline SuiteSummary summarize(const std::vector<TrialRecord> &trials) {
    SuiteSummary s;
    for (const auto &t : trials) {
        for (const auto &b : t.bounds) {
            auto [it, inserted] = s.min_slack.try_emplace(b.name, b.slack);
            if (!inserted) {
                it->second = std::min(it->second, b.slack);
            }
            ++s.evaluated[b.name];
            s.saturated[b.name] += b.saturated ? 1 : 0;
        }
        for (const auto &c : t.certificates) {
            s.certified[c.name] += c.certificate ? 1 : 0;
        }
        for (const auto &f : t.failures) {
            s.failures.push_back((t.label.empty() ? "trial " + std::to_string(t.index) : t.label) +
                                 ": " + f);
        }
    }
    s.failure_count = static_cast<Index>(s.failures.size());
    return s;
}

// ---------------------------------------------------------------- JSON ----

inline void to_json(Json &j, const Tolerance &t) {
    j = Json{{"absolute", t.absolute}, {"relative", t.relative}};
}
inline void from_json(const Json &j, Tolerance &t) {
    j.at("absolute").get_to(t.absolute);
    j.at("relative").get_to(t.relative);
}

inline void to_json(Json &j, const SampleConfig &c) {
    j = Json{{"n", c.dimension}, {"rank", c.rank}, {"seed", c.seed}, {"trials", c.count}};
}
inline void from_json(const Json &j, SampleConfig &c) {
    j.at("n").get_to(c.dimension);
    j.at("rank").get_to(c.rank);
    j.at("seed").get_to(c.seed);
    j.at("trials").get_to(c.count);
}

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }
inline Complex complex_from_json(const Json &j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline void to_json(Json &j, const BoundReport &r) {
    j = Json{{"name", r.name},         {"lhs", r.lhs},
             {"rhs", r.rhs},           {"slack", r.slack},
             {"saturated", r.saturated}, {"tol", r.tol_used},
             {"inputs_digest", r.inputs_digest}};
}
inline void from_json(const Json &j, BoundReport &r) {
    j.at("name").get_to(r.name);
    j.at("lhs").get_to(r.lhs);
    j.at("rhs").get_to(r.rhs);
    j.at("slack").get_to(r.slack);
    j.at("saturated").get_to(r.saturated);
    j.at("tol").get_to(r.tol_used);
    j.at("inputs_digest").get_to(r.inputs_digest);
}

namespace detail {

template <typename T> Json optional_to_json(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

template <typename T> std::optional<T> optional_from_json(const Json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

inline CertificateKind kind_from_string(const std::string &s) {
    for (auto k : {CertificateKind::RobertsonPure, CertificateKind::RobertsonMixed,
                   CertificateKind::Schrodinger, CertificateKind::MPChainAll, CertificateKind::MP3,
                   CertificateKind::MP6}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown certificate kind " + s);
}

} // namespace detail

inline void to_json(Json &j, const SaturationCertificate &c) {
    j = Json{{"kind", std::string(to_string(c.kind))},
             {"theta", detail::optional_to_json(c.theta)},
             {"phi", detail::optional_to_json(c.phi)},
             {"mu", c.mu ? complex_to_json(*c.mu) : Json(nullptr)},
             {"residual", c.residual},
             {"r_checked", c.r_checked},
             {"r_residuals", c.r_residuals}};
}
inline void from_json(const Json &j, SaturationCertificate &c) {
    c.kind = detail::kind_from_string(j.at("kind").get<std::string>());
    c.theta = detail::optional_from_json<double>(j, "theta");
    c.phi = detail::optional_from_json<double>(j, "phi");
    c.mu = j.at("mu").is_null() ? std::nullopt : std::optional(complex_from_json(j.at("mu")));
    j.at("residual").get_to(c.residual);
    j.at("r_checked").get_to(c.r_checked);
    j.at("r_residuals").get_to(c.r_residuals);
}

inline void to_json(Json &j, const CertificateRecord &c) {
    j = Json{{"name", c.name}, {"certificate", detail::optional_to_json(c.certificate)}};
}
inline void from_json(const Json &j, CertificateRecord &c) {
    j.at("name").get_to(c.name);
    c.certificate = detail::optional_from_json<SaturationCertificate>(j, "certificate");
}

inline void to_json(Json &j, const TrialRecord &t) {
    j = Json{{"index", t.index},       {"label", t.label},       {"bounds", t.bounds},
             {"certificates", t.certificates}, {"failures", t.failures}, {"skipped", t.skipped}};
}
inline void from_json(const Json &j, TrialRecord &t) {
    j.at("index").get_to(t.index);
    j.at("label").get_to(t.label);
    j.at("bounds").get_to(t.bounds);
    j.at("certificates").get_to(t.certificates);
    j.at("failures").get_to(t.failures);
    j.at("skipped").get_to(t.skipped);
}

inline void to_json(Json &j, const SuiteSummary &s) {
    j = Json{{"min_slack", s.min_slack},         {"evaluated", s.evaluated},
             {"saturated", s.saturated},         {"certified", s.certified},
             {"failure_count", s.failure_count}, {"failures", s.failures}};
}
inline void from_json(const Json &j, SuiteSummary &s) {
    j.at("min_slack").get_to(s.min_slack);
    j.at("evaluated").get_to(s.evaluated);
    j.at("saturated").get_to(s.saturated);
    j.at("certified").get_to(s.certified);
    j.at("failure_count").get_to(s.failure_count);
    j.at("failures").get_to(s.failures);
}

inline void to_json(Json &j, const RunManifest &m) {
    j = Json{{"command", m.command},   {"config", m.config},     {"tolerance", m.tolerance},
             {"started", m.started},   {"finished", m.finished}, {"version", m.version},
             {"seed", m.seed()}};
}
inline void from_json(const Json &j, RunManifest &m) {
    j.at("command").get_to(m.command);
    j.at("config").get_to(m.config);
    j.at("tolerance").get_to(m.tolerance);
    j.at("started").get_to(m.started);
    j.at("finished").get_to(m.finished);
    j.at("version").get_to(m.version);
}

inline void to_json(Json &j, const SuiteReport &r) {
    j = Json{{"manifest", r.manifest}, {"trials", r.trials}, {"summary", r.summary}};
}
inline void from_json(const Json &j, SuiteReport &r) {
    j.at("manifest").get_to(r.manifest);
    j.at("trials").get_to(r.trials);
    j.at("summary").get_to(r.summary);
}

/// Doubles are written in shortest round-trip form, so parsing the output
/// reproduces every value bit for bit.
inline std::string serialize(const SuiteReport &r) { return Json(r).dump(2) + "\n"; }

inline SuiteReport parse_report(const std::string &text) { return Json::parse(text).get<SuiteReport>(); }

/// Per-bound CSV summary: bound,evaluated,saturated,min_slack.
inline std::string summary_csv(const SuiteReport &r) {
    std::ostringstream out;
    out << "bound,evaluated,saturated,certified,min_slack\n";
    char buf[64];
    for (const auto &[name, slack] : r.summary.min_slack) {
        std::snprintf(buf, sizeof(buf), "%.17g", slack);
        const auto certified = r.summary.certified.find(name);
        out << name << ',' << r.summary.evaluated.at(name) << ',' << r.summary.saturated.at(name)
            << ',' << (certified == r.summary.certified.end() ? 0 : certified->second) << ','
            << buf << '\n';
    }
    out << "failures," << r.summary.failure_count << ",,,\n";
    return out.str();
}

// --------------------------------------------------------- matrix files ----

/// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}; "im" may be omitted.
inline ComplexMatrix matrix_from_json(const Json &j) {
    const auto rows = j.at("rows").get<Index>();
    const auto cols = j.at("cols").get<Index>();
    if (rows < 1 || cols < 1) {
        throw Error(ErrorCode::InvalidArgument, "matrix file: rows and cols must be >= 1");
    }
    const Json &re = j.at("re");
    const Json im = j.contains("im") ? j.at("im") : Json(nullptr);
    auto check_shape = [&](const Json &part, const char *name) {
        if (!part.is_array() || static_cast<Index>(part.size()) != rows) {
            throw Error(ErrorCode::DimensionMismatch,
                        std::string("matrix file: '") + name + "' must have `rows` rows");
        }
        for (const auto &row : part) {
            if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
                throw Error(ErrorCode::DimensionMismatch,
                            std::string("matrix file: '") + name + "' rows must have `cols` entries");
            }
        }
    };
    check_shape(re, "re");
    if (!im.is_null()) {
        check_shape(im, "im");
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index k = 0; k < cols; ++k) {
            const auto ui = static_cast<std::size_t>(i);
            const auto uk = static_cast<std::size_t>(k);
            const double imag = im.is_null() ? 0.0 : im[ui][uk].get<double>();
            m(i, k) = Complex(re[ui][uk].get<double>(), imag);
        }
    }
    return m;
}

inline Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json rr = Json::array();
        Json ir = Json::array();
        for (Index k = 0; k < m.cols(); ++k) {
            rr.push_back(m(i, k).real());
            ir.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

/// Two observables, either {"A": matrix, "B": matrix} or [matrix, matrix].
inline std::pair<Observable, Observable> observables_from_json(const Json &j) {
    if (j.is_array()) {
        if (j.size() != 2) {
            throw Error(ErrorCode::InvalidArgument, "input file: expected exactly two matrices");
        }
        return {Observable(matrix_from_json(j[0]), "A"), Observable(matrix_from_json(j[1]), "B")};
    }
    return {Observable(matrix_from_json(j.at("A")), "A"),
            Observable(matrix_from_json(j.at("B")), "B")};
}

inline Json vector_to_json(const ComplexVector &v) {
    Json re = Json::array();
    Json im = Json::array();
    for (Index i = 0; i < v.size(); ++i) {
        re.push_back(v(i).real());
        im.push_back(v(i).imag());
    }
    return Json{{"re", re}, {"im", im}};
}

inline Json constructed_pair_to_json(const ConstructedPair &p) {
    return Json{{"target", std::string(to_string(p.target))},
                {"mu", complex_to_json(p.mu)},
                {"psi", vector_to_json(p.psi.amplitudes())},
                {"phi", vector_to_json(p.phi.amplitudes())},
                {"achieved_slack", p.achieved_slack()},
                {"saturates", p.saturates()},
                {"degenerate", p.degenerate},
                {"report", p.report},
                {"check",
                 {{"saturated", p.check.saturated},
                  {"lhs", p.check.lhs},
                  {"rhs", p.check.rhs},
                  {"residual", p.check.residual}}}};
}

// ----------------------------------------------------------- verify ----

namespace detail {

// Runs one named check, routing errors into failures (invariant
// violations) or skipped (checks that do not apply to this sample).
template <typename Fn> void run_check(TrialRecord &t, const char *name, Fn &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        (is_invariant_violation(e.code()) ? t.failures : t.skipped)
            .push_back(std::string(name) + ": " + e.what());
    } catch (const std::exception &e) {
        t.failures.push_back(std::string(name) + ": " + e.what());
    }
}

inline void add_mu_certificate(TrialRecord &t, const char *name, CertificateKind kind,
                               const SaturationCheck &check, Complex mu) {
    CertificateRecord rec{name, std::nullopt};
    if (check.saturated) {
        SaturationCertificate cert;
        cert.kind = kind;
        cert.mu = mu;
        cert.residual = std::abs(check.residual);
        rec.certificate = cert;
    }
    t.certificates.push_back(std::move(rec));
}

} // namespace detail

/// All bounds and saturation checkers on one sampled (A, B, ψ, φ, ρ).
inline TrialRecord verify_trial(const SampleConfig &config, const Tolerance &tol, Index index) {
    TrialRecord t;
    t.index = index;
    const auto i = static_cast<std::uint64_t>(index);
    const Index n = config.dimension;
    const Observable a = random_hermitian(n, derive_seed(config.seed, i, 0));
    const Observable b = random_hermitian(n, derive_seed(config.seed, i, 1));
    const PureState psi = random_pure_state(n, derive_seed(config.seed, i, 2));
    const DensityMatrix rho = random_density(n, config.rank, derive_seed(config.seed, i, 3));
    const QuantumState pure_state(psi);
    const QuantumState mixed_state(rho);

    detail::run_check(t, "robertson_pure", [&] {
        t.bounds.push_back(robertson(a, b, pure_state, tol));
        t.certificates.push_back({"robertson_pure", robertson_saturation_pure(a, b, psi, tol)});
    });
    detail::run_check(t, "robertson_mixed", [&] {
        t.bounds.push_back(robertson(a, b, mixed_state, tol));
        t.certificates.push_back({"robertson_mixed", robertson_saturation_mixed(a, b, rho, tol)});
    });
    detail::run_check(t, "schrodinger_pure", [&] {
        t.bounds.push_back(schrodinger(a, b, pure_state, tol));
        t.certificates.push_back({"schrodinger_pure", schrodinger_saturation(a, b, pure_state, tol)});
    });
    detail::run_check(t, "schrodinger_mixed", [&] {
        t.bounds.push_back(schrodinger(a, b, mixed_state, tol));
        t.certificates.push_back(
            {"schrodinger_mixed", schrodinger_saturation(a, b, mixed_state, tol)});
    });
    detail::run_check(t, "zero_characterization", [&] {
        zero_product_characterization(a, b, mixed_state, tol);
        zero_sum_characterization(a, b, mixed_state, tol);
    });

    if (n < 2) {
        t.skipped.emplace_back("maccone_pati: needs n >= 2");
        return t;
    }
    const auto [mp_psi, mp_phi] = random_orthonormal_pair(n, derive_seed(config.seed, i, 4));
    detail::run_check(t, "mp3", [&] {
        const Mp3Report r = mp3(a, b, mp_psi, mp_phi, tol);
        t.bounds.push_back(r.bound);
        detail::add_mu_certificate(t, "mp3", CertificateKind::MP3,
                                   mp3_saturation(a, b, mp_psi, mp_phi, r.mu.mu, tol), r.mu.mu);
    });
    detail::run_check(t, "mp6", [&] {
        const Mp6Report r = mp6(a, b, mp_psi, mp_phi, tol);
        t.bounds.push_back(r.reformulated);
        if (r.product) {
            t.bounds.push_back(*r.product);
        }
        detail::add_mu_certificate(t, "mp6", CertificateKind::MP6,
                                   mp6_saturation(a, b, mp_psi, mp_phi, r.mu.mu, tol), r.mu.mu);
    });
    detail::run_check(t, "mp_chain", [&] {
        const Complex mu = choose_mu(a, b, mp_psi, tol).mu;
        const ChainReport chain = mp_chain(a, b, mp_psi, mp_phi, mu, tol);
        t.bounds.insert(t.bounds.end(), chain.steps.begin(), chain.steps.end());
        t.certificates.push_back(
            {"mp_chain_all", mp_chain_saturation(a, b, mp_psi, mp_phi, mu, tol).all});
    });
    return t;
}

/// Evaluates `count` trials on up to `threads` workers. Records are stored
/// by trial index, so the report does not depend on scheduling.
inline std::vector<TrialRecord> run_trials(Index count, unsigned threads,
                                           const std::function<TrialRecord(Index)> &trial) {
    std::vector<TrialRecord> records(static_cast<std::size_t>(count));
    std::atomic<Index> next{0};
    auto worker = [&] {
        for (Index k = next++; k < count; k = next++) {
            records[static_cast<std::size_t>(k)] = trial(k);
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }
    return records;
}

inline SuiteReport run_verify(const SampleConfig &config, const Tolerance &tol,
                              unsigned threads = std::thread::hardware_concurrency()) {
    config.validate();
    SuiteReport report;
    report.manifest.command = "verify";
    report.manifest.config = config;
    report.manifest.tolerance = tol;
    report.manifest.started = utc_timestamp();
    report.trials = run_trials(config.count, threads,
                               [&](Index k) { return verify_trial(config, tol, k); });
    report.manifest.finished = utc_timestamp();
    report.summary = summarize(report.trials);
    return report;
}

} // namespace uncertainty
