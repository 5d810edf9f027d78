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

// Test-side oracles. These deliberately avoid the library's own helpers:
// plain index loops, textbook variance formulas, explicit 2×2 algebra.
#pragma once

#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "uncertainty/uncertainty.hpp"

namespace oracle {

using uncertainty::Complex;
using uncertainty::ComplexMatrix;
using uncertainty::ComplexVector;
using uncertainty::Index;

inline constexpr double pi = std::numbers::pi;
inline const Complex I{0.0, 1.0};

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

inline ComplexVector vec(std::initializer_list<Complex> entries) {
    ComplexVector v(static_cast<Index>(entries.size()));
    Index i = 0;
    for (Complex z : entries) {
        v(i++) = z;
    }
    return v;
}

inline ComplexMatrix sx() { return mat2(0, 1, 1, 0); }
inline ComplexMatrix sy() { return mat2(0, -I, I, 0); }
inline ComplexMatrix sz() { return mat2(1, 0, 0, -1); }

// Σ conj(x_ij) y_ij by hand.
inline Complex inner(const ComplexMatrix &x, const ComplexMatrix &y) {
    Complex s = 0;
    for (Index i = 0; i < x.rows(); ++i) {
        for (Index j = 0; j < x.cols(); ++j) {
            s += std::conj(x(i, j)) * y(i, j);
        }
    }
    return s;
}

inline Complex braket(const ComplexVector &a, const ComplexMatrix &m, const ComplexVector &b) {
    Complex s = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            s += std::conj(a(i)) * m(i, j) * b(j);
        }
    }
    return s;
}

inline Complex trace_product(const ComplexMatrix &m, const ComplexMatrix &rho) {
    Complex s = 0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            s += m(i, j) * rho(j, i);
        }
    }
    return s;
}

// Var = tr(A²ρ) − tr(Aρ)².
inline double variance(const ComplexMatrix &a, const ComplexMatrix &rho) {
    const double mean = trace_product(a, rho).real();
    return trace_product(a * a, rho).real() - mean * mean;
}

inline ComplexMatrix projector(const ComplexVector &v) { return v * v.adjoint(); }

// Robertson right-hand side |tr([A,B]ρ)|²/4.
inline double robertson_rhs(const ComplexMatrix &a, const ComplexMatrix &b, const ComplexMatrix &rho) {
    return std::norm(trace_product(a * b - b * a, rho)) / 4.0;
}

// Schrödinger right-hand side |½tr({A,B}ρ) − αβ|² + |tr([A,B]ρ)|²/4.
inline double schrodinger_rhs(const ComplexMatrix &a, const ComplexMatrix &b,
                              const ComplexMatrix &rho) {
    const double alpha = trace_product(a, rho).real();
    const double beta = trace_product(b, rho).real();
    const double cov = 0.5 * trace_product(a * b + b * a, rho).real() - alpha * beta;
    return cov * cov + robertson_rhs(a, b, rho);
}

inline double angle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 2.0 * pi);
    return std::min(d, 2.0 * pi - d);
}

} // namespace oracle

#define EXPECT_ERROR_CODE(statement, expected_code)                                               \
    do {                                                                                          \
        try {                                                                                     \
            statement;                                                                            \
            ADD_FAILURE() << "expected " << uncertainty::to_string(expected_code);                \
        } catch (const uncertainty::Error &e) {                                                   \
            EXPECT_EQ(e.code(), expected_code) << e.what();                                       \
        }                                                                                         \
    } while (false)
