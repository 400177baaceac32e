// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Test-only brute-force evaluation on raw complex matrices. Shares no code
// with the library's operator algebra.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "seqmeas/qubit_algebra.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::array<std::array<C, 2>, 2>;
using Ket = std::array<C, 2>;

inline Mat mul(const Mat& a, const Mat& b) {
    Mat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

/// <psi| M |psi>
inline C sandwich(const Ket& psi, const Mat& m) {
    C s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += std::conj(psi[i]) * m[i][j] * psi[j];
    return s;
}

/// Re <psi| E A |psi>
inline double cross(const Ket& psi, const Mat& e, const Mat& a) { return sandwich(psi, mul(e, a)).real(); }

inline double prob(const Ket& psi, const Mat& e) { return sandwich(psi, e).real(); }

inline seqmeas::Operator2 to_op(const Mat& m) { return {m[0][0], m[0][1], m[1][0], m[1][1]}; }

inline Ket linear(double deg) {
    const double r = deg * std::numbers::pi / 180.0;
    return {std::cos(r), std::sin(r)};
}

/// Uniform-ish random pure state.
inline Ket random_ket(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Ket k{C(g(rng), g(rng)), C(g(rng), g(rng))};
    const double n = std::sqrt(std::norm(k[0]) + std::norm(k[1]));
    return {k[0] / n, k[1] / n};
}

/// n . sigma for a random unit Bloch vector n.
inline Mat random_dichotomic(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    double x = g(rng), y = g(rng), z = g(rng);
    const double n = std::sqrt(x * x + y * y + z * z);
    x /= n;
    y /= n;
    z /= n;
    return Mat{{{C(z, 0), C(x, -y)}, {C(x, y), C(-z, 0)}}};
}

/// Random element 0 <= E <= 1: U diag(a, b) U^dagger.
inline Mat random_effect(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const Ket v = random_ket(rng);
    const Ket w{-std::conj(v[1]), std::conj(v[0])};
    const double a = u(rng), b = u(rng);
    Mat e{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e[i][j] = a * v[i] * std::conj(v[j]) + b * w[i] * std::conj(w[j]);
    return e;
}

inline Mat complement(const Mat& e) {
    return Mat{{{1.0 - e[0][0], -e[0][1]}, {-e[1][0], 1.0 - e[1][1]}}};
}

}  // namespace oracle
