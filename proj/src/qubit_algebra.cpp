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

#include "seqmeas/qubit_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "seqmeas/errors.hpp"

namespace seqmeas {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double trace_real(const Operator2& op, const char* what) {
    const Complex t = op.trace();
    if (std::abs(t.imag()) >= kAlgebraTol) {
        throw InvalidInput(std::string(what) + ": imaginary residue " + std::to_string(t.imag()));
    }
    return t.real();
}

}  // namespace

Operator2::Operator2() : m_{} {}

Operator2::Operator2(Complex a00, Complex a01, Complex a10, Complex a11) : m_{a00, a01, a10, a11} {
    for (const auto& z : m_) {
        if (!finite(z)) throw InvalidInput("Operator2: non-finite entry");
    }
}

Operator2 Operator2::identity() { return {1.0, 0.0, 0.0, 1.0}; }

Operator2 Operator2::outer(const Vec2& ket, const Vec2& bra) {
    return {ket[0] * std::conj(bra[0]), ket[0] * std::conj(bra[1]),
            ket[1] * std::conj(bra[0]), ket[1] * std::conj(bra[1])};
}

Operator2 Operator2::operator+(const Operator2& o) const {
    return {m_[0] + o.m_[0], m_[1] + o.m_[1], m_[2] + o.m_[2], m_[3] + o.m_[3]};
}

Operator2 Operator2::operator-(const Operator2& o) const {
    return {m_[0] - o.m_[0], m_[1] - o.m_[1], m_[2] - o.m_[2], m_[3] - o.m_[3]};
}

Operator2 Operator2::operator*(const Operator2& o) const {
    return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
            m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

Operator2 Operator2::operator*(Complex s) const {
    return {m_[0] * s, m_[1] * s, m_[2] * s, m_[3] * s};
}

Vec2 Operator2::apply(const Vec2& v) const {
    return {m_[0] * v[0] + m_[1] * v[1], m_[2] * v[0] + m_[3] * v[1]};
}

Operator2 Operator2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

bool Operator2::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

std::pair<double, double> Operator2::hermitian_eigenvalues() const {
    const double a = m_[0].real();
    const double d = m_[3].real();
    const Complex b = 0.5 * (m_[1] + std::conj(m_[2]));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

double Operator2::max_abs_diff(const Operator2& o) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < m_.size(); ++i) worst = std::max(worst, std::abs(m_[i] - o.m_[i]));
    return worst;
}

Operator2 commutator(const Operator2& a, const Operator2& b) { return a * b - b * a; }

QubitState QubitState::pure(const Vec2& ket) {
    if (!finite(ket[0]) || !finite(ket[1])) throw InvalidInput("QubitState: non-finite amplitude");
    const double norm2 = std::norm(ket[0]) + std::norm(ket[1]);
    if (std::abs(norm2 - 1.0) >= kAlgebraTol) {
        throw InvalidInput("QubitState: ket not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
    return {Kind::Pure, ket, Operator2::projector(ket)};
}

QubitState QubitState::mixed(const Operator2& density) {
    if (!density.is_hermitian()) throw InvalidInput("QubitState: density not Hermitian");
    if (std::abs(density.trace() - Complex(1.0)) >= kAlgebraTol) {
        throw InvalidInput("QubitState: density trace != 1");
    }
    if (density.hermitian_eigenvalues().first < -kAlgebraTol) {
        throw InvalidInput("QubitState: density not positive semidefinite");
    }
    return {Kind::Mixed, Vec2{}, density};
}

const Vec2& QubitState::ket() const {
    if (kind_ != Kind::Pure) throw InvalidInput("QubitState: mixed state has no ket");
    return ket_;
}

DichotomicObservable::DichotomicObservable(const Operator2& op) : op_(op) {
    if (!op.is_hermitian()) throw InvalidInput("DichotomicObservable: operator not Hermitian");
    const Operator2 id = Operator2::identity();
    if ((op * op).max_abs_diff(id) >= kAlgebraTol) {
        throw InvalidInput("DichotomicObservable: op^2 != identity");
    }
    // op^2 = 1 alone also admits +-identity.
    const auto [lo, hi] = op.hermitian_eigenvalues();
    if (std::abs(lo + 1.0) >= kAlgebraTol || std::abs(hi - 1.0) >= kAlgebraTol) {
        throw InvalidInput("DichotomicObservable: spectrum is not {+1, -1}");
    }
    plus_ = (id + op) * 0.5;
    minus_ = (id - op) * 0.5;
}

const Operator2& DichotomicObservable::projector(int eigenvalue) const {
    if (eigenvalue == 1) return plus_;
    if (eigenvalue == -1) return minus_;
    throw InvalidInput("DichotomicObservable: eigenvalue must be +1 or -1");
}

PovmElement::PovmElement(std::string label, const Operator2& op) : label_(std::move(label)), op_(op) {
    if (!op.is_hermitian()) throw InvalidInput("PovmElement '" + label_ + "': not Hermitian");
    if (op.hermitian_eigenvalues().first < -kAlgebraTol) {
        throw InvalidInput("PovmElement '" + label_ + "': not positive semidefinite");
    }
}

QubitState make_linear_polarization(double angle_deg) {
    if (!std::isfinite(angle_deg)) throw InvalidInput("make_linear_polarization: non-finite angle");
    const double rad = angle_deg * std::numbers::pi / 180.0;
    return QubitState::pure({std::cos(rad), std::sin(rad)});
}

DichotomicObservable make_stokes(StokesAxis axis) {
    switch (axis) {
        case StokesAxis::HV:
            return DichotomicObservable({1.0, 0.0, 0.0, -1.0});
        case StokesAxis::PM:
            return DichotomicObservable({0.0, 1.0, 1.0, 0.0});
    }
    throw InvalidInput("make_stokes: unknown axis");
}

double expectation(const QubitState& state, const Operator2& obs) {
    if (!obs.is_hermitian()) throw InvalidInput("expectation: observable not Hermitian");
    return trace_real(state.density() * obs, "expectation");
}

double born_probability(const QubitState& state, const PovmElement& element) {
    const double p = trace_real(state.density() * element.op(), "born_probability");
    if (p < -kAlgebraTol || p > 1.0 + kAlgebraTol) {
        throw InvalidInput("born_probability: '" + element.label() + "' gives P = " + std::to_string(p));
    }
    return std::clamp(p, 0.0, 1.0);
}

double real_cross_correlation(const QubitState& state, const PovmElement& element,
                              const Operator2& obs) {
    if (!obs.is_hermitian()) throw InvalidInput("real_cross_correlation: observable not Hermitian");
    return (state.density() * element.op() * obs).trace().real();
}

PovmReport validate_povm(const PovmSet& set) {
    PovmReport report;
    Operator2 total;
    double min_eig = 0.0;
    for (const auto& e : set) {
        total = total + e.op();
        const double lo = e.op().hermitian_eigenvalues().first;
        report.min_eigenvalues.push_back(lo);
        min_eig = std::min(min_eig, lo);
    }
    report.completeness_residual = total.max_abs_diff(Operator2::identity());
    report.passed = !set.empty() && report.completeness_residual < kPovmTol && min_eig > -kAlgebraTol;
    return report;
}

}  // namespace seqmeas
