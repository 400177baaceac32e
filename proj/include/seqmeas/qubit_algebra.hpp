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

// Exact 2x2 complex operator algebra for a single polarization qubit.
// Basis order is fixed: index 0 = |H>, index 1 = |V>.

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace seqmeas {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

inline constexpr double kAlgebraTol = 1e-10;
inline constexpr double kPovmTol = 1e-9;
inline constexpr double kHermitianTol = 1e-12;

/// Complex 2x2 operator, row-major. Entries are checked finite on construction.
class Operator2 {
 public:
    Operator2();  // zero
    Operator2(Complex a00, Complex a01, Complex a10, Complex a11);

    static Operator2 identity();
    static Operator2 outer(const Vec2& ket, const Vec2& bra);  // |ket><bra|
    static Operator2 projector(const Vec2& v) { return outer(v, v); }

    const Complex& operator()(int row, int col) const { return m_[row * 2 + col]; }

    Operator2 operator+(const Operator2& o) const;
    Operator2 operator-(const Operator2& o) const;
    Operator2 operator*(const Operator2& o) const;
    Operator2 operator*(Complex s) const;
    friend Operator2 operator*(Complex s, const Operator2& op) { return op * s; }

    Vec2 apply(const Vec2& v) const;
    Operator2 adjoint() const;
    Complex trace() const { return m_[0] + m_[3]; }

    bool is_hermitian(double tol = kHermitianTol) const;

    /// Eigenvalues of the Hermitian part, ascending (closed form).
    std::pair<double, double> hermitian_eigenvalues() const;

    /// Largest entrywise |a_ij - b_ij|.
    double max_abs_diff(const Operator2& o) const;

 private:
    std::array<Complex, 4> m_;
};

Operator2 commutator(const Operator2& a, const Operator2& b);

/// Pure ket or density operator. Invariants are enforced by the factories.
class QubitState {
 public:
    enum class Kind { Pure, Mixed };

    static QubitState pure(const Vec2& ket);
    static QubitState mixed(const Operator2& density);

    Kind kind() const noexcept { return kind_; }
    const Vec2& ket() const;  // throws InvalidInput for mixed states
    const Operator2& density() const noexcept { return rho_; }

 private:
    QubitState(Kind kind, Vec2 ket, Operator2 rho) : kind_(kind), ket_(ket), rho_(rho) {}

    Kind kind_;
    Vec2 ket_;
    Operator2 rho_;
};

/// Hermitian operator with spectrum {+1, -1}, plus its spectral projectors.
class DichotomicObservable {
 public:
    explicit DichotomicObservable(const Operator2& op);

    const Operator2& op() const noexcept { return op_; }
    const Operator2& projector_plus() const noexcept { return plus_; }
    const Operator2& projector_minus() const noexcept { return minus_; }
    const Operator2& projector(int eigenvalue) const;

 private:
    Operator2 op_;
    Operator2 plus_;
    Operator2 minus_;
};

class PovmElement {
 public:
    PovmElement(std::string label, const Operator2& op);

    const std::string& label() const noexcept { return label_; }
    const Operator2& op() const noexcept { return op_; }

 private:
    std::string label_;
    Operator2 op_;
};

using PovmSet = std::vector<PovmElement>;

struct PovmReport {
    double completeness_residual = 0.0;    // max entrywise |sum E - I|
    std::vector<double> min_eigenvalues;   // one per element
    bool passed = false;
};

enum class StokesAxis { HV, PM };

/// cos(angle)|H> + sin(angle)|V>, angle in degrees.
QubitState make_linear_polarization(double angle_deg);
DichotomicObservable make_stokes(StokesAxis axis);

/// Tr(rho obs) for Hermitian obs.
double expectation(const QubitState& state, const Operator2& obs);
double born_probability(const QubitState& state, const PovmElement& element);

/// Re Tr(rho E A). Direct operator-product evaluation of the outcome/observable
/// correlation.
double real_cross_correlation(const QubitState& state, const PovmElement& element,
                              const Operator2& obs);

PovmReport validate_povm(const PovmSet& set);

}  // namespace seqmeas
