// Copyright 2026 The steersim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace steersim {

using Complex = std::complex<double>;

// Default tolerance for Hermiticity / positivity checks.
inline constexpr double hermiticity_tol = 1e-10;
// Default absolute tolerance for comparisons of real observables.
inline constexpr double observable_tol = 1e-9;

/// Dense square complex matrix, row-major. Everything in this simulator is
/// 2x2 (single-qubit operators) or 8x8 (three-qubit states), so storage is a
/// plain flat vector and all algorithms are the straightforward O(n^3) ones.
/// Values are immutable in practice: every operation returns a fresh matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(dim * dim) {}

  /// Builds from nested braces, e.g. {{1, 0}, {0, 1}}. Rows must be square.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex operator()(int r, int c) const { return entries_[r * dim_ + c]; }
  Complex& operator()(int r, int c) { return entries_[r * dim_ + c]; }
  const std::vector<Complex>& entries() const { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(Complex factor, const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

/// Kronecker product with the left factor on the most significant index
/// (Alice ⊗ Bob ⊗ Charlie ordering throughout the project).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mul(a, b);
}
inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  return add(a, b);
}
inline ComplexMatrix operator*(Complex z, const ComplexMatrix& m) {
  return scale(z, m);
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol = hermiticity_tol);

/// Eigenvalues of a Hermitian matrix via cyclic Jacobi rotations, ascending.
/// Throws std::invalid_argument if the input is not Hermitian within tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tol = hermiticity_tol);

/// True iff all eigenvalues are >= -tol. Requires a Hermitian input.
bool is_psd(const ComplexMatrix& m, double tol = hermiticity_tol);

// Single-qubit operator constants.
const ComplexMatrix& identity2();
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace steersim
