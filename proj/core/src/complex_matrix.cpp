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

#include "steersim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace steersim {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw std::logic_error(std::string(op) + ": dimension mismatch (" +
                           std::to_string(a.dim()) + " vs " +
                           std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(static_cast<int>(rows.size()));
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.dim()) {
      throw std::logic_error("from_rows: ragged initializer");
    }
    int c = 0;
    for (Complex z : row) m(r, c++) = z;
    ++r;
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mul");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

ComplexMatrix scale(Complex factor, const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = factor * m(i, j);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (std::abs(a(i, j) - b(i, j)) > tol) return false;
  return true;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  }
  const int n = m.dim();
  ComplexMatrix a = m;
  // Symmetrize away roundoff so the rotations below stay exact.
  for (int i = 0; i < n; ++i) {
    a(i, i) = Complex{a(i, i).real(), 0.0};
    for (int j = i + 1; j < n; ++j) {
      const Complex mean = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = mean;
      a(j, i) = std::conj(mean);
    }
  }

  // Cyclic complex Jacobi: at each step zero out a(p,q) with a unitary
  // rotation in the (p,q) plane. Converges quadratically; 8x8 inputs are
  // done in a handful of sweeps.
  constexpr int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off < 1e-28) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) < 1e-16) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotation angle for the 2x2 Hermitian block [[app, apq], [apq*, aqq]].
        const double absapq = std::abs(apq);
        const Complex phase = apq / absapq;
        const double theta = 0.5 * std::atan2(2.0 * absapq, app - aqq);
        const double c = std::cos(theta);
        const Complex s = std::sin(theta) * phase;

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + std::conj(s) * akq;
          a(k, q) = -s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + s * aqk;
          a(q, k) = -std::conj(s) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex{a(p, p).real(), 0.0};
        a(q, q) = Complex{a(q, q).real(), 0.0};
      }
    }
  }

  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eigenvalues(m, tol);
  return eig.empty() || eig.front() >= -tol;
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m =
      ComplexMatrix::from_rows({{0, Complex{0, -1}}, {Complex{0, 1}, 0}});
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{1, 0}, {0, -1}});
  return m;
}

}  // namespace steersim
