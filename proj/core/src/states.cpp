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

#include "steersim/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steersim {

namespace {

constexpr double inv_sqrt3 = 0.57735026918962576;
// Slack for callers passing 1/sqrt(3) or pi/2 computed in floating point.
constexpr double domain_slack = 1e-12;

}  // namespace

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  if (m.dim() != 8) {
    throw std::logic_error("DensityMatrix: dimension must be 8");
  }
  if (!is_hermitian(m, hermiticity_tol)) {
    throw std::domain_error("DensityMatrix: not Hermitian");
  }
  if (std::abs(trace(m) - Complex{1.0}) > hermiticity_tol) {
    throw std::domain_error("DensityMatrix: trace != 1");
  }
  if (!is_psd(m, hermiticity_tol)) {
    throw std::domain_error("DensityMatrix: not positive semidefinite");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& amplitudes) {
  if (amplitudes.size() != 8) {
    throw std::logic_error("DensityMatrix::pure: need 8 amplitudes");
  }
  ComplexMatrix m(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return from_matrix(std::move(m));
}

double DensityMatrix::purity() const { return trace(mul(mat_, mat_)).real(); }

DensityMatrix gghz(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2 + domain_slack)) {
    throw std::domain_error("gghz: theta must lie in (0, pi/2)");
  }
  std::vector<Complex> amp(8);
  amp[0] = std::cos(theta);
  amp[7] = std::sin(theta);
  return DensityMatrix::pure(amp);
}

DensityMatrix wclass(double c0, double c1) {
  if (!(c0 > 0.0 && c0 <= inv_sqrt3 + domain_slack) ||
      !(c1 > 0.0 && c1 <= inv_sqrt3 + domain_slack)) {
    throw std::domain_error("wclass: c0, c1 must lie in (0, 1/sqrt(3)]");
  }
  const double rest = 1.0 - c0 * c0 - c1 * c1;
  if (rest < -domain_slack) {
    throw std::domain_error("wclass: c0^2 + c1^2 must be < 1");
  }
  std::vector<Complex> amp(8);
  amp[1] = c0;                              // |001>
  amp[2] = c1;                              // |010>
  amp[4] = std::sqrt(std::max(rest, 0.0));  // |100>
  return DensityMatrix::pure(amp);
}

DensityMatrix one_param_w(double d0) {
  if (!(d0 > 0.0 && d0 <= inv_sqrt3 + domain_slack)) {
    throw std::domain_error("one_param_w: d0 must lie in (0, 1/sqrt(3)]");
  }
  const double side = std::sqrt(std::max(1.0 - d0 * d0, 0.0) / 2.0);
  std::vector<Complex> amp(8);
  amp[1] = d0;
  amp[2] = side;
  amp[4] = side;
  return DensityMatrix::pure(amp);
}

DensityMatrix w_state() { return wclass(inv_sqrt3, inv_sqrt3); }

}  // namespace steersim
