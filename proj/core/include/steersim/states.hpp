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

#include "steersim/complex_matrix.hpp"

namespace steersim {

/// 8x8 density operator of the three-qubit system, basis ordered with Alice
/// on the most significant bit: index b2 b1 b0 = |Alice Bob Charlie>.
/// Construction validates Hermiticity, unit trace and positivity (1e-10).
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(ComplexMatrix m);
  /// Projector |psi><psi| from an 8-amplitude vector (normalized within tol).
  static DensityMatrix pure(const std::vector<Complex>& amplitudes);

  const ComplexMatrix& matrix() const { return mat_; }
  Complex operator()(int r, int c) const { return mat_(r, c); }
  double purity() const;  // trace(rho^2)

  bool operator==(const DensityMatrix&) const = default;

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

// The three pure-state families. All amplitudes are real and nonnegative.
//
//   gghz(theta)        cos(theta)|000> + sin(theta)|111>
//   wclass(c0, c1)     c0|001> + c1|010> + sqrt(1-c0^2-c1^2)|100>
//   one_param_w(d0)    d0|001> + sqrt((1-d0^2)/2) (|010> + |100>)
//
// Domains: theta in (0, pi/2); 0 < c0, c1 <= 1/sqrt(3); 0 < d0 <= 1/sqrt(3).
// The upper boundaries are the GHZ / W target states of the filter module and
// are deliberately included.
DensityMatrix gghz(double theta);
DensityMatrix wclass(double c0, double c1);
DensityMatrix one_param_w(double d0);

inline DensityMatrix ghz_state() { return gghz(0.78539816339744831); }
DensityMatrix w_state();

}  // namespace steersim
