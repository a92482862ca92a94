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

namespace steersim {

struct Bracket {
  double lo;
  double hi;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

/// Shrinks [lo, hi] around a sign change of f until the bracket is narrower
/// than tol. The caller guarantees f(lo) and f(hi) have opposite signs;
/// lo_negative states the sign of f(lo).
template <typename F>
Bracket bisect(F&& f, double lo, double hi, bool lo_negative, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Bracket{lo, hi};
}

}  // namespace steersim
