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

#include <utility>
#include <vector>

#include "steersim/complex_matrix.hpp"
#include "steersim/states.hpp"

namespace steersim {

enum class ChannelKind { amplitude_damping, phase_flip, bit_flip, phase_damping };

/// Two Kraus-operator placements are in circulation for these channels and
/// they are NOT interchangeable; the simulator ships both.
///
/// primary (the default; the identity channel at p = 0, p is the probability
/// of the noise event). This is the set under which all reference thresholds
/// in the test suite hold:
///   AD: K0 = [[sqrt(1-p), 0], [0, 1]],        K1 = [[0, 0], [sqrt(p), 0]]
///   PF: K0 = sqrt(1-p) * I,                   K1 = sqrt(p) * Z
///   BF: K0 = sqrt(1-p) * I,                   K1 = sqrt(p) * X
///   PD: K0 = [[1, 0], [0, sqrt(1-p)]],        K1 = [[0, 0], [0, sqrt(p)]]
///
/// alternate (the mirrored placement):
///   AD: K0 = [[1, 0], [0, sqrt(1-p)]],        K1 = [[0, sqrt(p)], [0, 0]]
///       (the damping direction is reversed: it drains |1> instead of |0>)
///   PF: K0 = [[sqrt(1-p), 0], [0, -sqrt(1-p)]], K1 = sqrt(p) * I
///   BF: K0 = sqrt(1-p) * X,                   K1 = sqrt(p) * I
///       (for PF/BF the flip branch carries sqrt(1-p), so p = 0 is a
///       deterministic flip and p = 1 the identity)
///   PD: identical to primary (the two placements coincide).
enum class KrausVariant { primary, alternate };

/// Single-qubit damping channel: an ordered pair of 2x2 Kraus operators
/// satisfying K0^dag K0 + K1^dag K1 = I (checked at construction, 1e-10).
struct KrausChannel {
  ChannelKind kind;
  double p;  // decoherence probability, in [0, 1]
  KrausVariant variant;
  ComplexMatrix k0;
  ComplexMatrix k1;
};

KrausChannel kraus(ChannelKind kind, double p,
                   KrausVariant variant = KrausVariant::primary);

/// Which parties' qubits pass through the damping channel. Nested: one-sided
/// damps Alice; two-sided Alice and Bob; three-sided all three.
enum class DampingTopology { one_sided = 1, two_sided = 2, three_sided = 3 };

/// Kraus sum over the damped parties, one index per party, equal channel and
/// strength on each.
DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch,
                    DampingTopology topo);

/// Left-to-right sequential application. Throws on an empty list.
DensityMatrix apply_sequence(
    const DensityMatrix& rho,
    const std::vector<std::pair<KrausChannel, DampingTopology>>& stages);

const char* to_string(ChannelKind kind);

}  // namespace steersim
