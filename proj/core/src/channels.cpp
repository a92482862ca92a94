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

#include "steersim/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace steersim {

namespace {

std::pair<ComplexMatrix, ComplexMatrix> kraus_ops(ChannelKind kind, double p,
                                                  KrausVariant variant) {
  const double sp = std::sqrt(p);
  const double sq = std::sqrt(1.0 - p);
  const bool alt = variant == KrausVariant::alternate;
  switch (kind) {
    case ChannelKind::amplitude_damping:
      if (alt) {
        return {ComplexMatrix::from_rows({{1, 0}, {0, sq}}),
                ComplexMatrix::from_rows({{0, sp}, {0, 0}})};
      }
      return {ComplexMatrix::from_rows({{sq, 0}, {0, 1}}),
              ComplexMatrix::from_rows({{0, 0}, {sp, 0}})};
    case ChannelKind::phase_flip:
      if (alt) {
        return {ComplexMatrix::from_rows({{sq, 0}, {0, -sq}}),
                scale(sp, identity2())};
      }
      return {scale(sq, identity2()), scale(sp, pauli_z())};
    case ChannelKind::bit_flip:
      if (alt) {
        return {scale(sq, pauli_x()), scale(sp, identity2())};
      }
      return {scale(sq, identity2()), scale(sp, pauli_x())};
    case ChannelKind::phase_damping:
      return {ComplexMatrix::from_rows({{1, 0}, {0, sq}}),
              ComplexMatrix::from_rows({{0, 0}, {0, sp}})};
  }
  throw std::logic_error("kraus_ops: bad channel kind");
}

}  // namespace

KrausChannel kraus(ChannelKind kind, double p, KrausVariant variant) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("kraus: p must lie in [0, 1]");
  }
  auto [k0, k1] = kraus_ops(kind, p, variant);
  const ComplexMatrix sum =
      add(mul(adjoint(k0), k0), mul(adjoint(k1), k1));
  if (!approx_equal(sum, identity2(), hermiticity_tol)) {
    throw std::logic_error("kraus: completeness relation violated");
  }
  return KrausChannel{kind, p, variant, std::move(k0), std::move(k1)};
}

DensityMatrix apply(const DensityMatrix& rho, const KrausChannel& ch,
                    DampingTopology topo) {
  const int damped = static_cast<int>(topo);
  const ComplexMatrix* ops[2] = {&ch.k0, &ch.k1};

  ComplexMatrix out(8);
  // One Kraus index per damped party; undamped slots carry the identity.
  const int combos = 1 << damped;
  for (int mask = 0; mask < combos; ++mask) {
    ComplexMatrix op = *ops[mask & 1];
    op = (damped > 1) ? tensor(op, *ops[(mask >> 1) & 1])
                      : tensor(op, identity2());
    op = (damped > 2) ? tensor(op, *ops[(mask >> 2) & 1])
                      : tensor(op, identity2());
    out = add(out, mul(op, mul(rho.matrix(), adjoint(op))));
  }
  return DensityMatrix::from_matrix(std::move(out));
}

DensityMatrix apply_sequence(
    const DensityMatrix& rho,
    const std::vector<std::pair<KrausChannel, DampingTopology>>& stages) {
  if (stages.empty()) {
    throw std::domain_error("apply_sequence: empty channel list");
  }
  DensityMatrix state = rho;
  for (const auto& [ch, topo] : stages) state = apply(state, ch, topo);
  return state;
}

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::amplitude_damping: return "ad";
    case ChannelKind::phase_flip: return "pf";
    case ChannelKind::bit_flip: return "bf";
    case ChannelKind::phase_damping: return "pd";
  }
  return "?";
}

}  // namespace steersim
