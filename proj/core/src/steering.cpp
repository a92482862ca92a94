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

#include "steersim/steering.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "steersim/bisect.hpp"

namespace steersim {

namespace {

constexpr double third = 1.0 / 3.0;

ObservableSlot fx(Pauli p) { return ObservableSlot::fixed(p); }
ObservableSlot st(int i) { return ObservableSlot::setting(i); }

InequalityTerm term(double coef, ObservableSlot a, ObservableSlot b,
                    ObservableSlot c) {
  return InequalityTerm{coef, a, b, c};
}

SteeringInequality make_g1() {
  const auto I = fx(Pauli::i), X = fx(Pauli::x), Y = fx(Pauli::y),
             Z = fx(Pauli::z);
  return SteeringInequality(
      InequalityName::g1, "G1", Scenario::one_to_two, 1.0,
      {
          term(0.1547, I, Z, Z),
          term(-third, st(3), Z, I), term(-third, st(3), I, Z),
          term(-third, st(1), X, X), term(third, st(1), Y, Y),
          term(third, st(2), X, Y), term(third, st(2), Y, X),
      });
}

SteeringInequality make_g2() {
  const double alpha = 0.183;
  const double beta = 0.258;
  const auto I = fx(Pauli::i), X = fx(Pauli::x), Y = fx(Pauli::y),
             Z = fx(Pauli::z);
  // b-slot settings are Bob's; the bare Pauli in the c slot is Charlie's.
  return SteeringInequality(
      InequalityName::g2, "G2", Scenario::two_to_one, 1.0,
      {
          term(-alpha, st(3), st(3), I),
          term(-alpha, st(3), I, Z),
          term(-alpha, I, st(3), Z),
          term(-beta, st(1), st(1), X), term(beta, st(1), st(2), Y),
          term(beta, st(2), st(1), Y), term(beta, st(2), st(2), X),
      });
}

SteeringInequality make_w1() {
  const auto I = fx(Pauli::i), X = fx(Pauli::x), Y = fx(Pauli::y),
             Z = fx(Pauli::z);
  return SteeringInequality(
      InequalityName::w1, "W1", Scenario::one_to_two, 1.0,
      {
          term(0.4405, I, Z, I), term(0.4405, I, I, Z),
          term(-0.0037, I, Z, Z),
          term(-0.1570, I, X, X), term(-0.1570, I, Y, Y),
          term(-0.1570, st(3), X, X), term(-0.1570, st(3), Y, Y),
          term(0.2424, st(3), I, I), term(0.2424, st(3), Z, Z),
          term(0.1848, st(3), Z, I), term(0.1848, st(3), I, Z),
          term(-0.2533, st(1), X, I), term(-0.2533, st(1), I, X),
          term(-0.2533, st(2), Y, I), term(-0.2533, st(2), I, Y),
          term(-0.2533, st(1), X, Z), term(-0.2533, st(1), Z, X),
          term(-0.2533, st(2), Y, Z), term(-0.2533, st(2), Z, Y),
      });
}

SteeringInequality make_w2() {
  const auto I = fx(Pauli::i), X = fx(Pauli::x), Y = fx(Pauli::y),
             Z = fx(Pauli::z);
  return SteeringInequality(
      InequalityName::w2, "W2", Scenario::two_to_one, 1.0,
      {
          term(0.2517, st(3), I, I), term(0.2517, I, st(3), I),
          term(0.3520, I, I, Z),
          term(-0.1112, st(1), I, X), term(-0.1112, st(2), I, Y),
          term(-0.1112, I, st(1), X), term(-0.1112, I, st(2), Y),
          term(0.1296, st(3), I, Z), term(0.1296, I, st(3), Z),
          term(-0.1943, st(1), st(1), I), term(-0.1943, st(2), st(2), I),
          term(0.2277, st(3), st(3), I),
          term(-0.1590, st(1), st(1), Z), term(-0.1590, st(2), st(2), Z),
          term(0.2228, st(3), st(3), Z),
          term(-0.2298, st(1), st(3), X), term(-0.2298, st(2), st(3), Y),
          term(-0.2298, st(3), st(1), X), term(-0.2298, st(3), st(2), Y),
      });
}

Pauli resolve(const ObservableSlot& slot, const MeasurementAssignment& m,
              bool alice) {
  if (!slot.is_setting) return slot.pauli;
  return alice ? m.alice(slot.index) : m.bob(slot.index);
}

}  // namespace

const ComplexMatrix& pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::i: return identity2();
    case Pauli::x: return pauli_x();
    case Pauli::y: return pauli_y();
    case Pauli::z: return pauli_z();
  }
  throw std::logic_error("pauli_matrix: bad Pauli");
}

char pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::i: return 'I';
    case Pauli::x: return 'X';
    case Pauli::y: return 'Y';
    case Pauli::z: return 'Z';
  }
  return '?';
}

double expectation(const DensityMatrix& rho, const PauliString& s) {
  // The 64 possible string operators are built once and reused.
  static const std::array<ComplexMatrix, 64> table = [] {
    std::array<ComplexMatrix, 64> t;
    const Pauli paulis[4] = {Pauli::i, Pauli::x, Pauli::y, Pauli::z};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          t[a * 16 + b * 4 + c] =
              tensor(pauli_matrix(paulis[a]),
                     tensor(pauli_matrix(paulis[b]), pauli_matrix(paulis[c])));
    return t;
  }();

  const int idx = static_cast<int>(s.ops[0]) * 16 +
                  static_cast<int>(s.ops[1]) * 4 + static_cast<int>(s.ops[2]);
  const ComplexMatrix& op = table[idx];

  Complex value = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) value += rho(i, j) * op(j, i);
  if (std::abs(value.imag()) > 1e-10) {
    throw std::logic_error("expectation: residual imaginary part " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

MeasurementAssignment::MeasurementAssignment()
    : alice_{Pauli::x, Pauli::y, Pauli::z}, bob_{Pauli::x, Pauli::y, Pauli::z} {}

MeasurementAssignment::MeasurementAssignment(std::array<Pauli, 3> alice,
                                             std::array<Pauli, 3> bob)
    : alice_(alice), bob_(bob) {}

std::string ObservableSlot::label(char party) const {
  if (is_setting) return std::string(1, party) + std::to_string(index);
  return std::string(1, pauli_letter(pauli));
}

SteeringInequality::SteeringInequality(InequalityName name, std::string label,
                                       Scenario scenario, double constant,
                                       std::vector<InequalityTerm> terms)
    : name_(name),
      label_(std::move(label)),
      scenario_(scenario),
      constant_(constant),
      terms_(std::move(terms)) {}

const SteeringInequality& SteeringInequality::get(InequalityName name) {
  static const SteeringInequality g1 = make_g1();
  static const SteeringInequality g2 = make_g2();
  static const SteeringInequality w1 = make_w1();
  static const SteeringInequality w2 = make_w2();
  switch (name) {
    case InequalityName::g1: return g1;
    case InequalityName::g2: return g2;
    case InequalityName::w1: return w1;
    case InequalityName::w2: return w2;
  }
  throw std::logic_error("SteeringInequality::get: bad name");
}

std::vector<std::pair<double, PauliString>> SteeringInequality::resolved_terms(
    const MeasurementAssignment& m) const {
  std::vector<std::pair<double, PauliString>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.c.is_setting) {
      throw std::logic_error("resolved_terms: Charlie's slot is always concrete");
    }
    out.push_back({t.coefficient, PauliString{{resolve(t.a, m, true),
                                               resolve(t.b, m, false),
                                               t.c.pauli}}});
  }
  return out;
}

double evaluate(const SteeringInequality& ineq, const DensityMatrix& rho,
                const MeasurementAssignment& m) {
  double value = ineq.constant();
  for (const auto& [coef, str] : ineq.resolved_terms(m)) {
    value += coef * expectation(rho, str);
  }
  return value;
}

nlohmann::json to_json(const SteeringInequality& ineq) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : ineq.terms()) {
    terms.push_back({{"coefficient", t.coefficient},
                     {"observables", {t.a.label('A'), t.b.label('B'),
                                      t.c.label('C')}}});
  }
  return {{"name", to_string(ineq.name())},
          {"scenario", to_string(ineq.scenario())},
          {"constant", ineq.constant()},
          {"terms", terms},
          {"default_assignment",
           {{"A1", "X"}, {"A2", "Y"}, {"A3", "Z"},
            {"B1", "X"}, {"B2", "Y"}, {"B3", "Z"}}}};
}

BoundaryResult violation_boundary(
    const SteeringInequality& ineq,
    const std::function<DensityMatrix(double)>& state_at, double lo, double hi,
    double tol, int prescan_points, const MeasurementAssignment& m) {
  if (!(lo < hi) || prescan_points < 1) {
    throw std::domain_error("violation_boundary: bad interval or prescan");
  }
  const auto value_at = [&](double x) { return evaluate(ineq, state_at(x), m); };

  double prev_x = lo;
  double prev_v = value_at(lo);
  std::optional<std::pair<double, double>> change;  // bracketing interval
  int changes = 0;
  for (int i = 1; i <= prescan_points; ++i) {
    const double x = lo + (hi - lo) * i / prescan_points;
    const double v = value_at(x);
    if ((v < 0.0) != (prev_v < 0.0)) {
      ++changes;
      if (!change) change = {prev_x, x};
    }
    prev_x = x;
    prev_v = v;
  }
  if (changes > 1) {
    throw std::domain_error(
        "violation_boundary: multiple sign changes on the interval");
  }
  if (!change) return BoundaryResult{};

  const bool lo_negative = value_at(change->first) < 0.0;
  const Bracket b =
      bisect(value_at, change->first, change->second, lo_negative, tol);
  return BoundaryResult{b.mid(), b.width()};
}

InequalityName inequality_from_string(const std::string& s) {
  if (s == "g1") return InequalityName::g1;
  if (s == "g2") return InequalityName::g2;
  if (s == "w1") return InequalityName::w1;
  if (s == "w2") return InequalityName::w2;
  throw std::domain_error("unknown inequality: " + s);
}

const char* to_string(InequalityName name) {
  switch (name) {
    case InequalityName::g1: return "g1";
    case InequalityName::g2: return "g2";
    case InequalityName::w1: return "w1";
    case InequalityName::w2: return "w2";
  }
  return "?";
}

const char* to_string(Scenario s) {
  return s == Scenario::one_to_two ? "1->2" : "2->1";
}

}  // namespace steersim
