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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "steersim/complex_matrix.hpp"
#include "steersim/states.hpp"

namespace steersim {

enum class Pauli { i, x, y, z };

const ComplexMatrix& pauli_matrix(Pauli p);
char pauli_letter(Pauli p);

/// One observable per party (Alice, Bob, Charlie), Alice leftmost.
struct PauliString {
  std::array<Pauli, 3> ops;
};

/// tr(rho * s_A x s_B x s_C). The result of a Hermitian observable on a
/// Hermitian state: any residual imaginary part above 1e-10 throws.
double expectation(const DensityMatrix& rho, const PauliString& s);

/// Who steers whom: 1->2 has Alice steering trusted Bob-Charlie, 2->1 has
/// Alice-Bob steering trusted Charlie.
enum class Scenario { one_to_two, two_to_one };

/// Pauli axes assigned to the untrusted parties' measurement settings
/// A1..A3 (and B1..B3 in the 2->1 scenario). The default X/Y/Z assignment is
/// the optimal choice and the one every reference number assumes; the
/// inequalities are never re-optimized after damping.
class MeasurementAssignment {
 public:
  MeasurementAssignment();  // A1=X, A2=Y, A3=Z; same for B
  MeasurementAssignment(std::array<Pauli, 3> alice, std::array<Pauli, 3> bob);
  Pauli alice(int setting) const { return alice_[setting - 1]; }
  Pauli bob(int setting) const { return bob_[setting - 1]; }

 private:
  std::array<Pauli, 3> alice_;
  std::array<Pauli, 3> bob_;
};

/// A party slot in an inequality term: either a fixed Pauli (trusted party,
/// or identity) or an untrusted measurement setting 1..3 to be resolved
/// through a MeasurementAssignment.
struct ObservableSlot {
  static ObservableSlot fixed(Pauli p) { return {false, p, 0}; }
  static ObservableSlot setting(int index) { return {true, Pauli::i, index}; }

  bool is_setting;
  Pauli pauli;  // when !is_setting
  int index;    // 1..3 when is_setting

  std::string label(char party) const;
};

struct InequalityTerm {
  double coefficient;
  ObservableSlot a, b, c;
};

enum class InequalityName { g1, g2, w1, w2 };

/// A genuine-steering witness: constant + sum of coefficient * correlator,
/// nonnegative on every biseparable state. A negative value certifies
/// genuine steering in the inequality's scenario. Coefficients are stored
/// verbatim as published (they are truncated numerical-optimization outputs;
/// no closed forms are substituted).
class SteeringInequality {
 public:
  static const SteeringInequality& get(InequalityName name);

  InequalityName name() const { return name_; }
  const std::string& label() const { return label_; }
  Scenario scenario() const { return scenario_; }
  double constant() const { return constant_; }
  const std::vector<InequalityTerm>& terms() const { return terms_; }

  /// Terms with the untrusted settings resolved to concrete Pauli strings.
  std::vector<std::pair<double, PauliString>> resolved_terms(
      const MeasurementAssignment& m = MeasurementAssignment()) const;

  SteeringInequality(InequalityName name, std::string label, Scenario scenario,
                     double constant, std::vector<InequalityTerm> terms);

 private:
  InequalityName name_;
  std::string label_;
  Scenario scenario_;
  double constant_;
  std::vector<InequalityTerm> terms_;
};

double evaluate(const SteeringInequality& ineq, const DensityMatrix& rho,
                const MeasurementAssignment& m = MeasurementAssignment());

/// Audit serialization: {name, scenario, constant, terms[{coefficient,
/// observables[3]}], default_assignment}.
nlohmann::json to_json(const SteeringInequality& ineq);

struct BoundaryResult {
  std::optional<double> boundary;  // empty: no sign change on [lo, hi]
  double bracket = 0.0;            // achieved bracket width when found
};

/// Locates the parameter value where evaluate(ineq, state_at(x)) crosses zero
/// on [lo, hi], to within tol, after sampling prescan_points + 1 uniform
/// points to bracket the change. Throws std::domain_error if the sampling
/// finds more than one sign change (the scan is not monotone-crossing).
BoundaryResult violation_boundary(
    const SteeringInequality& ineq,
    const std::function<DensityMatrix(double)>& state_at, double lo, double hi,
    double tol = 1e-4, int prescan_points = 200,
    const MeasurementAssignment& m = MeasurementAssignment());

InequalityName inequality_from_string(const std::string& s);
const char* to_string(InequalityName name);
const char* to_string(Scenario s);

}  // namespace steersim
