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

#include "seqmeas/instrument.hpp"

#include <cmath>
#include <string>

namespace seqmeas {

namespace {

constexpr double kMaxSharpness = M_PI / 4;

void validate(const MeasurementSetting& setting) {
  if (!(setting.sharpness >= 0.0 && setting.sharpness <= kMaxSharpness))
    throw InvalidSharpnessError("sharpness " + std::to_string(setting.sharpness) +
                                " outside [0, pi/4]");
}

Ket2 plus_eigenvector(Basis basis) {
  return basis == Basis::z ? ket_zero() : ket_plus();
}

Ket2 minus_eigenvector(Basis basis) {
  return basis == Basis::z ? ket_one() : ket_minus();
}

}  // namespace

Op2 kraus(const MeasurementSetting& setting, Outcome outcome) {
  validate(setting);
  const double c = std::cos(setting.sharpness);
  const double s = std::sin(setting.sharpness);
  const double weight_plus = outcome == Outcome::plus ? c : s;
  const double weight_minus = outcome == Outcome::plus ? s : c;
  return weight_plus * projector(plus_eigenvector(setting.basis)) +
         weight_minus * projector(minus_eigenvector(setting.basis));
}

KrausPair kraus_pair(const MeasurementSetting& setting) {
  return {kraus(setting, Outcome::plus), kraus(setting, Outcome::minus)};
}

Op2 effect(const MeasurementSetting& setting, Outcome outcome) {
  const Op2 k = kraus(setting, outcome);
  return k.adjoint() * k;
}

Op2 observable(const MeasurementSetting& setting) {
  return effect(setting, Outcome::plus) - effect(setting, Outcome::minus);
}

double outcome_probability(const Ket4& state, const MeasurementSetting& setting,
                           Outcome outcome) {
  return expectation(tensor(effect(setting, outcome), Op2::identity()), state);
}

Ket4 apply_measurement(const Ket4& state, const MeasurementSetting& setting,
                       Outcome outcome) {
  const double probability = outcome_probability(state, setting, outcome);
  if (probability < 1e-12)
    throw ImpossibleOutcomeError("apply_measurement: outcome has probability " +
                                 std::to_string(probability));
  const Ket4 branch = tensor(kraus(setting, outcome), Op2::identity()) * state;
  return branch.normalized();
}

}  // namespace seqmeas
