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

#include "seqmeas/montecarlo.hpp"

#include <cmath>
#include <random>
#include <string>

namespace seqmeas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t v) {
  return splitmix64(seed ^ (v + 0x9e3779b97f4a7c15ULL));
}

std::int64_t poisson_draw(double mean, std::uint64_t stream_seed) {
  if (mean <= 0.0) return 0;
  std::mt19937_64 gen(stream_seed);
  std::poisson_distribution<std::int64_t> dist(mean);
  return dist(gen);
}

// Pauli-resolved pieces of the joint distribution. For dichotomic
// observables A (x) B with A = a0 + ax sx + az sz (and likewise B),
// P(a, b) = (1 + a mA + b mB + a b corr) / 4.
struct Correlator {
  double alice_marginal = 0.0;
  double bob_marginal = 0.0;
  double correlation = 0.0;

  double probability(Outcome a, Outcome b) const {
    const double p = 0.25 * (1.0 + value(a) * alice_marginal + value(b) * bob_marginal +
                             value(a) * value(b) * correlation);
    return std::max(p, 0.0);
  }
};

struct PauliMoments {
  double zi, xi, iz, ix, zz, zx, xz, xx;
};

PauliMoments moments(double eta) {
  const Ket4 psi = canonical_state(eta);
  const Op2 id = Op2::identity();
  const Op2 sz = pauli(PauliAxis::z);
  const Op2 sx = pauli(PauliAxis::x);
  return {expectation(tensor(sz, id), psi), expectation(tensor(sx, id), psi),
          expectation(tensor(id, sz), psi), expectation(tensor(id, sx), psi),
          expectation(tensor(sz, sz), psi), expectation(tensor(sz, sx), psi),
          expectation(tensor(sx, sz), psi), expectation(tensor(sx, sx), psi)};
}

double vis(const ExperimentPlan& plan, bool alice_z, bool bob_z) {
  // Only the ZZ contrast has its own knob; every coherence-type term damps
  // with the XX visibility.
  return (alice_z && bob_z) ? plan.visibility_z : plan.visibility_x;
}

Correlator chsh_correlator(const StepParams& step, int alice_setting, int bob_setting,
                           const ExperimentPlan& plan) {
  const PauliMoments mom = moments(step.eta);
  const double contrast = std::cos(2.0 * step.mu);
  const double bx = (bob_setting == 0 ? 1.0 : -1.0) * std::cos(step.theta);
  const double bz = std::sin(step.theta);
  const bool alice_z = alice_setting == 0;

  Correlator out;
  out.alice_marginal = contrast * (alice_z ? mom.zi : mom.xi);
  out.bob_marginal = bx * mom.ix + bz * mom.iz;
  const double corr_x = alice_z ? mom.zx : mom.xx;
  const double corr_z = alice_z ? mom.zz : mom.xz;
  out.correlation = contrast * (bx * vis(plan, alice_z, false) * corr_x +
                                bz * vis(plan, alice_z, true) * corr_z);
  return out;
}

Correlator witness_correlator(const StepParams& step, Basis basis,
                              const ExperimentPlan& plan) {
  const PauliMoments mom = moments(step.eta);
  const bool z = basis == Basis::z;
  Correlator out;
  out.alice_marginal = z ? mom.zi : mom.xi;
  out.bob_marginal = z ? mom.iz : mom.ix;
  out.correlation = (z ? plan.visibility_z * mom.zz : plan.visibility_x * mom.xx);
  return out;
}

enum class TableKind : std::uint64_t { chsh = 0x43485348, witness = 0x574e4553 };

void fill_cell(CountTable& table, TableKind kind, int i, int j, const Correlator& corr,
               double mean_pairs, const ExperimentPlan& plan) {
  for (Outcome a : {Outcome::plus, Outcome::minus}) {
    for (Outcome b : {Outcome::plus, Outcome::minus}) {
      const std::uint64_t idx = static_cast<std::uint64_t>(
          (((i * 2 + j) * 2 + (a == Outcome::plus ? 0 : 1)) * 2) +
          (b == Outcome::plus ? 0 : 1));
      const std::uint64_t stream =
          mix(mix(plan.seed, static_cast<std::uint64_t>(kind)), idx);
      table.at(i, j, a, b) = poisson_draw(mean_pairs * corr.probability(a, b), stream);
    }
  }
}

}  // namespace

void ExperimentPlan::validate() const {
  if (!(pairs_per_config >= 0.0))
    throw std::invalid_argument("pairs_per_config must be nonnegative");
  if (!(visibility_z >= 0.0 && visibility_z <= 1.0) ||
      !(visibility_x >= 0.0 && visibility_x <= 1.0))
    throw std::invalid_argument("visibilities must lie in [0, 1]");
}

std::int64_t CountTable::cell_total(int i, int j) const {
  std::int64_t n = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) n += counts[i][j][a][b];
  return n;
}

std::int64_t CountTable::total() const {
  std::int64_t n = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) n += cell_total(i, j);
  return n;
}

double joint_probability(const StepParams& step, int alice_setting, int bob_setting,
                         Outcome a, Outcome b, const ExperimentPlan& plan) {
  if (alice_setting < 0 || alice_setting > 1 || bob_setting < 0 || bob_setting > 1)
    throw std::out_of_range("joint_probability: settings must be 0 or 1");
  plan.validate();
  return chsh_correlator(step, alice_setting, bob_setting, plan).probability(a, b);
}

double witness_joint_probability(const StepParams& step, Basis basis, Outcome a,
                                 Outcome b, const ExperimentPlan& plan) {
  plan.validate();
  return witness_correlator(step, basis, plan).probability(a, b);
}

CountTable simulate_counts(const StepParams& step, const ExperimentPlan& plan) {
  plan.validate();
  CountTable table;
  const double mean_pairs = plan.pairs_per_config / 4.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      fill_cell(table, TableKind::chsh, i, j, chsh_correlator(step, i, j, plan),
                mean_pairs, plan);
  return table;
}

CountTable simulate_witness_counts(const StepParams& step, const ExperimentPlan& plan) {
  plan.validate();
  CountTable table;
  const double mean_pairs = plan.pairs_per_config / 2.0;
  fill_cell(table, TableKind::witness, 0, 0, witness_correlator(step, Basis::z, plan),
            mean_pairs, plan);
  fill_cell(table, TableKind::witness, 1, 1, witness_correlator(step, Basis::x, plan),
            mean_pairs, plan);
  return table;
}

Estimate estimate_correlator(const CountTable& table, int i, int j) {
  const std::int64_t n_total = table.cell_total(i, j);
  if (n_total == 0)
    throw EmptyCellError("estimate_correlator: cell (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") has no counts");
  const double n = static_cast<double>(n_total);

  double signed_sum = 0.0;
  for (Outcome a : {Outcome::plus, Outcome::minus})
    for (Outcome b : {Outcome::plus, Outcome::minus})
      signed_sum += value(a) * value(b) * static_cast<double>(table.at(i, j, a, b));
  const double e = signed_sum / n;

  double variance = 0.0;
  bool zero_count = false;
  for (Outcome a : {Outcome::plus, Outcome::minus}) {
    for (Outcome b : {Outcome::plus, Outcome::minus}) {
      const double count = static_cast<double>(table.at(i, j, a, b));
      if (count == 0.0) zero_count = true;
      const double sensitivity = (value(a) * value(b) - e) / n;
      variance += sensitivity * sensitivity * count;
    }
  }
  return {e, std::sqrt(variance), zero_count};
}

Estimate estimate_chsh(const CountTable& table) {
  const Estimate e00 = estimate_correlator(table, 0, 0);
  const Estimate e01 = estimate_correlator(table, 0, 1);
  const Estimate e10 = estimate_correlator(table, 1, 0);
  const Estimate e11 = estimate_correlator(table, 1, 1);
  Estimate out;
  out.value = e00.value + e01.value + e10.value - e11.value;
  out.std_dev = std::sqrt(e00.std_dev * e00.std_dev + e01.std_dev * e01.std_dev +
                          e10.std_dev * e10.std_dev + e11.std_dev * e11.std_dev);
  out.zero_count_warning = e00.zero_count_warning || e01.zero_count_warning ||
                           e10.zero_count_warning || e11.zero_count_warning;
  return out;
}

Estimate estimate_witness(const CountTable& table) {
  const Estimate zz = estimate_correlator(table, 0, 0);
  const Estimate xx = estimate_correlator(table, 1, 1);
  Estimate out;
  out.value = 1.0 - zz.value - xx.value;
  out.std_dev = std::sqrt(zz.std_dev * zz.std_dev + xx.std_dev * xx.std_dev);
  out.zero_count_warning = zz.zero_count_warning || xx.zero_count_warning;
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, folded into the splitmix chain.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return mix(seed, h);
}

}  // namespace seqmeas
