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

#include "seqmeas/qcore.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace seqmeas;
using namespace seqmeas::testing;

TEST_CASE("pauli matrices act as expected on basis states") {
  const Op2 sz = pauli(PauliAxis::z);
  const Op2 sx = pauli(PauliAxis::x);
  const Op2 sy = pauli(PauliAxis::y);

  // sigma_Z |0> = +|0>
  Ket2 v = sz * ket_zero();
  CHECK(std::abs(v.amp[0] - 1.0) < 1e-15);
  CHECK(std::abs(v.amp[1]) < 1e-15);

  // sigma_X |0> = |1>
  v = sx * ket_zero();
  CHECK(std::abs(v.amp[0]) < 1e-15);
  CHECK(std::abs(v.amp[1] - 1.0) < 1e-15);

  // sigma_Y^2 = 1
  CHECK(max_abs_diff(sy * sy, Op2::identity()) < 1e-15);

  for (const Op2& s : {sz, sx, sy}) {
    CHECK(s.is_hermitian());
    CHECK(s.is_unitary());
    CHECK(std::abs(s(0, 0) + s(1, 1)) < 1e-15);  // traceless
  }
}

TEST_CASE("rotation_y special values") {
  CHECK(max_abs_diff(rotation_y(0.0), Op2::identity()) < 1e-15);

  Ket2 v = rotation_y(M_PI / 2) * ket_zero();
  CHECK(std::abs(v.amp[0]) < 1e-15);
  CHECK(std::abs(v.amp[1] - 1.0) < 1e-15);

  v = rotation_y(M_PI / 4) * ket_zero();
  CHECK(std::abs(v.amp[0] - M_SQRT1_2) < 1e-15);
  CHECK(std::abs(v.amp[1] - M_SQRT1_2) < 1e-15);
}

TEST_CASE("rotation_y composes additively") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(-6.0, 6.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = angle(rng);
    const double b = angle(rng);
    CHECK(max_abs_diff(rotation_y(a) * rotation_y(b), rotation_y(a + b)) < 1e-12);
  }
}

TEST_CASE("tensor products respect the |00>,|01>,|10>,|11> ordering") {
  CHECK(max_abs_diff(tensor(Op2::identity(), Op2::identity()), Op4::identity()) < 1e-15);

  const Ket4 v = tensor(ket_zero(), ket_one());
  CHECK(std::abs(v.amp[1] - 1.0) < 1e-15);
  CHECK(std::abs(v.amp[0]) + std::abs(v.amp[2]) + std::abs(v.amp[3]) < 1e-15);

  const Op4 zz = tensor(pauli(PauliAxis::z), pauli(PauliAxis::z));
  const double diag[4] = {1.0, -1.0, -1.0, 1.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(zz(i, i) - diag[i]) < 1e-15);
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(zz(i, j)) < 1e-15);
  }
}

TEST_CASE("expectation values on entangled states") {
  const Ket4 bell = bell_phi_plus();
  const Op2 sz = pauli(PauliAxis::z);
  const Op2 sx = pauli(PauliAxis::x);

  CHECK(expectation(tensor(sz, sz), bell) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(expectation(tensor(sx, sx), bell) == doctest::Approx(1.0).epsilon(1e-12));

  // <XX> on cos(eta)|00> + sin(eta)|11> is sin(2 eta).
  const Ket4 partial = canonical_state(0.34);
  CHECK(std::abs(expectation(tensor(sx, sx), partial) - std::sin(0.68)) < 1e-12);
}

TEST_CASE("expectation rejects non-Hermitian operators") {
  Op4 bad = Op4::identity();
  bad(0, 1) = complexd(0.0, 1.0);  // no conjugate partner
  CHECK_THROWS_AS(expectation(bad, bell_phi_plus()), NonHermitianError);
}

TEST_CASE("expectation stays within the operator spectrum") {
  std::mt19937 rng(11);
  const Op4 zz = tensor(pauli(PauliAxis::z), pauli(PauliAxis::z));
  const Op4 xx = tensor(pauli(PauliAxis::x), pauli(PauliAxis::x));
  for (int trial = 0; trial < 500; ++trial) {
    const Ket4 psi = random_real_state(rng);
    for (const Op4* op : {&zz, &xx}) {
      const double e = expectation(*op, psi);
      CHECK(e >= -1.0 - 1e-12);
      CHECK(e <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("schmidt_decompose on reference states") {
  SUBCASE("maximally entangled") {
    const SchmidtResult r = schmidt_decompose(bell_phi_plus());
    CHECK(r.eta == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(std::abs(r.alpha) < 1e-12);
    CHECK(std::abs(r.beta) < 1e-12);
  }

  SUBCASE("product state |01>") {
    const Ket4 v = tensor(ket_zero(), ket_one());
    const SchmidtResult r = schmidt_decompose(v);
    CHECK(std::abs(r.eta) < 1e-12);
    CHECK(std::abs(r.alpha) < 1e-12);
    CHECK(r.beta == doctest::Approx(M_PI / 2).epsilon(1e-12));
  }

  SUBCASE("unsharp minus branch of the Bell state") {
    // diag(sin mu, cos mu) (x) 1 applied to the Bell state, renormalized.
    const double mu = 0.34;
    Ket4 v;
    v.amp[0] = std::sin(mu);
    v.amp[3] = std::cos(mu);
    const SchmidtResult r = schmidt_decompose(v.normalized());
    CHECK(r.eta == doctest::Approx(0.34).epsilon(1e-12));
    CHECK(r.alpha == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(r.beta == doctest::Approx(M_PI / 2).epsilon(1e-12));
  }

  SUBCASE("degenerate spectrum keeps the relative rotation") {
    // (R_y(delta) (x) 1) on the Bell state is still maximally entangled but
    // not the plain Bell state; the decomposition must retain delta.
    const double delta = 0.4;
    const Ket4 v = tensor(rotation_y(delta), Op2::identity()) * bell_phi_plus();
    const SchmidtResult r = schmidt_decompose(v);
    CHECK(r.eta == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(mod_pi_distance(r.alpha - r.beta, delta) < 1e-12);
    CHECK(state_distance_up_to_sign(schmidt_reconstruct(r), v) < 1e-10);
  }
}

TEST_CASE("schmidt_decompose input validation") {
  Ket4 complex_state = bell_phi_plus();
  complex_state.amp[0] *= complexd(0.0, 1.0);
  CHECK_THROWS_AS(schmidt_decompose(complex_state), ComplexStateError);

  Ket4 unnormalized;
  unnormalized.amp[0] = 2.0;
  CHECK_THROWS_AS(schmidt_decompose(unnormalized), NotNormalizedError);

  // A state needing a reflection: (|01> + |10>)/sqrt(2) has a negative
  // determinant coefficient matrix.
  Ket4 singletish;
  singletish.amp[1] = M_SQRT1_2;
  singletish.amp[2] = M_SQRT1_2;
  CHECK_THROWS_AS(schmidt_decompose(singletish), SchmidtError);
}

TEST_CASE("schmidt round trip over the angle box") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> eta_dist(0.01, M_PI / 4 - 0.01);
  std::uniform_real_distribution<double> rot_dist(-M_PI / 2 + 1e-9, M_PI / 2);
  for (int trial = 0; trial < 2000; ++trial) {
    const SchmidtResult in{eta_dist(rng), rot_dist(rng), rot_dist(rng)};
    const Ket4 state = schmidt_reconstruct(in);
    const SchmidtResult out = schmidt_decompose(state);
    CHECK(std::abs(out.eta - in.eta) < 1e-9);
    CHECK(mod_pi_distance(out.alpha, in.alpha) < 1e-9);
    CHECK(mod_pi_distance(out.beta, in.beta) < 1e-9);
    CHECK(state_distance_up_to_sign(schmidt_reconstruct(out), state) < 1e-10);
  }
}

TEST_CASE("concurrence of reconstructed states matches sin(2 eta)") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> eta_dist(0.0, M_PI / 4);
  std::uniform_real_distribution<double> rot_dist(-M_PI / 2 + 1e-9, M_PI / 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const double eta = eta_dist(rng);
    const Ket4 v = schmidt_reconstruct({eta, rot_dist(rng), rot_dist(rng)});
    const double concurrence =
        2.0 * std::abs(v.amp[0] * v.amp[3] - v.amp[1] * v.amp[2]);
    CHECK(std::abs(concurrence - std::sin(2.0 * eta)) < 1e-10);
  }
}

TEST_CASE("normalization helpers") {
  Ket4 v;
  v.amp[0] = 3.0;
  v.amp[3] = 4.0;
  CHECK(std::abs(v.normalized().norm_sq() - 1.0) < 1e-12);

  Ket2 w{{complexd(1.0, 1.0), complexd(0.0, 2.0)}};
  CHECK(std::abs(w.normalized().norm_sq() - 1.0) < 1e-12);
}

TEST_CASE("wrap_half_pi lands in (-pi/2, pi/2]") {
  CHECK(wrap_half_pi(M_PI) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(wrap_half_pi(M_PI / 2) == doctest::Approx(M_PI / 2));
  CHECK(wrap_half_pi(-M_PI / 2) == doctest::Approx(M_PI / 2));
  CHECK(wrap_half_pi(0.75 * M_PI) == doctest::Approx(-0.25 * M_PI));
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = dist(rng);
    const double w = wrap_half_pi(x);
    CHECK(w > -M_PI / 2);
    CHECK(w <= M_PI / 2);
    CHECK(mod_pi_distance(w, x) < 1e-12);
  }
}
