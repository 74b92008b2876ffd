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

namespace seqmeas {

namespace {

double max_imag_abs(const Ket4& v) {
  double worst = 0.0;
  for (const complexd& a : v.amp) worst = std::max(worst, std::abs(a.imag()));
  return worst;
}

}  // namespace

double Ket2::norm_sq() const {
  return std::norm(amp[0]) + std::norm(amp[1]);
}

Ket2 Ket2::normalized() const {
  const double inv = 1.0 / std::sqrt(norm_sq());
  return {{amp[0] * inv, amp[1] * inv}};
}

double Ket4::norm_sq() const {
  double s = 0.0;
  for (const complexd& a : amp) s += std::norm(a);
  return s;
}

Ket4 Ket4::normalized() const {
  const double inv = 1.0 / std::sqrt(norm_sq());
  Ket4 out;
  for (int i = 0; i < 4; ++i) out.amp[i] = amp[i] * inv;
  return out;
}

Op2 Op2::identity() {
  Op2 out;
  out(0, 0) = 1.0;
  out(1, 1) = 1.0;
  return out;
}

Op2 Op2::adjoint() const {
  Op2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

bool Op2::is_hermitian(double tol) const {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

bool Op2::is_unitary(double tol) const {
  const Op2 prod = adjoint() * (*this);
  const Op2 id = identity();
  for (int i = 0; i < 4; ++i)
    if (std::abs(prod.m[i] - id.m[i]) > tol) return false;
  return true;
}

Op4 Op4::identity() {
  Op4 out;
  for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
  return out;
}

Op4 Op4::adjoint() const {
  Op4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
  return out;
}

bool Op4::is_hermitian(double tol) const {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

Op2 operator+(const Op2& a, const Op2& b) {
  Op2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

Op2 operator-(const Op2& a, const Op2& b) {
  Op2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

Op2 operator*(const Op2& a, const Op2& b) {
  Op2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

Op2 operator*(complexd scale, const Op2& a) {
  Op2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = scale * a.m[i];
  return out;
}

Ket2 operator*(const Op2& a, const Ket2& v) {
  Ket2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.amp[r] += a(r, c) * v.amp[c];
  return out;
}

Op4 operator+(const Op4& a, const Op4& b) {
  Op4 out;
  for (int i = 0; i < 16; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}

Op4 operator-(const Op4& a, const Op4& b) {
  Op4 out;
  for (int i = 0; i < 16; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}

Op4 operator*(const Op4& a, const Op4& b) {
  Op4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < 4; ++k) out(r, c) += a(r, k) * b(k, c);
  return out;
}

Op4 operator*(complexd scale, const Op4& a) {
  Op4 out;
  for (int i = 0; i < 16; ++i) out.m[i] = scale * a.m[i];
  return out;
}

Ket4 operator*(const Op4& a, const Ket4& v) {
  Ket4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.amp[r] += a(r, c) * v.amp[c];
  return out;
}

complexd inner(const Ket2& a, const Ket2& b) {
  return std::conj(a.amp[0]) * b.amp[0] + std::conj(a.amp[1]) * b.amp[1];
}

complexd inner(const Ket4& a, const Ket4& b) {
  complexd s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
  return s;
}

Op2 pauli(PauliAxis axis) {
  Op2 out;
  switch (axis) {
    case PauliAxis::x:
      out(0, 1) = 1.0;
      out(1, 0) = 1.0;
      break;
    case PauliAxis::y:
      out(0, 1) = complexd(0.0, -1.0);
      out(1, 0) = complexd(0.0, 1.0);
      break;
    case PauliAxis::z:
      out(0, 0) = 1.0;
      out(1, 1) = -1.0;
      break;
  }
  return out;
}

Op2 rotation_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Op2 out;
  out(0, 0) = c;
  out(0, 1) = -s;
  out(1, 0) = s;
  out(1, 1) = c;
  return out;
}

Op2 projector(const Ket2& v) {
  Op2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out(r, c) = v.amp[r] * std::conj(v.amp[c]);
  return out;
}

Ket2 ket_zero() { return {{1.0, 0.0}}; }
Ket2 ket_one() { return {{0.0, 1.0}}; }

Ket2 ket_plus() {
  const double inv = 1.0 / std::sqrt(2.0);
  return {{inv, inv}};
}

Ket2 ket_minus() {
  const double inv = 1.0 / std::sqrt(2.0);
  return {{inv, -inv}};
}

Ket4 bell_phi_plus() {
  const double inv = 1.0 / std::sqrt(2.0);
  Ket4 out;
  out.amp[0] = inv;
  out.amp[3] = inv;
  return out;
}

Ket4 canonical_state(double eta) {
  Ket4 out;
  out.amp[0] = std::cos(eta);
  out.amp[3] = std::sin(eta);
  return out;
}

Op4 tensor(const Op2& a, const Op2& b) {
  Op4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Ket4 tensor(const Ket2& a, const Ket2& b) {
  Ket4 out;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) out.amp[2 * i + k] = a.amp[i] * b.amp[k];
  return out;
}

double expectation(const Op4& obs, const Ket4& state) {
  if (!obs.is_hermitian(1e-12))
    throw NonHermitianError("expectation: operator is not Hermitian within 1e-12");
  const complexd value = inner(state, obs * state);
  if (std::abs(value.imag()) > 1e-9)
    throw NonHermitianError("expectation: quadratic form has a non-real value");
  return value.real();
}

double wrap_half_pi(double angle) {
  double a = std::remainder(angle, M_PI);
  if (a <= -M_PI / 2) a += M_PI;
  return a;
}

SchmidtResult schmidt_decompose(const Ket4& state) {
  if (max_imag_abs(state) > 1e-12)
    throw ComplexStateError("schmidt_decompose: state has complex amplitudes");
  if (std::abs(state.norm_sq() - 1.0) > 1e-9)
    throw NotNormalizedError("schmidt_decompose: state is not normalized");

  // Coefficient matrix M with Alice's index as row, Bob's as column.
  const double a = state.amp[0].real();  // <00|psi>
  const double b = state.amp[1].real();  // <01|psi>
  const double c = state.amp[2].real();  // <10|psi>
  const double d = state.amp[3].real();  // <11|psi>

  // M = p R(delta) + q S(sigma) where R is a rotation, S a reflection,
  // p,q >= 0. Then s0 = p + q, s1 = p - q, alpha = (delta + sigma) / 2,
  // beta = (sigma - delta) / 2.
  const double e = 0.5 * (a + d);
  const double f = 0.5 * (a - d);
  const double g = 0.5 * (c + b);
  const double h = 0.5 * (c - b);
  const double p = std::hypot(e, h);
  const double q = std::hypot(f, g);

  if (p - q < -1e-9)
    throw SchmidtError("schmidt_decompose: state requires a reflection, not a rotation pair");

  if (q < 1e-12) {
    // Degenerate spectrum (eta = pi/4): only the relative rotation between
    // the two sides is physical.
    const double delta = std::atan2(h, e);
    return {std::atan2(std::max(p - q, 0.0), p + q), wrap_half_pi(delta), 0.0};
  }

  const double delta = std::atan2(h, e);
  const double sigma = std::atan2(g, f);
  const double eta = std::atan2(std::max(p - q, 0.0), p + q);
  return {eta, wrap_half_pi(0.5 * (delta + sigma)), wrap_half_pi(0.5 * (sigma - delta))};
}

Ket4 schmidt_reconstruct(const SchmidtResult& r) {
  return tensor(rotation_y(r.alpha), rotation_y(r.beta)) * canonical_state(r.eta);
}

}  // namespace seqmeas
