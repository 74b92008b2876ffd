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

#ifndef SEQMEAS_QCORE_HPP
#define SEQMEAS_QCORE_HPP

#include <array>
#include <complex>
#include <stdexcept>

namespace seqmeas {

using complexd = std::complex<double>;

/// Thrown when an operator that must be Hermitian is not, within tolerance.
struct NonHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a state vector is not normalized within tolerance.
struct NotNormalizedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an operation restricted to real states receives complex input.
struct ComplexStateError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by schmidt_decompose when the input cannot be written with two
/// proper rotations (the 2x2 coefficient matrix has negative determinant,
/// which would require a reflection). No protocol state ever hits this.
struct SchmidtError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class PauliAxis { x, y, z };

/// Single-qubit state: amplitudes on |0>, |1>.
struct Ket2 {
  std::array<complexd, 2> amp{};

  double norm_sq() const;
  Ket2 normalized() const;
};

/// Two-qubit joint state: amplitudes ordered |00>, |01>, |10>, |11>
/// (Alice's qubit first).
struct Ket4 {
  std::array<complexd, 4> amp{};

  double norm_sq() const;
  Ket4 normalized() const;
};

/// 2x2 complex matrix, row major.
struct Op2 {
  std::array<complexd, 4> m{};

  complexd& operator()(int r, int c) { return m[2 * r + c]; }
  const complexd& operator()(int r, int c) const { return m[2 * r + c]; }

  static Op2 identity();
  Op2 adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;
};

/// 4x4 complex matrix, row major, same basis ordering as Ket4.
struct Op4 {
  std::array<complexd, 16> m{};

  complexd& operator()(int r, int c) { return m[4 * r + c]; }
  const complexd& operator()(int r, int c) const { return m[4 * r + c]; }

  static Op4 identity();
  Op4 adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;
};

Op2 operator+(const Op2& a, const Op2& b);
Op2 operator-(const Op2& a, const Op2& b);
Op2 operator*(const Op2& a, const Op2& b);
Op2 operator*(complexd scale, const Op2& a);
Ket2 operator*(const Op2& a, const Ket2& v);

Op4 operator+(const Op4& a, const Op4& b);
Op4 operator-(const Op4& a, const Op4& b);
Op4 operator*(const Op4& a, const Op4& b);
Op4 operator*(complexd scale, const Op4& a);
Ket4 operator*(const Op4& a, const Ket4& v);

complexd inner(const Ket2& a, const Ket2& b);
complexd inner(const Ket4& a, const Ket4& b);

Op2 pauli(PauliAxis axis);

/// exp(-i * angle * sigma_Y) = [[cos a, -sin a], [sin a, cos a]].
Op2 rotation_y(double angle);

/// |v><v| for a (not necessarily normalized) single-qubit vector.
Op2 projector(const Ket2& v);

Ket2 ket_zero();
Ket2 ket_one();
Ket2 ket_plus();
Ket2 ket_minus();

/// (|00> + |11>) / sqrt(2).
Ket4 bell_phi_plus();

/// cos(eta)|00> + sin(eta)|11>.
Ket4 canonical_state(double eta);

Op4 tensor(const Op2& a, const Op2& b);
Ket4 tensor(const Ket2& a, const Ket2& b);

/// <psi|M|psi> for Hermitian M. Throws NonHermitianError if M deviates from
/// M^dagger by more than 1e-12; the (tiny) imaginary residue of the quadratic
/// form is checked and discarded.
double expectation(const Op4& obs, const Ket4& state);

/// Reduce an angle mod pi into (-pi/2, pi/2]. A y-rotation by pi is a global
/// sign, so angles feeding rotation_y are physically periodic in pi.
double wrap_half_pi(double angle);

/// Result of decomposing a real two-qubit pure state as
///   R_y(alpha) (x) R_y(beta) [cos(eta)|00> + sin(eta)|11>]
/// up to a global sign, with eta in [0, pi/4] (singular values ordered
/// decreasing) and alpha, beta in (-pi/2, pi/2].
struct SchmidtResult {
  double eta;
  double alpha;
  double beta;
};

/// Closed-form Schmidt decomposition of a real two-qubit state via the 2x2
/// rotation-angle form of the SVD. When the two singular values coincide
/// (eta = pi/4) only alpha - beta is physical; the residual relative
/// rotation is returned in alpha with beta = 0, so the reconstruction
/// invariant still holds (and the plain Bell state maps to alpha = beta = 0).
SchmidtResult schmidt_decompose(const Ket4& state);

/// Inverse of schmidt_decompose up to global sign.
Ket4 schmidt_reconstruct(const SchmidtResult& r);

}  // namespace seqmeas

#endif  // SEQMEAS_QCORE_HPP
