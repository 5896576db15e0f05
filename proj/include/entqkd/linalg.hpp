// Copyright 2026 The entqkd Authors
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

// Fixed-size dense complex linear algebra for one- and two-qubit operators.
//
// Everything here works on std::array storage so a 4x4 operator is a plain
// value of 256 bytes. Dimension mismatches are compile-time errors: kron only
// accepts 2x2 factors and partial transposes only exist for 4x4 operators.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace entqkd {

using cplx = std::complex<double>;

inline constexpr double kDefaultLinalgTol = 1e-10;

template <std::size_t N>
using Vec = std::array<cplx, N>;

using Vec2 = Vec<2>;
using Vec4 = Vec<4>;

template <std::size_t N>
struct Matrix {
  static constexpr std::size_t dim = N;

  // Row-major.
  std::array<cplx, N * N> entries{};

  cplx& operator()(std::size_t r, std::size_t c) { return entries[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries[r * N + c];
  }

  static Matrix zero() { return Matrix{}; }

  static Matrix identity() {
    Matrix m{};
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m{};
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix outer(const Vec<N>& a, const Vec<N>& b) {
    Matrix m{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * std::conj(b[c]);
    return m;
  }

  static Matrix projector(const Vec<N>& v) { return outer(v, v); }

  Matrix adjoint() const {
    Matrix m{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  Matrix transpose() const {
    Matrix m{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = (*this)(c, r);
    return m;
  }

  Matrix conjugate() const {
    Matrix m{};
    for (std::size_t i = 0; i < N * N; ++i) m.entries[i] = std::conj(entries[i]);
    return m;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries) s += std::norm(e);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& e : entries) m = std::max(m, std::abs(e));
    return m;
  }

  bool is_finite() const {
    for (const auto& e : entries)
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
  }

  // Frobenius distance to the adjoint.
  double hermiticity_defect() const { return (*this - adjoint()).frobenius_norm(); }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries[i] += o.entries[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries[i] -= o.entries[i];
    return *this;
  }
  Matrix& operator*=(cplx s) {
    for (auto& e : entries) e *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, double s) { return a *= cplx(s); }
  friend Matrix operator*(double s, Matrix a) { return a *= cplx(s); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx ark = a(r, k);
        if (ark == cplx(0.0)) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend Vec<N> operator*(const Matrix& a, const Vec<N>& v) {
    Vec<N> out{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

// Pauli operators indexed 0 (identity), 1 (x), 2 (y), 3 (z).
enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

const Mat2& pauli(int index);
inline const Mat2& pauli(Pauli p) { return pauli(static_cast<int>(p)); }

// sigma_i (x) sigma_j, cached.
const Mat4& pauli_product(int i, int j);

// Tensor product; the first factor indexes the high-order qubit (Alice).
Mat4 kron(const Mat2& a, const Mat2& b);
Vec4 kron(const Vec2& a, const Vec2& b);

enum class Side { A, B };

// Transposition of one tensor factor. Involutive and exact (pure entry swap).
Mat4 partial_transpose(const Mat4& m, Side side);

Mat2 partial_trace_a(const Mat4& m);  // returns the state of B
Mat2 partial_trace_b(const Mat4& m);  // returns the state of A

// Hilbert-Schmidt inner product Tr(a^dagger b).
template <std::size_t N>
cplx hs_inner(const Matrix<N>& a, const Matrix<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) s += std::conj(a.entries[i]) * b.entries[i];
  return s;
}

template <std::size_t N>
cplx dot(const Vec<N>& a, const Vec<N>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vec<N>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t N>
struct EigenSystem {
  // Ascending.
  std::array<double, N> eigenvalues{};
  // eigenvectors[k] belongs to eigenvalues[k]; orthonormal.
  std::array<Vec<N>, N> eigenvectors{};
};

// Cyclic complex Jacobi eigensolver for Hermitian matrices.
//
// Input must satisfy |m - m^dagger|_F <= tol; otherwise a validation error is
// thrown. Eigenvectors are phase-normalised so that the first component of
// largest modulus is real and positive. Eigenvalues within
// 1e-12 * max(1, |m|) of each other are treated as tied and ordered by the
// lexicographic order of their normalised eigenvectors. Real symmetric input
// produces real eigenvectors. Throws a numeric error if the sweep budget is
// exhausted.
template <std::size_t N>
EigenSystem<N> hermitian_eig(const Matrix<N>& m, double tol = kDefaultLinalgTol);

extern template EigenSystem<2> hermitian_eig<2>(const Matrix<2>&, double);
extern template EigenSystem<4> hermitian_eig<4>(const Matrix<4>&, double);

struct SchmidtForm {
  // Descending, nonnegative.
  std::array<double, 2> coefficients{};
  std::array<Vec2, 2> basis_a{};
  std::array<Vec2, 2> basis_b{};

  Vec4 reconstruct() const;
};

// Schmidt decomposition of a two-qubit vector, psi = sum_i c_i |u_i>|v_i>.
// The input need not be normalised; a zero vector is a usage error.
SchmidtForm schmidt_decompose(const Vec4& psi);

// Schmidt coefficients only (closed form from the 2x2 amplitude matrix).
std::array<double, 2> schmidt_coefficients(const Vec4& psi);

}  // namespace entqkd
