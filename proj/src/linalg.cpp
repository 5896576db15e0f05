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

#include "entqkd/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "entqkd/errors.hpp"

namespace entqkd {

namespace {

std::array<Mat2, 4> make_paulis() {
  using namespace std::complex_literals;
  std::array<Mat2, 4> p{};
  p[0] = Mat2::identity();
  p[1](0, 1) = 1.0;
  p[1](1, 0) = 1.0;
  p[2](0, 1) = -1.0i;
  p[2](1, 0) = 1.0i;
  p[3](0, 0) = 1.0;
  p[3](1, 1) = -1.0;
  return p;
}

std::array<Mat4, 16> make_pauli_products() {
  std::array<Mat4, 16> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = kron(pauli(i), pauli(j));
  return out;
}

template <std::size_t N>
void normalise_phase(Vec<N>& v) {
  double largest = 0.0;
  for (const auto& x : v) largest = std::max(largest, std::abs(x));
  if (largest == 0.0) return;
  for (auto& x : v) {
    const double mag = std::abs(x);
    if (mag >= largest - 1e-12) {
      const cplx phase = std::conj(x) / mag;
      for (auto& y : v) y *= phase;
      // Pin the reference component so rounding leaves no imaginary residue.
      x = mag;
      return;
    }
  }
}

template <std::size_t N>
bool lex_less(const Vec<N>& a, const Vec<N>& b) {
  for (std::size_t i = 0; i < N; ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

const Mat2& pauli(int index) {
  static const std::array<Mat2, 4> paulis = make_paulis();
  if (index < 0 || index > 3) throw_usage("pauli index must be in 0..3");
  return paulis[static_cast<std::size_t>(index)];
}

const Mat4& pauli_product(int i, int j) {
  static const std::array<Mat4, 16> products = make_pauli_products();
  if (i < 0 || i > 3 || j < 0 || j > 3) throw_usage("pauli index must be in 0..3");
  return products[static_cast<std::size_t>(4 * i + j)];
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m{};
  for (std::size_t ar = 0; ar < 2; ++ar)
    for (std::size_t ac = 0; ac < 2; ++ac)
      for (std::size_t br = 0; br < 2; ++br)
        for (std::size_t bc = 0; bc < 2; ++bc)
          m(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
  return m;
}

Vec4 kron(const Vec2& a, const Vec2& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Mat4 partial_transpose(const Mat4& m, Side side) {
  Mat4 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp) {
          if (side == Side::B)
            out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
          else
            out(2 * a + b, 2 * ap + bp) = m(2 * ap + b, 2 * a + bp);
        }
  return out;
}

Mat2 partial_trace_a(const Mat4& m) {
  Mat2 out{};
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t bp = 0; bp < 2; ++bp)
      out(b, bp) = m(b, bp) + m(2 + b, 2 + bp);
  return out;
}

Mat2 partial_trace_b(const Mat4& m) {
  Mat2 out{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t ap = 0; ap < 2; ++ap)
      out(a, ap) = m(2 * a, 2 * ap) + m(2 * a + 1, 2 * ap + 1);
  return out;
}

template <std::size_t N>
EigenSystem<N> hermitian_eig(const Matrix<N>& m, double tol) {
  if (!m.is_finite()) throw_validation("hermitian_eig: non-finite entry");
  const double defect = m.hermiticity_defect();
  if (defect > tol)
    throw_validation("hermitian_eig: matrix is not Hermitian (defect " +
                     std::to_string(defect) + ")");

  Matrix<N> a = 0.5 * (m + m.adjoint());
  Matrix<N> v = Matrix<N>::identity();
  const double scale = std::max(1.0, a.frobenius_norm());

  constexpr int kMaxSweeps = 100;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-15 * scale) {
      converged = true;
      break;
    }

    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cplx phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // G = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
        const cplx gpp = c;
        const cplx gpq = s;
        const cplx gqp = -s * std::conj(phase);
        const cplx gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < N; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (!converged)
    throw_numeric("hermitian_eig: Jacobi sweeps did not converge");

  std::array<double, N> values{};
  std::array<Vec<N>, N> vectors{};
  for (std::size_t k = 0; k < N; ++k) {
    values[k] = a(k, k).real();
    for (std::size_t r = 0; r < N; ++r) vectors[k][r] = v(r, k);
    normalise_phase(vectors[k]);
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  // Tie groups are ordered by eigenvector; eigenvalues stay ascending.
  const double tie = 1e-12 * scale;
  for (std::size_t start = 0; start < N;) {
    std::size_t end = start + 1;
    while (end < N && values[order[end]] - values[order[end - 1]] <= tie) ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](std::size_t x, std::size_t y) { return lex_less(vectors[x], vectors[y]); });
    start = end;
  }

  std::array<double, N> sorted_values = values;
  std::sort(sorted_values.begin(), sorted_values.end());

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = sorted_values[k];
    out.eigenvectors[k] = vectors[order[k]];
  }
  return out;
}

template EigenSystem<2> hermitian_eig<2>(const Matrix<2>&, double);
template EigenSystem<4> hermitian_eig<4>(const Matrix<4>&, double);

Vec4 SchmidtForm::reconstruct() const {
  Vec4 out{};
  for (std::size_t i = 0; i < 2; ++i) {
    const Vec4 term = kron(basis_a[i], basis_b[i]);
    for (std::size_t k = 0; k < 4; ++k) out[k] += coefficients[i] * term[k];
  }
  return out;
}

std::array<double, 2> schmidt_coefficients(const Vec4& psi) {
  double f = 0.0;
  for (const auto& x : psi) f += std::norm(x);
  const double det = std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
  // f - 2 det cancels near maximal entanglement; use the discriminant of
  // M M^dagger, (p - q)^2 + 4|r|^2 = f^2 - 4 det^2, which is a sum of squares.
  const double p = std::norm(psi[0]) + std::norm(psi[1]);
  const double q = std::norm(psi[2]) + std::norm(psi[3]);
  const cplx r = psi[0] * std::conj(psi[2]) + psi[1] * std::conj(psi[3]);
  const double disc = (p - q) * (p - q) + 4.0 * std::norm(r);
  const double hi = std::sqrt(f + 2.0 * det);
  const double lo = f + 2.0 * det > 0.0 ? std::sqrt(disc / (f + 2.0 * det)) : 0.0;
  const double c1 = 0.5 * (hi + lo);
  const double c2 = c1 > 0.0 ? det / c1 : 0.0;
  return {c1, c2};
}

SchmidtForm schmidt_decompose(const Vec4& psi) {
  if (norm(psi) == 0.0) throw_usage("schmidt_decompose: zero vector");
  for (const auto& x : psi)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw_usage("schmidt_decompose: non-finite amplitude");

  // Amplitude matrix M(a, b) = psi[2a + b]; psi = sum_i c_i u_i (x) v_i means
  // M = U diag(c) V^T.
  Mat2 amp{};
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) amp(a, b) = psi[2 * a + b];

  SchmidtForm out;
  out.coefficients = schmidt_coefficients(psi);

  const auto eig = hermitian_eig(amp * amp.adjoint(), 1e-8);
  out.basis_a[0] = eig.eigenvectors[1];
  out.basis_a[1] = eig.eigenvectors[0];

  const Mat2 amp_t = amp.transpose();
  auto pull_b = [&](const Vec2& u) {
    return amp_t * Vec2{std::conj(u[0]), std::conj(u[1])};
  };

  const Vec2 w0 = pull_b(out.basis_a[0]);
  const double n0 = norm(w0);
  out.basis_b[0] = {w0[0] / n0, w0[1] / n0};

  // Second B vector: the orthogonal complement of the first, with the phase
  // that matches the data when the second coefficient is nonzero.
  Vec2 perp{-std::conj(out.basis_b[0][1]), std::conj(out.basis_b[0][0])};
  const Vec2 w1 = pull_b(out.basis_a[1]);
  const cplx overlap = dot(perp, w1);
  if (std::abs(overlap) > 0.0) {
    const cplx phase = overlap / std::abs(overlap);
    perp[0] *= phase;
    perp[1] *= phase;
  }
  out.basis_b[1] = perp;
  return out;
}

}  // namespace entqkd
