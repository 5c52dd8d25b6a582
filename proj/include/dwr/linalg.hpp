#pragma once

// Hermitian eigendecomposition (cyclic complex Jacobi) and the PSD
// functional calculus built on it.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "dwr/matrix.hpp"

namespace dwr {

struct Tolerances {
  double eig = 1e-12;        // relative off-diagonal mass at which Jacobi stops
  double hermitian = 1e-10;  // relative ||A - A*||_F admitted by herm_eig
  double clamp = 1e-10;      // relative negative eigenvalue clamped to zero
};

inline constexpr Tolerances default_tolerances{};

/// Eigenvalues ascending; column k of `vectors` belongs to values[k].
struct HermEigen {
  std::vector<double> values;
  Matrix vectors;

  double max() const { return values.back(); }
  double min() const { return values.front(); }
};

namespace detail {

inline double off_diagonal_mass(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One two-sided rotation annihilating a(p,q). The unitary acting on the
// (p,q) plane is G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] where
// phi = arg a(p,q); A <- G* A G and V <- V G.
inline void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex g_pp = c;
  const Complex g_pq = s;
  const Complex g_qp = -s * std::conj(phase);
  const Complex g_qq = c * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi sweeps.
/// Throws DimensionError for non-square input and DomainError when
/// ||A - A*||_F exceeds tol.hermitian * ||A||_F.
inline HermEigen herm_eig(const Matrix& input, const Tolerances& tol = default_tolerances) {
  require_square(input, "herm_eig");
  const double fro = frobenius_norm(input);
  if (hermitian_defect(input) > tol.hermitian * fro)
    throw DomainError("herm_eig: matrix is not Hermitian within tolerance");

  const std::size_t n = input.rows();
  Matrix a = hermitian_part(input);
  Matrix v = Matrix::identity(n);
  const double target = tol.eig * fro;

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (detail::off_diagonal_mass(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// Largest eigenvalue of a Hermitian matrix.
inline double lambda_max(const Matrix& a, const Tolerances& tol = default_tolerances) {
  return herm_eig(a, tol).max();
}

/// Largest singular value, sqrt(lambda_max(A* A)).
inline double operator_norm(const Matrix& a) {
  const Matrix g = a.rows() >= a.cols() ? gram(a) : multiply(a, adjoint(a));
  return std::sqrt(std::max(0.0, lambda_max(g)));
}

/// V f(D) V* for real f applied to the eigenvalues.
template <class F>
Matrix spectral_map(const HermEigen& e, F&& f) {
  const std::size_t n = e.values.size();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(e.values[k]);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * fv[k] * std::conj(e.vectors(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

/// A^p for a Hermitian positive semidefinite A and p > 0. Eigenvalues in
/// [-clamp*||A||, 0) are treated as zero; anything more negative is a
/// DomainError. The exponent p == 0 is accepted only through
/// psd_power_or_identity.
inline Matrix psd_power(const Matrix& a, double p, const Tolerances& tol = default_tolerances) {
  if (!(p > 0.0) || !std::isfinite(p)) throw DomainError("psd_power: exponent must be positive");
  const HermEigen e = herm_eig(a, tol);
  const double scale = std::max(std::abs(e.min()), std::abs(e.max()));
  if (e.min() < -tol.clamp * scale) throw DomainError("psd_power: matrix is not positive semidefinite");
  if (p == 1.0) return spectral_map(e, [](double x) { return std::max(x, 0.0); });
  return spectral_map(e, [p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; });
}

/// Same as psd_power, but exponent 0 yields the identity on the full space.
inline Matrix psd_power_or_identity(const Matrix& a, double p,
                                    const Tolerances& tol = default_tolerances) {
  if (p == 0.0) {
    require_square(a, "psd_power");
    return Matrix::identity(a.rows());
  }
  return psd_power(a, p, tol);
}

/// |A| = (A* A)^{1/2}
inline Matrix abs_op(const Matrix& a, const Tolerances& tol = default_tolerances) {
  return psd_power(gram(a), 0.5, tol);
}

/// P = (A + A*)/2 and Q = (A - A*)/(2i), so that A = P + iQ.
struct Cartesian {
  Matrix real_part;
  Matrix imag_part;
};

inline Cartesian cartesian_decomposition(const Matrix& a) {
  require_square(a, "cartesian_decomposition");
  const std::size_t n = a.rows();
  Cartesian out{Matrix(n, n), Matrix(n, n)};
  const Complex half_over_i{0.0, -0.5};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.real_part(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
      out.imag_part(i, j) = half_over_i * (a(i, j) - std::conj(a(j, i)));
    }
  }
  return out;
}

}  // namespace dwr
