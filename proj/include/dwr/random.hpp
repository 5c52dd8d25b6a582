#pragma once

// Seeded random sources that produce identical streams on every platform.
//
// The engine is std::mt19937_64, whose output sequence the standard fixes.
// The standard distributions are implementation defined, so uniforms are
// built from the top 53 bits of each draw and normals from Box-Muller.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "dwr/matrix.hpp"

namespace dwr {

/// splitmix64 finalizer; derives independent seeds from (seed, index).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1).
  double uniform() {
    const std::uint64_t bits = engine_() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Standard complex Gaussian, E|z|^2 = 1.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Uniformly distributed point on the complex unit sphere in C^n.
inline std::vector<Complex> random_unit_vector(Rng& rng, std::size_t n) {
  std::vector<Complex> x(n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (auto& z : x) z = rng.complex_normal();
    nrm = norm2(x);
  }
  for (auto& z : x) z /= nrm;
  return x;
}

/// Matrix with i.i.d. standard complex Gaussian entries.
inline Matrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto& z : m.data()) z = rng.complex_normal();
  return m;
}

/// Haar unitary: Gram-Schmidt (applied twice) on a Ginibre matrix. The
/// implied R has a positive diagonal, which makes the law of Q exactly Haar.
inline Matrix haar_unitary(Rng& rng, std::size_t n) {
  Matrix q = ginibre(rng, n, n);
  std::vector<Complex> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
    }
    for (std::size_t i = 0; i < n; ++i) col[i] = q(i, j);
    const double nrm = norm2(col);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= nrm;
  }
  return q;
}

}  // namespace dwr
