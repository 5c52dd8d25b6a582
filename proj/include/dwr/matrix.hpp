#pragma once

// Dense complex matrices: storage, arithmetic and a few norms.

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwr {

using Complex = std::complex<double>;

/// Shape mismatch or a non-square operand where a square one is required.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (non-Hermitian,
/// not PSD, parameter out of range, non-finite entries).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// A computed quantity failed a self-check it is guaranteed to satisfy.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Row-major dense complex matrix with at least one row and one column.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }

  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw DimensionError("entry count does not match shape");
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("matrix entries must be finite");
    }
  }

  /// Nested initializer, e.g. Matrix{{0, 1}, {2, 1}}.
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  /// Column vector view of a coefficient list.
  static Matrix column(std::span<const Complex> v) {
    return Matrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch");
}

inline void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw DimensionError(std::string(what) + ": matrix must be square");
}

inline Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix c = a;
  auto cd = c.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < cd.size(); ++k) cd[k] += bd[k];
  return c;
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  Matrix c = a;
  auto cd = c.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < cd.size(); ++k) cd[k] -= bd[k];
  return c;
}

inline Matrix scale(Complex lambda, const Matrix& a) {
  Matrix c = a;
  for (auto& z : c.data()) z *= lambda;
  return c;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

/// Conjugate transpose.
inline Matrix adjoint(const Matrix& a) {
  Matrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
  return c;
}

/// a* a, the Gram matrix (|a|^2 in operator notation).
inline Matrix gram(const Matrix& a) { return multiply(adjoint(a), a); }

inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }
inline Matrix operator*(Complex s, const Matrix& a) { return scale(s, a); }
inline Matrix operator*(double s, const Matrix& a) { return scale(s, a); }

inline double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

/// ||a - a*||_F
inline double hermitian_defect(const Matrix& a) {
  require_square(a, "hermitian_defect");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

/// (a + a*) / 2, exactly Hermitian.
inline Matrix hermitian_part(const Matrix& a) {
  require_square(a, "hermitian_part");
  Matrix h(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
    h(i, i) = h(i, i).real();
  }
  return h;
}

inline Complex trace(const Matrix& a) {
  require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

// Vector helpers on column matrices or raw coefficient spans.

inline Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  Complex s{};
  for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

inline double norm2(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

/// y = a x for a column of coefficients.
inline std::vector<Complex> mat_vec(const Matrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw DimensionError("apply: vector length mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

/// y = a* x without forming the adjoint.
inline std::vector<Complex> adjoint_mat_vec(const Matrix& a, std::span<const Complex> x) {
  if (a.rows() != x.size()) throw DimensionError("apply_adjoint: vector length mismatch");
  std::vector<Complex> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex xi = x[i];
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += std::conj(a(i, j)) * xi;
  }
  return y;
}

/// <a x, x> = x* a x
inline Complex quadratic_form(const Matrix& a, std::span<const Complex> x) {
  return dot(x, mat_vec(a, x));
}

}  // namespace dwr
