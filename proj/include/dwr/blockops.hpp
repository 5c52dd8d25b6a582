#pragma once

// n x n block operator matrices and the bounds that replace a block matrix
// by a small non-negative scalar matrix built from block-wise radii.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dwr/linalg.hpp"
#include "dwr/matrix.hpp"
#include "dwr/radius.hpp"

namespace dwr {

/// Square grid of conformable blocks; block (i, j) is row_dims[i] x col_dims[j]
/// and row_dims == col_dims.
class BlockMatrixSpec {
 public:
  BlockMatrixSpec(std::size_t n, std::vector<Matrix> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ == 0) throw DimensionError("block spec: n must be positive");
    if (blocks_.size() != n_ * n_) throw DimensionError("block spec: expected n*n blocks");
    dims_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) dims_[i] = block(i, i).rows();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const Matrix& b = block(i, j);
        if (b.rows() != dims_[i] || b.cols() != dims_[j])
          throw DimensionError("block spec: block (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not conformable");
      }
    }
  }

  /// Block diagonal spec from the given diagonal blocks.
  static BlockMatrixSpec block_diagonal(const std::vector<Matrix>& diag) {
    const std::size_t n = diag.size();
    std::vector<Matrix> blocks;
    blocks.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        blocks.push_back(i == j ? diag[i] : Matrix::zero(diag[i].rows(), diag[j].cols()));
    return BlockMatrixSpec(n, std::move(blocks));
  }

  std::size_t n() const noexcept { return n_; }
  const Matrix& block(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }
  const std::vector<std::size_t>& row_dims() const noexcept { return dims_; }
  const std::vector<std::size_t>& col_dims() const noexcept { return dims_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

 private:
  std::size_t n_;
  std::vector<Matrix> blocks_;
  std::vector<std::size_t> dims_;
};

/// Flat matrix acting on the direct sum of the block spaces.
inline Matrix assemble(const BlockMatrixSpec& spec) {
  std::vector<std::size_t> offset(spec.n() + 1, 0);
  for (std::size_t i = 0; i < spec.n(); ++i) offset[i + 1] = offset[i] + spec.row_dims()[i];
  Matrix out(offset.back(), offset.back());
  for (std::size_t bi = 0; bi < spec.n(); ++bi)
    for (std::size_t bj = 0; bj < spec.n(); ++bj) {
      const Matrix& b = spec.block(bi, bj);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(offset[bi] + r, offset[bj] + c) = b(r, c);
    }
  return out;
}

enum class ReductionRule { eq3_1a, eq3_1b, eq3_1c, thm7, thm8, thm9 };

inline const char* to_string(ReductionRule r) {
  switch (r) {
    case ReductionRule::eq3_1a: return "eq3.1a";
    case ReductionRule::eq3_1b: return "eq3.1b";
    case ReductionRule::eq3_1c: return "eq3.1c";
    case ReductionRule::thm7: return "thm7";
    case ReductionRule::thm8: return "thm8";
    case ReductionRule::thm9: return "thm9";
  }
  return "unknown";
}

inline std::optional<ReductionRule> parse_reduction_rule(const std::string& s) {
  for (auto r : {ReductionRule::eq3_1a, ReductionRule::eq3_1b, ReductionRule::eq3_1c, ReductionRule::thm7,
                 ReductionRule::thm8, ReductionRule::thm9})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

/// n x n matrix with non-negative real entries, row-major.
struct ReductionMatrix {
  std::size_t n = 0;
  std::vector<double> entries;
  ReductionRule rule = ReductionRule::eq3_1a;

  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

/// Numerical radius of a non-negative matrix: lambda_max of its symmetric part.
inline double w_nonneg(std::size_t n, const std::vector<double>& m) {
  if (m.size() != n * n) throw DimensionError("w_nonneg: entry count does not match n");
  Matrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(m[i * n + j] >= 0.0)) throw DomainError("w_nonneg: entries must be non-negative");
      sym(i, j) = 0.5 * (m[i * n + j] + m[j * n + i]);
    }
  return std::max(0.0, lambda_max(sym));
}

inline double w_nonneg(const ReductionMatrix& m) { return w_nonneg(m.n, m.entries); }

inline ReductionMatrix reduction_matrix(const BlockMatrixSpec& spec, ReductionRule rule) {
  const std::size_t n = spec.n();
  ReductionMatrix out{n, std::vector<double>(n * n, 0.0), rule};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& b = spec.block(i, j);
      double t = 0.0;
      switch (rule) {
        case ReductionRule::eq3_1a:
          t = operator_norm(b);
          break;
        case ReductionRule::eq3_1b:
          t = i == j ? 0.5 * (operator_norm(b) + std::sqrt(operator_norm(multiply(b, b)))) : operator_norm(b);
          break;
        case ReductionRule::eq3_1c:
          t = i == j ? numerical_radius(b).value : operator_norm(b);
          break;
        case ReductionRule::thm7: {
          const std::size_t k = n - 1 - i;  // anti-diagonal partner column
          if (j == i) {
            t = numerical_radius(b).value;
          } else if (j == k) {
            const double wa = numerical_radius(abs_op(b)).value;
            const double wb = numerical_radius(abs_op(adjoint(b))).value;
            t = std::sqrt(wa) * std::sqrt(wb);
          } else {
            t = operator_norm(b);
          }
          break;
        }
        case ReductionRule::thm8: {
          const double nb = operator_norm(b);
          t = i == j ? numerical_radius(b).value + nb * nb : nb + nb * nb;
          break;
        }
        case ReductionRule::thm9: {
          const double nb = operator_norm(b);
          const double head = i == j ? std::pow(numerical_radius(b).value, 2) : nb * nb;
          t = static_cast<double>(n) * (head + std::pow(nb, 4));
          break;
        }
      }
      out.entries[i * n + j] = t;
    }
  }
  return out;
}

/// Upper bound on w(assemble(spec)) from one of the numerical-radius rules.
inline double w_block_upper(const BlockMatrixSpec& spec, ReductionRule rule) {
  if (rule == ReductionRule::thm8 || rule == ReductionRule::thm9)
    throw DomainError("w_block_upper: rule bounds dw, not w");
  return w_nonneg(reduction_matrix(spec, rule));
}

/// dw(T) <= w([t_ij]) with t_ii = w(T_ii) + ||T_ii||^2, t_ij = ||T_ij|| + ||T_ij||^2.
inline double dw_block_upper_thm8(const BlockMatrixSpec& spec) {
  return w_nonneg(reduction_matrix(spec, ReductionRule::thm8));
}

/// 1/2 (a + d + sqrt((a-d)^2 + (b+c)^2)) for the thm8 entries of a 2x2 spec.
inline double cor2_closed_form(const BlockMatrixSpec& spec) {
  if (spec.n() != 2) throw DimensionError("cor2_closed_form: spec must be 2x2");
  const auto m = reduction_matrix(spec, ReductionRule::thm8);
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  return 0.5 * (a + d + std::sqrt((a - d) * (a - d) + (b + c) * (b + c)));
}

struct BlockSandwich {
  double lower = 0.0;
  double upper = 0.0;
};

/// w(T + T*T)/sqrt2 <= dw(T) <= sqrt(w([t_ij])) with the thm9 entries.
inline BlockSandwich dw_block_sandwich_thm9(const BlockMatrixSpec& spec) {
  const Matrix t = assemble(spec);
  const double lower = numerical_radius(t + gram(t)).value / std::numbers::sqrt2;
  const double upper = std::sqrt(w_nonneg(reduction_matrix(spec, ReductionRule::thm9)));
  return {lower, upper};
}

/// sqrt(a + d + sqrt((a-d)^2 + (b+c)^2)) with a = w^2(T11) + ||T11||^4,
/// b = ||T12||^2 + ||T12||^4, c likewise for T21, d for T22.
inline double dw_2x2_cor5(const BlockMatrixSpec& spec) {
  if (spec.n() != 2) throw DimensionError("dw_2x2_cor5: spec must be 2x2");
  auto diag = [&](std::size_t i) {
    const double w = numerical_radius(spec.block(i, i)).value;
    return w * w + std::pow(operator_norm(spec.block(i, i)), 4);
  };
  auto off = [&](std::size_t i, std::size_t j) {
    const double nb = operator_norm(spec.block(i, j));
    return nb * nb + std::pow(nb, 4);
  };
  const double a = diag(0), d = diag(1), b = off(0, 1), c = off(1, 0);
  return std::sqrt(a + d + std::sqrt((a - d) * (a - d) + (b + c) * (b + c)));
}

}  // namespace dwr
