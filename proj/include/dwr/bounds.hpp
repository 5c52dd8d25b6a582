#pragma once

// Closed-form lower and upper bounds on the Davis-Wielandt radius, the
// numerical radius and their tuple generalizations.
//
// Each evaluator returns BoundRecords. A record bounds `target^power`, where
// target names the radius it refers to; `radius_value()` takes the root so
// every record can be compared against the radius itself.
//
// Record ids are frozen:
//   eq1.1-lower eq1.1-upper            max{w,|S|^2} <= dw <= sqrt(w^2+|S|^4)
//   kittaneh-lower kittaneh-upper      bounds on w^2 from |S*S+SS*|
//   lemma5-lower lemma5-upper          bounds on w_2p^2p of a tuple
//   thm3-lower thm3-upper              bounds on dw^2 from |S|^2+|S*|^2+2|S|^4
//   thm4-lower thm4-upper1 thm4-upper2
//   rem3-upper rem3-kittaneh-upper
//   thm5-upper                         (dw^r, parameters alpha, r)
//   rem5-upper rem5-kittaneh-upper
//   thm6-upper rem6-upper rem6-kittaneh-upper   (dw^2r, parameters alpha, r)
//   dwp-lower dwp-upper                bounds on dw_2p^2p
//   dwe-lower dwe-upper dwe-norm-lower dwe-norm-upper

#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "dwr/linalg.hpp"
#include "dwr/matrix.hpp"
#include "dwr/radius.hpp"

namespace dwr {

enum class BoundKind { lower, upper };

inline const char* to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }

struct BoundRecord {
  std::string id;
  BoundKind kind = BoundKind::upper;
  double value = 0.0;                    // bound on target^power
  std::map<std::string, double> params;  // alpha, r, p, n where applicable
  std::string target = "dw";             // dw | w | w_2p | dw_2p | dw_e
  double power = 1.0;

  double radius_value() const { return power == 1.0 ? value : std::pow(value, 1.0 / power); }
};

/// Everything the single-operator bounds consume, computed once.
struct Subject {
  Matrix s;
  double w = 0.0;                // numerical radius
  double norm = 0.0;             // ||S||
  double norm_sq_op = 0.0;       // ||S^2||
  Matrix abs_s;                  // |S|
  Matrix abs_s_adj;              // |S*|
  Matrix gram_s;                 // S*S = |S|^2
  Matrix cogram_s;               // SS* = |S*|^2

  explicit Subject(Matrix m)
      : s(std::move(m)),
        w(numerical_radius(s).value),
        norm(operator_norm(s)),
        norm_sq_op(operator_norm(multiply(s, s))),
        abs_s(abs_op(s)),
        abs_s_adj(abs_op(adjoint(s))),
        gram_s(psd_power(abs_s, 2.0)),
        cogram_s(psd_power(abs_s_adj, 2.0)) {}
};

namespace detail {

inline BoundRecord record(std::string id, BoundKind kind, double value, std::string target = "dw",
                          double power = 1.0, std::map<std::string, double> params = {}) {
  // Roundoff can push mathematically non-negative quantities a hair below 0.
  if (value < 0.0 && value > -1e-12) value = 0.0;
  return BoundRecord{std::move(id), kind, value, std::move(params), std::move(target), power};
}

inline void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
}

/// T* T + T T*
inline Matrix kittaneh_sum(const Matrix& t) { return gram(t) + multiply(t, adjoint(t)); }

}  // namespace detail

// --- max{w, ||S||^2} <= dw <= sqrt(w^2 + ||S||^4)
inline std::vector<BoundRecord> eval_eq1_1(const Subject& x) {
  const double n2 = x.norm * x.norm;
  return {detail::record("eq1.1-lower", BoundKind::lower, std::max(x.w, n2)),
          detail::record("eq1.1-upper", BoundKind::upper, std::sqrt(x.w * x.w + n2 * n2))};
}

// --- 1/4 ||S*S + SS*|| <= w^2 <= 1/2 ||S*S + SS*||
inline std::vector<BoundRecord> eval_kittaneh_2_8(const Matrix& s) {
  require_square(s, "eval_kittaneh");
  const double k = operator_norm(detail::kittaneh_sum(s));
  return {detail::record("kittaneh-lower", BoundKind::lower, 0.25 * k, "w", 2.0),
          detail::record("kittaneh-upper", BoundKind::upper, 0.5 * k, "w", 2.0)};
}

// --- Bounds on w_2p^2p(T_1..T_n):
//   ||sum T*T+TT*||^p / (2^{p+1} n^{p-1})  and  ||sum (T*T+TT*)^p|| / 2^p
inline std::vector<BoundRecord> eval_lemma5_2_9(const std::vector<Matrix>& tuple, double p) {
  if (!(p >= 1.0)) throw DomainError("eval_lemma5: p must be >= 1");
  if (tuple.empty()) throw DomainError("eval_lemma5: tuple must be non-empty");
  const std::size_t dim = tuple.front().rows();
  Matrix sum(dim, dim), sum_pow(dim, dim);
  for (const auto& t : tuple) {
    require_square(t, "eval_lemma5");
    if (t.rows() != dim) throw DimensionError("eval_lemma5: tuple members differ in dimension");
    const Matrix k = detail::kittaneh_sum(t);
    sum = sum + k;
    sum_pow = sum_pow + psd_power(k, p);
  }
  const double n = static_cast<double>(tuple.size());
  const double lower = std::pow(operator_norm(sum), p) / (std::pow(2.0, p + 1.0) * std::pow(n, p - 1.0));
  const double upper = operator_norm(sum_pow) / std::pow(2.0, p);
  const std::map<std::string, double> params{{"p", p}, {"n", n}};
  return {detail::record("lemma5-lower", BoundKind::lower, lower, "w_2p", 2.0 * p, params),
          detail::record("lemma5-upper", BoundKind::upper, upper, "w_2p", 2.0 * p, params)};
}

// --- 1/4 || |S|^2+|S*|^2+2|S|^4 || <= dw^2 <= 1/2 || ... ||
inline std::vector<BoundRecord> eval_thm3_2_10(const Subject& x) {
  const Matrix a = x.gram_s + x.cogram_s + 2.0 * psd_power(x.abs_s, 4.0);
  const double k = operator_norm(a);
  return {detail::record("thm3-lower", BoundKind::lower, 0.25 * k, "dw", 2.0),
          detail::record("thm3-upper", BoundKind::upper, 0.5 * k, "dw", 2.0)};
}

/// 1/4 (|S| + |S*|)^2 + |S|^4, the operator behind thm4-upper1 and rem3.
inline Matrix thm4_operator(const Subject& x) {
  const Matrix m = x.abs_s + x.abs_s_adj;
  return 0.25 * multiply(m, m) + psd_power(x.abs_s, 4.0);
}

// --- w(S + S*S) / sqrt2 <= dw <= sqrt||1/4(|S|+|S*|)^2 + |S|^4||
//                              <= sqrt(1/4(||S|| + ||S^2||^{1/2})^2 + ||S||^4)
inline std::vector<BoundRecord> eval_thm4_2_11(const Subject& x) {
  const double lower = numerical_radius(x.s + x.gram_s).value / std::numbers::sqrt2;
  const double upper1 = std::sqrt(std::max(0.0, operator_norm(thm4_operator(x))));
  const double t = x.norm + std::sqrt(x.norm_sq_op);
  const double upper2 = std::sqrt(0.25 * t * t + std::pow(x.norm, 4));
  return {detail::record("thm4-lower", BoundKind::lower, lower),
          detail::record("thm4-upper1", BoundKind::upper, upper1),
          detail::record("thm4-upper2", BoundKind::upper, upper2)};
}

// --- dw <= sqrt(w(T)), T = 1/4(|S|+|S*|)^2 + |S|^4; then w(T) <= sqrt(1/2||T*T+TT*||).
// T is Hermitian, so both collapse to sqrt||T||; both values are reported.
inline std::vector<BoundRecord> eval_rem3(const Subject& x) {
  const Matrix t = thm4_operator(x);
  const double wt = numerical_radius(t).value;
  const double kit = std::pow(0.5 * operator_norm(detail::kittaneh_sum(t)), 0.25);
  return {detail::record("rem3-upper", BoundKind::upper, std::sqrt(std::max(0.0, wt))),
          detail::record("rem3-kittaneh-upper", BoundKind::upper, kit)};
}

// --- dw^r <= 2^{r/2}/4 || |S|^{2r a} + |S*|^{2r(1-a)} + |S*S|^{2r a} + |S*S|^{2r(1-a)} ||,
// r >= 2.
inline std::vector<BoundRecord> eval_thm5_2_12(const Subject& x, double alpha = 0.5, double r = 2.0) {
  detail::check_alpha(alpha);
  if (!(r >= 2.0) || !std::isfinite(r)) throw DomainError("eval_thm5: r must be >= 2");
  const double e1 = 2.0 * r * alpha;
  const double e2 = 2.0 * r * (1.0 - alpha);
  const Matrix m = psd_power_or_identity(x.abs_s, e1) + psd_power_or_identity(x.abs_s_adj, e2) +
                   psd_power_or_identity(x.gram_s, e1) + psd_power_or_identity(x.gram_s, e2);
  const double value = std::pow(2.0, r / 2.0) / 4.0 * operator_norm(m);
  const std::map<std::string, double> params{{"alpha", alpha}, {"r", r}};
  return {detail::record("thm5-upper", BoundKind::upper, value, "dw", r, params)};
}

// --- dw <= sqrt(1/2 w(T)), T = |S|^2+|S*|^2+2|S*S|^2, then w(T) <= sqrt(1/2||T*T+TT*||).
// T is Hermitian: rem5-upper coincides with thm3-upper; reported, not assumed.
inline std::vector<BoundRecord> eval_rem5(const Subject& x) {
  const Matrix t = x.gram_s + x.cogram_s + 2.0 * psd_power(x.gram_s, 2.0);
  const double rem = std::sqrt(std::max(0.0, 0.5 * numerical_radius(t).value));
  const double kit = std::pow(operator_norm(detail::kittaneh_sum(t)) / 8.0, 0.25);
  return {detail::record("rem5-upper", BoundKind::upper, rem),
          detail::record("rem5-kittaneh-upper", BoundKind::upper, kit)};
}

// --- dw^{2r} <= 2^{r-1} || a|S|^{2r} + (1-a)|S*|^{2r} + |S*S|^{2r} ||, r >= 1,
// with the numerical-radius refinement and its Kittaneh relaxation
// 2^{r-3/2} ||T*T+TT*||^{1/2}.
inline std::vector<BoundRecord> eval_thm6_2_15(const Subject& x, double alpha = 0.5, double r = 1.0) {
  detail::check_alpha(alpha);
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("eval_thm6: r must be >= 1");
  const Matrix t = alpha * psd_power(x.abs_s, 2.0 * r) + (1.0 - alpha) * psd_power(x.abs_s_adj, 2.0 * r) +
                   psd_power(x.gram_s, 2.0 * r);
  const double c = std::pow(2.0, r - 1.0);
  const std::map<std::string, double> params{{"alpha", alpha}, {"r", r}};
  const double value = c * operator_norm(t);
  const double rem = c * numerical_radius(t).value;
  // 2^{r-1} w(T) <= 2^{r-1} (1/2 ||T*T+TT*||)^{1/2}
  const double kit = std::pow(2.0, r - 1.5) * std::sqrt(operator_norm(detail::kittaneh_sum(t)));
  return {detail::record("thm6-upper", BoundKind::upper, value, "dw", 2.0 * r, params),
          detail::record("rem6-upper", BoundKind::upper, rem, "dw", 2.0 * r, params),
          detail::record("rem6-kittaneh-upper", BoundKind::upper, kit, "dw", 2.0 * r, params)};
}

// --- 2^{-p} ||(|S|^2+|S*|^2)/2 + |S|^4||^p <= dw_2p^2p <= ||((|S|^2+|S*|^2)/2)^p + |S|^{4p}||
inline std::vector<BoundRecord> eval_dwp_sandwich(const Subject& x, double p = 1.0) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("eval_dwp: p must be >= 1");
  const Matrix half = 0.5 * (x.gram_s + x.cogram_s);
  const double lower = std::pow(operator_norm(half + psd_power(x.abs_s, 4.0)), p) / std::pow(2.0, p);
  const double upper = operator_norm(psd_power(half, p) + psd_power(x.abs_s, 4.0 * p));
  const std::map<std::string, double> params{{"p", p}};
  return {detail::record("dwp-lower", BoundKind::lower, lower, "dw_2p", 2.0 * p, params),
          detail::record("dwp-upper", BoundKind::upper, upper, "dw_2p", 2.0 * p, params)};
}

// --- Euclidean Davis-Wielandt radius of a tuple:
//   max{w_e(S_i), w_e(|S_i|^2)} <= dw_e <= w_e(S_i) + w_e(|S_i|^2)
//   1/4 ||sum |S_k|^2+|S_k*|^2+2|S_k|^4|| <= dw_e^2 <= 1/2 ||...||
// The first pair uses sphere-ascent estimates of w_e.
inline std::vector<BoundRecord> eval_dwe_sandwich(const std::vector<Matrix>& tuple,
                                                  const SphereRadiusOptions& opt = {}) {
  if (tuple.empty()) throw DomainError("eval_dwe: tuple must be non-empty");
  const std::size_t dim = tuple.front().rows();
  std::vector<Matrix> grams;
  Matrix sum(dim, dim);
  for (const auto& s : tuple) {
    require_square(s, "eval_dwe");
    if (s.rows() != dim) throw DimensionError("eval_dwe: tuple members differ in dimension");
    Matrix g = gram(s);
    sum = sum + g + multiply(s, adjoint(s)) + 2.0 * multiply(g, g);
    grams.push_back(std::move(g));
  }
  const double we = euclid_radius(tuple, opt).value;
  const double we_g = euclid_radius(grams, opt).value;
  const double k = operator_norm(sum);
  const std::map<std::string, double> params{{"n", static_cast<double>(tuple.size())}};
  return {detail::record("dwe-lower", BoundKind::lower, std::max(we, we_g), "dw_e", 1.0, params),
          detail::record("dwe-upper", BoundKind::upper, we + we_g, "dw_e", 1.0, params),
          detail::record("dwe-norm-lower", BoundKind::lower, 0.25 * k, "dw_e", 2.0, params),
          detail::record("dwe-norm-upper", BoundKind::upper, 0.5 * k, "dw_e", 2.0, params)};
}

// Matrix-argument conveniences.
inline std::vector<BoundRecord> eval_eq1_1(const Matrix& s) { return eval_eq1_1(Subject(s)); }
inline std::vector<BoundRecord> eval_thm3_2_10(const Matrix& s) { return eval_thm3_2_10(Subject(s)); }
inline std::vector<BoundRecord> eval_thm4_2_11(const Matrix& s) { return eval_thm4_2_11(Subject(s)); }
inline std::vector<BoundRecord> eval_rem3(const Matrix& s) { return eval_rem3(Subject(s)); }
inline std::vector<BoundRecord> eval_thm5_2_12(const Matrix& s, double alpha = 0.5, double r = 2.0) {
  return eval_thm5_2_12(Subject(s), alpha, r);
}
inline std::vector<BoundRecord> eval_thm6_2_15(const Matrix& s, double alpha = 0.5, double r = 1.0) {
  return eval_thm6_2_15(Subject(s), alpha, r);
}
inline std::vector<BoundRecord> eval_dwp_sandwich(const Matrix& s, double p = 1.0) {
  return eval_dwp_sandwich(Subject(s), p);
}

/// Look up a record by id; throws std::out_of_range if absent.
inline const BoundRecord& find_record(const std::vector<BoundRecord>& recs, const std::string& id) {
  for (const auto& r : recs)
    if (r.id == id) return r;
  throw std::out_of_range("no bound record '" + id + "'");
}

}  // namespace dwr
