#pragma once

// Numerical radius, Davis-Wielandt radius and the Euclidean / generalized
// operator radii of operator tuples, plus Davis-Wielandt shell sampling.
//
// w(S) is computed by rotation scanning: w(S) = max over theta of
// lambda_max of the Hermitian part of e^{i theta} S. Everything else is a
// maximization of a smooth, non-concave functional over the complex unit
// sphere, done by projected gradient ascent from seeded random starts; those
// results are lower estimates of the supremum.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dwr/linalg.hpp"
#include "dwr/matrix.hpp"
#include "dwr/random.hpp"

namespace dwr {

enum class Method { rotation_scan, sphere_ascent, grid_oracle };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::rotation_scan: return "rotation-scan";
    case Method::sphere_ascent: return "sphere-ascent";
    case Method::grid_oracle: return "grid-oracle";
  }
  return "unknown";
}

using UnitVector = std::vector<Complex>;

/// A radius value with the point that attains it. For rotation-scan the
/// certificate is the angle theta; otherwise it is a unit vector whose
/// first non-negligible component is real and non-negative.
struct RadiusResult {
  double value = 0.0;
  std::variant<double, UnitVector> certificate;
  Method method = Method::sphere_ascent;
  int restarts_used = 0;
  double tol = 0.0;

  double angle() const { return std::get<double>(certificate); }
  const UnitVector& vector() const { return std::get<UnitVector>(certificate); }
  bool has_angle() const { return std::holds_alternative<double>(certificate); }
};

/// Point (Re z, Im z, r) of the shell with z = <Sx, x> and r = ||Sx||^2.
struct ShellPoint {
  double re_z = 0.0;
  double im_z = 0.0;
  double r = 0.0;
};

// ---------------------------------------------------------------------------
// Numerical radius

/// Hermitian part of e^{i theta} S.
inline Matrix rotated_hermitian_part(const Matrix& s, double theta) {
  return hermitian_part(scale(std::polar(1.0, theta), s));
}

inline double rotated_lambda_max(const Matrix& s, double theta) {
  return lambda_max(rotated_hermitian_part(s, theta));
}

struct NumericalRadiusOptions {
  int grid = 720;
  int brackets = 3;
  double angle_tol = 1e-10;
};

/// w(S) to within floating-point accuracy of lambda_max. The angle grid
/// plus golden-section refinement follows from lambda_max(H(theta)) being a
/// pointwise max of smooth branches.
inline RadiusResult numerical_radius(const Matrix& s, double tol = 1e-9,
                                     const NumericalRadiusOptions& opt = {}) {
  require_square(s, "numerical_radius");
  const double two_pi = 2.0 * std::numbers::pi;
  // Hermitian input: w = max |lambda|, attained at theta = 0 or pi.
  if (hermitian_defect(s) <= 1e-14 * frobenius_norm(s)) {
    const HermEigen e = herm_eig(hermitian_part(s));
    if (e.max() >= -e.min()) return RadiusResult{std::max(0.0, e.max()), 0.0, Method::rotation_scan, 0, tol};
    return RadiusResult{-e.min(), std::numbers::pi, Method::rotation_scan, 0, tol};
  }
  const double h = two_pi / opt.grid;
  std::vector<double> vals(opt.grid);
  for (int k = 0; k < opt.grid; ++k) vals[k] = rotated_lambda_max(s, k * h);

  std::vector<int> order(opt.grid);
  for (int k = 0; k < opt.grid; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] > vals[b]; });

  double best_theta = order[0] * h;
  double best = vals[order[0]];
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const int nb = std::min(opt.brackets, opt.grid);
  for (int b = 0; b < nb; ++b) {
    double lo = (order[b] - 1) * h;
    double hi = (order[b] + 1) * h;
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = rotated_lambda_max(s, x1);
    double f2 = rotated_lambda_max(s, x2);
    while (hi - lo > opt.angle_tol) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + phi * (hi - lo);
        f2 = rotated_lambda_max(s, x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - phi * (hi - lo);
        f1 = rotated_lambda_max(s, x1);
      }
    }
    const double t = 0.5 * (lo + hi);
    const double ft = rotated_lambda_max(s, t);
    if (ft > best) {
      best = ft;
      best_theta = t;
    }
  }
  best_theta = std::fmod(best_theta, two_pi);
  if (best_theta < 0.0) best_theta += two_pi;
  // Re-evaluate at the reduced angle so the certificate reproduces the value.
  best = std::max(0.0, rotated_lambda_max(s, best_theta));
  return RadiusResult{best, best_theta, Method::rotation_scan, 0, tol};
}

/// Unit vector x with |<Sx,x>| >= w(S) up to roundoff: the top eigenvector
/// of the maximizing rotation.
inline UnitVector numerical_radius_vector(const Matrix& s, double theta) {
  const HermEigen e = herm_eig(rotated_hermitian_part(s, theta));
  UnitVector x(s.rows());
  for (std::size_t i = 0; i < s.rows(); ++i) x[i] = e.vectors(i, s.rows() - 1);
  return x;
}

/// Right singular vector for the largest singular value.
inline UnitVector top_singular_vector(const Matrix& s) {
  const HermEigen e = herm_eig(gram(s));
  UnitVector x(s.cols());
  for (std::size_t i = 0; i < s.cols(); ++i) x[i] = e.vectors(i, s.cols() - 1);
  return x;
}

// ---------------------------------------------------------------------------
// Sphere ascent

/// Real-valued functional on C^n. With `grad` non-null also writes the
/// gradient g in the real embedding, i.e. df = Re(g* dx).
using SphereObjective = std::function<double(std::span<const Complex> x, std::vector<Complex>* grad)>;

struct AscentOptions {
  int restarts = 64;
  std::uint64_t seed = 1;
  double tol = 1e-6;
  int max_iterations = 20000;
};

struct AscentResult {
  double objective = 0.0;
  UnitVector x;
  int restarts_used = 0;
};

/// Fix the global phase: first component with modulus above 1e-12 becomes
/// real and non-negative.
inline void normalize_phase(UnitVector& x) {
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double m = std::abs(x[k]);
    if (m > 1e-12) {
      const Complex ph = std::conj(x[k]) / m;
      for (auto& c : x) c *= ph;
      x[k] = m;
      return;
    }
  }
}

namespace detail {

inline void normalize(std::vector<Complex>& x) {
  const double n = norm2(x);
  for (auto& z : x) z /= n;
}

// One projected-gradient ascent run from x (modified in place); returns the
// final objective value.
inline double ascend_from(const SphereObjective& f, std::vector<Complex>& x, double tol,
                          int max_iterations) {
  const std::size_t n = x.size();
  normalize(x);
  std::vector<Complex> g(n), gt(n), y(n);
  double fx = f(x, &g);
  double eta = -1.0;
  for (int it = 0; it < max_iterations; ++it) {
    Complex radial{};
    for (std::size_t k = 0; k < n; ++k) radial += std::conj(x[k]) * g[k];
    const double rad = radial.real();
    for (std::size_t k = 0; k < n; ++k) gt[k] = g[k] - rad * x[k];
    const double gn = norm2(gt);
    if (!(gn > tol * std::max(1.0, std::abs(fx)))) break;
    if (eta <= 0.0) eta = 0.5 / gn;

    bool accepted = false;
    for (int halvings = 0; halvings < 80; ++halvings) {
      for (std::size_t k = 0; k < n; ++k) y[k] = x[k] + eta * gt[k];
      normalize(y);
      const double fy = f(y, nullptr);
      if (fy > fx) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;
    x.swap(y);
    fx = f(x, &g);
    eta *= 2.0;
  }
  return fx;
}

}  // namespace detail

/// Maximize f over the unit sphere of C^n from `restarts` random starts
/// (seeded per restart from (seed, index)) followed by any extra starts.
/// Ties keep the lowest start index.
inline AscentResult sphere_ascent(const SphereObjective& f, std::size_t n, const AscentOptions& opt,
                                  std::span<const UnitVector> extra_starts = {}) {
  if (opt.restarts < 1) throw DomainError("sphere_ascent: restarts must be >= 1");
  AscentResult best{-std::numeric_limits<double>::infinity(), {}, 0};
  auto run = [&](std::vector<Complex> x) {
    const double fx = detail::ascend_from(f, x, opt.tol, opt.max_iterations);
    ++best.restarts_used;
    if (fx > best.objective) {
      best.objective = fx;
      best.x = std::move(x);
    }
  };
  for (int r = 0; r < opt.restarts; ++r) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(r)));
    run(random_unit_vector(rng, n));
  }
  for (const auto& s : extra_starts) {
    if (s.size() != n) throw DimensionError("sphere_ascent: start vector has wrong length");
    if (norm2(s) > 0.0) run(s);
  }
  normalize_phase(best.x);
  // Recompute at the stored certificate so value and certificate agree exactly.
  best.objective = f(best.x, nullptr);
  return best;
}

// ---------------------------------------------------------------------------
// Objectives

/// |<Sx,x>|^2 + ||Sx||^4, evaluated from Sx directly.
inline SphereObjective dw_objective(const Matrix& s) {
  return [s](std::span<const Complex> x, std::vector<Complex>* grad) {
    const auto y = mat_vec(s, x);
    const Complex q = dot(x, y);
    double r = 0.0;
    for (const auto& z : y) r += std::norm(z);
    if (grad) {
      const auto sx_adj = adjoint_mat_vec(s, x);  // S* x
      const auto sy_adj = adjoint_mat_vec(s, y);  // S* S x
      grad->assign(x.size(), Complex{});
      for (std::size_t k = 0; k < x.size(); ++k)
        (*grad)[k] = 2.0 * std::conj(q) * y[k] + 2.0 * q * sx_adj[k] + 4.0 * r * sy_adj[k];
    }
    return std::norm(q) + r * r;
  };
}

/// sum_i |<T_i x,x>|^p
inline SphereObjective power_sum_objective(std::vector<Matrix> tuple, double p) {
  return [tuple = std::move(tuple), p](std::span<const Complex> x, std::vector<Complex>* grad) {
    double f = 0.0;
    if (grad) grad->assign(x.size(), Complex{});
    for (const auto& t : tuple) {
      const auto tx = mat_vec(t, x);
      const Complex q = dot(x, tx);
      const double aq = std::abs(q);
      f += p == 2.0 ? aq * aq : std::pow(aq, p);
      if (grad && aq > 0.0) {
        const auto tax = adjoint_mat_vec(t, x);
        const double c = p * std::pow(aq, p - 2.0);
        for (std::size_t k = 0; k < x.size(); ++k)
          (*grad)[k] += c * (std::conj(q) * tx[k] + q * tax[k]);
      }
    }
    return f;
  };
}

/// sum_i (|<S_i x,x>|^2 + ||S_i x||^4)
inline SphereObjective dw_euclid_objective(const std::vector<Matrix>& tuple) {
  std::vector<SphereObjective> parts;
  parts.reserve(tuple.size());
  for (const auto& s : tuple) parts.push_back(dw_objective(s));
  return [parts = std::move(parts)](std::span<const Complex> x, std::vector<Complex>* grad) {
    double f = 0.0;
    if (grad) grad->assign(x.size(), Complex{});
    std::vector<Complex> g;
    for (const auto& part : parts) {
      f += part(x, grad ? &g : nullptr);
      if (grad)
        for (std::size_t k = 0; k < x.size(); ++k) (*grad)[k] += g[k];
    }
    return f;
  };
}

// ---------------------------------------------------------------------------
// Radii

struct SphereRadiusOptions {
  int restarts = 64;
  std::uint64_t seed = 1;
  double tol = 1e-6;
};

namespace detail {

inline void check_tuple(const std::vector<Matrix>& tuple, const char* what) {
  if (tuple.empty()) throw DomainError(std::string(what) + ": tuple must be non-empty");
  const std::size_t n = tuple.front().rows();
  for (const auto& t : tuple) {
    require_square(t, what);
    if (t.rows() != n) throw DimensionError(std::string(what) + ": tuple members differ in dimension");
  }
}

inline AscentOptions ascent_options(const SphereRadiusOptions& o) {
  return AscentOptions{o.restarts, o.seed, o.tol, 20000};
}

inline RadiusResult from_ascent(AscentResult a, double value, double tol) {
  return RadiusResult{value, std::move(a.x), Method::sphere_ascent, a.restarts_used, tol};
}

// Deterministic extra starts: for each operator, the numerical-radius vector
// and the top right singular vector.
inline std::vector<UnitVector> certificate_starts(const std::vector<Matrix>& tuple,
                                                  bool with_singular) {
  std::vector<UnitVector> starts;
  for (const auto& t : tuple) {
    starts.push_back(numerical_radius_vector(t, numerical_radius(t).angle()));
    if (with_singular) starts.push_back(top_singular_vector(t));
  }
  return starts;
}

}  // namespace detail

/// Davis-Wielandt radius, a certified lower estimate: the returned value
/// is sqrt(f(x)) at the returned unit vector and is checked against
/// max{w(S), ||S||^2}.
inline RadiusResult dw_radius(const Matrix& s, const SphereRadiusOptions& opt = {}) {
  require_square(s, "dw_radius");
  if (opt.restarts < 1) throw DomainError("dw_radius: restarts must be >= 1");
  const RadiusResult w = numerical_radius(s);
  const double nrm = operator_norm(s);
  const std::vector<UnitVector> starts{numerical_radius_vector(s, w.angle()), top_singular_vector(s)};
  auto a = sphere_ascent(dw_objective(s), s.rows(), detail::ascent_options(opt), starts);
  const double value = std::sqrt(std::max(0.0, a.objective));
  const double floor = std::max(w.value, nrm * nrm);
  if (value < floor - opt.tol * std::max(1.0, floor))
    throw ConsistencyError("dw_radius: estimate fell below max{w(S), ||S||^2}");
  return detail::from_ascent(std::move(a), value, opt.tol);
}

/// Euclidean operator radius of a tuple of square matrices.
inline RadiusResult euclid_radius(const std::vector<Matrix>& tuple, const SphereRadiusOptions& opt = {}) {
  detail::check_tuple(tuple, "euclid_radius");
  auto starts = detail::certificate_starts(tuple, false);
  auto a = sphere_ascent(power_sum_objective(tuple, 2.0), tuple.front().rows(),
                         detail::ascent_options(opt), starts);
  const double value = std::sqrt(std::max(0.0, a.objective));
  double floor = 0.0;
  for (const auto& t : tuple) floor = std::max(floor, numerical_radius(t).value);
  if (value < floor - opt.tol * std::max(1.0, floor))
    throw ConsistencyError("euclid_radius: estimate fell below max_i w(T_i)");
  return detail::from_ascent(std::move(a), value, opt.tol);
}

/// Generalized radius w_p, p >= 1.
inline RadiusResult gen_radius_p(const std::vector<Matrix>& tuple, double p,
                                 const SphereRadiusOptions& opt = {}) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("gen_radius_p: p must be >= 1");
  detail::check_tuple(tuple, "gen_radius_p");
  auto starts = detail::certificate_starts(tuple, false);
  auto a = sphere_ascent(power_sum_objective(tuple, p), tuple.front().rows(),
                         detail::ascent_options(opt), starts);
  const double value = std::pow(std::max(0.0, a.objective), 1.0 / p);
  return detail::from_ascent(std::move(a), value, opt.tol);
}

/// Euclidean Davis-Wielandt radius of a tuple.
inline RadiusResult dw_euclid(const std::vector<Matrix>& tuple, const SphereRadiusOptions& opt = {}) {
  detail::check_tuple(tuple, "dw_euclid");
  auto starts = detail::certificate_starts(tuple, true);
  auto a = sphere_ascent(dw_euclid_objective(tuple), tuple.front().rows(),
                         detail::ascent_options(opt), starts);
  const double value = std::sqrt(std::max(0.0, a.objective));
  return detail::from_ascent(std::move(a), value, opt.tol);
}

/// Brute-force dw for 2x2 matrices over x = (cos a, e^{i phi} sin a),
/// a in [0, pi/2], phi in [0, 2 pi), followed by one refinement grid
/// around the best cell. Independent of the ascent code path.
inline double dw_oracle_2x2(const Matrix& s, int grid = 2048) {
  if (s.rows() != 2 || s.cols() != 2) throw DimensionError("dw_oracle_2x2: matrix must be 2x2");
  if (grid < 64) throw DomainError("dw_oracle_2x2: grid must be >= 64");
  // Plain real arithmetic: this loop runs grid^2 times.
  const double ar = s(0, 0).real(), ai = s(0, 0).imag(), br = s(0, 1).real(), bi = s(0, 1).imag();
  const double cr = s(1, 0).real(), ci = s(1, 0).imag(), dr = s(1, 1).real(), di = s(1, 1).imag();
  auto f = [&](double ca, double sa, double ec, double es) {
    const double ur = sa * ec, ui = sa * es;  // second component of x
    const double y0r = ar * ca + br * ur - bi * ui, y0i = ai * ca + br * ui + bi * ur;
    const double y1r = cr * ca + dr * ur - di * ui, y1i = ci * ca + dr * ui + di * ur;
    const double qr = ca * y0r + ur * y1r + ui * y1i;
    const double qi = ca * y0i + ur * y1i - ui * y1r;
    const double r = y0r * y0r + y0i * y0i + y1r * y1r + y1i * y1i;
    return qr * qr + qi * qi + r * r;
  };
  const double half_pi = std::numbers::pi / 2.0;
  const double two_pi = 2.0 * std::numbers::pi;
  const double da = half_pi / (grid - 1);
  const double dp = two_pi / grid;

  std::vector<double> pc(grid), ps(grid);
  for (int j = 0; j < grid; ++j) {
    pc[j] = std::cos(j * dp);
    ps[j] = std::sin(j * dp);
  }
  double best = -1.0;
  int bi_ = 0, bj_ = 0;
  for (int i = 0; i < grid; ++i) {
    const double a = i * da;
    const double ca = std::cos(a), sa = std::sin(a);
    for (int j = 0; j < grid; ++j) {
      const double v = f(ca, sa, pc[j], ps[j]);
      if (v > best) {
        best = v;
        bi_ = i;
        bj_ = j;
      }
    }
  }
  constexpr int sub = 128;
  const double a0 = bi_ * da, p0 = bj_ * dp;
  for (int i = -sub; i <= sub; ++i) {
    const double a = std::clamp(a0 + i * (2.0 * da / sub), 0.0, half_pi);
    const double ca = std::cos(a), sa = std::sin(a);
    for (int j = -sub; j <= sub; ++j) {
      const double p = p0 + j * (2.0 * dp / sub);
      best = std::max(best, f(ca, sa, std::cos(p), std::sin(p)));
    }
  }
  return std::sqrt(std::max(0.0, best));
}

/// `count` shell points from uniformly random unit vectors drawn in sequence
/// from one generator seeded with `seed`.
inline std::vector<ShellPoint> sample_shell(const Matrix& s, std::size_t count, std::uint64_t seed) {
  require_square(s, "sample_shell");
  if (count < 1) throw DomainError("sample_shell: count must be >= 1");
  Rng rng(seed);
  std::vector<ShellPoint> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto x = random_unit_vector(rng, s.rows());
    const auto y = mat_vec(s, x);
    // Quotients by <x,x> absorb the rounding left in the normalization.
    const double xx = dot(x, x).real();
    const Complex q = dot(x, y) / xx;
    pts.push_back({q.real(), q.imag(), dot(y, y).real() / xx});
  }
  return pts;
}

}  // namespace dwr
