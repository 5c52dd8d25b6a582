#pragma once

// Random matrix ensembles, the inequality-chain checker and the regression
// table of printed example values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dwr/blockops.hpp"
#include "dwr/bounds.hpp"
#include "dwr/linalg.hpp"
#include "dwr/matrix.hpp"
#include "dwr/radius.hpp"
#include "dwr/random.hpp"

namespace dwr {

// ---------------------------------------------------------------------------
// Ensembles

enum class EnsembleKind { ginibre, hermitian, unitary, normal, projection, nilpotent, shifted_projection };

inline constexpr EnsembleKind all_ensembles[] = {
    EnsembleKind::ginibre,    EnsembleKind::hermitian, EnsembleKind::unitary,           EnsembleKind::normal,
    EnsembleKind::projection, EnsembleKind::nilpotent, EnsembleKind::shifted_projection};

inline const char* to_string(EnsembleKind k) {
  switch (k) {
    case EnsembleKind::ginibre: return "ginibre";
    case EnsembleKind::hermitian: return "hermitian";
    case EnsembleKind::unitary: return "unitary";
    case EnsembleKind::normal: return "normal";
    case EnsembleKind::projection: return "projection";
    case EnsembleKind::nilpotent: return "nilpotent";
    case EnsembleKind::shifted_projection: return "shifted-projection";
  }
  return "unknown";
}

inline std::optional<EnsembleKind> parse_ensemble(const std::string& s) {
  for (auto k : all_ensembles)
    if (s == to_string(k)) return k;
  return std::nullopt;
}

struct EnsembleConfig {
  EnsembleKind kind = EnsembleKind::ginibre;
  std::size_t dim = 2;
  std::size_t count = 1;
  std::uint64_t seed = 1;

  void validate() const {
    if (dim < 1 || dim > 64) throw DomainError("ensemble: dim must lie in [1, 64]");
    if (count < 1 || count > 100000) throw DomainError("ensemble: count must lie in [1, 100000]");
  }
};

namespace detail {

// U diag(d) U* with the result made exactly Hermitian when d is real.
inline Matrix conjugate_diagonal(const Matrix& u, const std::vector<Complex>& d) {
  const std::size_t n = u.rows();
  Matrix ud = u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ud(i, j) *= d[j];
  return multiply(ud, adjoint(u));
}

inline Matrix random_projection(Rng& rng, std::size_t n) {
  const std::size_t rank = n == 1 ? 1 : 1 + static_cast<std::size_t>(rng.next_u64() % (n - 1));
  const Matrix u = haar_unitary(rng, n);
  std::vector<Complex> d(n, 0.0);
  for (std::size_t k = 0; k < rank; ++k) d[k] = 1.0;
  return hermitian_part(conjugate_diagonal(u, d));
}

}  // namespace detail

/// One draw of the given kind.
///   ginibre             i.i.d. standard complex Gaussian entries
///   hermitian           (G + G*)/2
///   unitary             Haar
///   normal              U diag(z) U*, z i.i.d. complex Gaussian, U Haar
///   projection          U diag(1..1, 0..0) U*, rank uniform in [1, n-1] (1 when n = 1)
///   nilpotent           strictly upper triangular Gaussian
///   shifted-projection  P + mu I, P as above, mu complex Gaussian
inline Matrix generate_one(EnsembleKind kind, std::size_t n, Rng& rng) {
  switch (kind) {
    case EnsembleKind::ginibre: return ginibre(rng, n, n);
    case EnsembleKind::hermitian: return hermitian_part(ginibre(rng, n, n));
    case EnsembleKind::unitary: return haar_unitary(rng, n);
    case EnsembleKind::normal: {
      const Matrix u = haar_unitary(rng, n);
      std::vector<Complex> d(n);
      for (auto& z : d) z = rng.complex_normal();
      return detail::conjugate_diagonal(u, d);
    }
    case EnsembleKind::projection: return detail::random_projection(rng, n);
    case EnsembleKind::nilpotent: {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.complex_normal();
      return m;
    }
    case EnsembleKind::shifted_projection: {
      Matrix p = detail::random_projection(rng, n);
      const Complex mu = rng.complex_normal();
      for (std::size_t i = 0; i < n; ++i) p(i, i) += mu;
      return p;
    }
  }
  throw DomainError("generate: unknown ensemble kind");
}

/// Matrix k is drawn from Rng(mix_seed(seed, k)).
inline std::vector<Matrix> generate(const EnsembleConfig& cfg) {
  cfg.validate();
  std::vector<Matrix> out;
  out.reserve(cfg.count);
  for (std::size_t k = 0; k < cfg.count; ++k) {
    Rng rng(mix_seed(cfg.seed, k));
    out.push_back(generate_one(cfg.kind, cfg.dim, rng));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain checking

/// Bound families understood by run_chain.
inline const std::vector<std::string>& chain_families() {
  static const std::vector<std::string> f{"eq1.1", "kittaneh", "lemma4", "lemma5", "thm3",  "thm4",
                                          "rem3",  "thm5",     "rem5",   "thm6",   "dwp",   "dwe",
                                          "eq3.1", "thm7",     "thm8",   "thm9",   "cor5",  "cor1"};
  return f;
}

struct ChainOptions {
  std::vector<std::string> families = chain_families();
  int restarts = 256;      // dw_radius
  int aux_restarts = 64;   // tuple radii
  std::uint64_t seed = 1;
  double tol = 1e-9;
  double slack = 1e-6;           // relative to max(1, radius estimate)
  double identity_tol = 1e-5;    // Lemma 4 identity, relative to max(1, dw)
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> thm5_r{2.0, 3.0};
  std::vector<double> thm6_r{1.0, 2.0};
  std::vector<double> powers{1.0, 2.0};  // p for lemma5 and dwp

  bool has(const std::string& family) const {
    return std::find(families.begin(), families.end(), family) != families.end();
  }
};

enum class CheckKind { lower, upper, identity };

inline const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::lower: return "lower";
    case CheckKind::upper: return "upper";
    case CheckKind::identity: return "identity";
  }
  return "unknown";
}

/// One inequality (or identity) evaluated on one matrix. `bound` and
/// `estimate` are on the radius scale.
struct CheckRecord {
  std::string id;
  CheckKind kind = CheckKind::upper;
  std::string subject = "S";
  std::map<std::string, double> params;
  std::string target = "dw";
  double bound = 0.0;
  double estimate = 0.0;
  double tolerance = 0.0;
  double margin = 0.0;
  bool satisfied = true;

  /// Aggregation key: id, parameters and subject.
  std::string key() const {
    std::string k = id;
    if (!params.empty()) {
      k += "{";
      bool first = true;
      for (const auto& [name, v] : params) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%s=%g", first ? "" : ",", name.c_str(), v);
        k += buf;
        first = false;
      }
      k += "}";
    }
    if (subject != "S") k += "[" + subject + "]";
    return k;
  }

  /// bound / estimate for uppers, estimate / bound for lowers.
  std::optional<double> tightness() const {
    if (kind == CheckKind::identity) return std::nullopt;
    const double num = kind == CheckKind::upper ? bound : estimate;
    const double den = kind == CheckKind::upper ? estimate : bound;
    if (!(den > 1e-300)) return std::nullopt;
    return num / den;
  }
};

struct MatrixReport {
  std::size_t index = 0;
  Matrix s;
  double dw_est = 0.0;
  double w = 0.0;
  double norm = 0.0;
  std::vector<CheckRecord> records;
  std::size_t violations = 0;
};

struct TightnessStats {
  std::size_t count = 0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

struct ChainReport {
  std::vector<MatrixReport> results;
  std::map<std::string, TightnessStats> aggregate;
  std::map<std::string, std::size_t> violations_by_id;
  std::size_t violations = 0;
};

namespace detail {

class ChainContext {
 public:
  ChainContext(const Matrix& s, const ChainOptions& opt) : x_(s), opt_(opt) {
    dw_ = dw_radius(s, {opt.restarts, opt.seed, opt.tol}).value;
  }

  const Subject& subject() const { return x_; }
  double dw() const { return dw_; }
  SphereRadiusOptions aux() const { return {opt_.aux_restarts, opt_.seed, opt_.tol}; }

  void add(const BoundRecord& b, double estimate, std::string subject = "S") {
    CheckRecord c;
    c.id = b.id;
    c.kind = b.kind == BoundKind::lower ? CheckKind::lower : CheckKind::upper;
    c.subject = std::move(subject);
    c.params = b.params;
    c.target = b.target;
    c.bound = b.radius_value();
    c.estimate = estimate;
    c.tolerance = opt_.slack * std::max(1.0, estimate);
    c.margin = c.kind == CheckKind::lower ? estimate - c.bound : c.bound - estimate;
    c.satisfied = c.margin >= -c.tolerance;
    records.push_back(std::move(c));
  }

  void add_identity(std::string id, std::string target, double value, double estimate, double tolerance,
                    std::string subject = "S") {
    CheckRecord c;
    c.id = std::move(id);
    c.kind = CheckKind::identity;
    c.subject = std::move(subject);
    c.target = std::move(target);
    c.bound = value;
    c.estimate = estimate;
    c.tolerance = tolerance;
    c.margin = -std::abs(value - estimate);
    c.satisfied = c.margin >= -tolerance;
    records.push_back(std::move(c));
  }

  std::vector<CheckRecord> records;

 private:
  Subject x_;
  const ChainOptions& opt_;
  double dw_ = 0.0;
};

// Split an n x n matrix into a 2 x 2 block spec with diagonal blocks of
// sizes floor(n/2) and n - floor(n/2).
inline BlockMatrixSpec halve(const Matrix& s) {
  const std::size_t n = s.rows();
  const std::size_t a = n / 2;
  const std::size_t dims[2] = {a, n - a};
  const std::size_t off[2] = {0, a};
  std::vector<Matrix> blocks;
  for (int bi = 0; bi < 2; ++bi)
    for (int bj = 0; bj < 2; ++bj) {
      Matrix b(dims[bi], dims[bj]);
      for (std::size_t r = 0; r < dims[bi]; ++r)
        for (std::size_t c = 0; c < dims[bj]; ++c) b(r, c) = s(off[bi] + r, off[bj] + c);
      blocks.push_back(std::move(b));
    }
  return BlockMatrixSpec(2, std::move(blocks));
}

inline void run_families(ChainContext& ctx, const ChainOptions& opt) {
  const Subject& x = ctx.subject();
  const Matrix& s = x.s;
  const double dw = ctx.dw();
  const std::vector<Matrix> s_pair{s, x.gram_s};

  auto against_dw = [&](const std::vector<BoundRecord>& recs) {
    for (const auto& b : recs) ctx.add(b, dw);
  };

  if (opt.has("eq1.1")) against_dw(eval_eq1_1(x));
  if (opt.has("kittaneh"))
    for (const auto& b : eval_kittaneh_2_8(s)) ctx.add(b, x.w);
  if (opt.has("lemma4")) {
    const double we = euclid_radius(s_pair, ctx.aux()).value;
    ctx.add_identity("lemma4-identity", "dw", we, dw, opt.identity_tol * std::max(1.0, dw), "S,S*S");
  }
  if (opt.has("lemma5")) {
    const std::vector<std::pair<std::string, std::vector<Matrix>>> tuples{
        {"S", {s}}, {"S,S*S", s_pair}, {"S,S*,S*S", {s, adjoint(s), x.gram_s}}};
    for (const auto& [label, tuple] : tuples)
      for (double p : opt.powers) {
        const double est = gen_radius_p(tuple, 2.0 * p, ctx.aux()).value;
        for (const auto& b : eval_lemma5_2_9(tuple, p)) ctx.add(b, est, label);
      }
  }
  if (opt.has("thm3")) against_dw(eval_thm3_2_10(x));
  if (opt.has("thm4")) against_dw(eval_thm4_2_11(x));
  if (opt.has("rem3")) against_dw(eval_rem3(x));
  if (opt.has("thm5"))
    for (double a : opt.alphas)
      for (double r : opt.thm5_r) against_dw(eval_thm5_2_12(x, a, r));
  if (opt.has("rem5")) against_dw(eval_rem5(x));
  if (opt.has("thm6"))
    for (double a : opt.alphas)
      for (double r : opt.thm6_r) against_dw(eval_thm6_2_15(x, a, r));
  if (opt.has("dwp"))
    for (double p : opt.powers) {
      const double est = p == 1.0 ? dw : gen_radius_p(s_pair, 2.0 * p, ctx.aux()).value;
      for (const auto& b : eval_dwp_sandwich(x, p)) ctx.add(b, est);
    }
  if (opt.has("dwe")) {
    const std::vector<Matrix> tuple{s, adjoint(s)};
    const double est = dw_euclid(tuple, ctx.aux()).value;
    for (const auto& b : eval_dwe_sandwich(tuple, ctx.aux())) ctx.add(b, est, "S,S*");
  }

  const bool blocks = s.rows() >= 2 && (opt.has("eq3.1") || opt.has("thm7") || opt.has("thm8") ||
                                        opt.has("thm9") || opt.has("cor5"));
  if (blocks) {
    const BlockMatrixSpec spec = halve(s);
    auto add_w = [&](ReductionRule rule) {
      ctx.add(BoundRecord{std::string(to_string(rule)) + "-upper", BoundKind::upper,
                          w_block_upper(spec, rule), {}, "w", 1.0},
              x.w, "blocks");
    };
    if (opt.has("eq3.1"))
      for (auto rule : {ReductionRule::eq3_1a, ReductionRule::eq3_1b, ReductionRule::eq3_1c}) add_w(rule);
    if (opt.has("thm7")) add_w(ReductionRule::thm7);
    if (opt.has("thm8"))
      ctx.add(detail::record("thm8-upper", BoundKind::upper, dw_block_upper_thm8(spec)), dw, "blocks");
    if (opt.has("thm9")) {
      const BlockSandwich b = dw_block_sandwich_thm9(spec);
      ctx.add(detail::record("thm9-lower", BoundKind::lower, b.lower), dw, "blocks");
      ctx.add(detail::record("thm9-upper", BoundKind::upper, b.upper), dw, "blocks");
    }
    if (opt.has("cor5")) ctx.add(detail::record("cor5-upper", BoundKind::upper, dw_2x2_cor5(spec)), dw, "blocks");
  }

  if (opt.has("cor1") && std::abs(x.w - x.norm) <= 1e-9 * std::max(1.0, x.norm)) {
    ctx.add_identity("cor1-dw", "dw", x.norm * std::sqrt(1.0 + x.norm * x.norm), dw, 1e-6 * std::max(1.0, dw));
    const double top = lambda_max(x.gram_s);
    CheckRecord c;
    c.id = "cor1-gram";
    c.kind = CheckKind::upper;
    c.target = "lambda_max(S*S)";
    c.bound = x.w * x.w;
    c.estimate = top;
    c.tolerance = 1e-9 * std::max(1.0, c.bound);
    c.margin = c.bound - top;
    c.satisfied = c.margin >= -c.tolerance;
    ctx.records.push_back(std::move(c));
  }
}

inline double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace detail

/// Evaluates each enabled bound family on every matrix against the radius
/// estimates. Results are in input order.
inline ChainReport run_chain(const std::vector<Matrix>& matrices, const ChainOptions& opt = {}) {
  for (const auto& f : opt.families)
    if (std::find(chain_families().begin(), chain_families().end(), f) == chain_families().end())
      throw DomainError("run_chain: unknown bound family '" + f + "'");
  ChainReport report;
  std::map<std::string, std::vector<double>> ratios;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    require_square(matrices[k], "run_chain");
    detail::ChainContext ctx(matrices[k], opt);
    if (!opt.families.empty()) detail::run_families(ctx, opt);
    MatrixReport m{k, matrices[k], ctx.dw(), ctx.subject().w, ctx.subject().norm, std::move(ctx.records), 0};
    for (const auto& c : m.records) {
      if (auto t = c.tightness()) ratios[c.key()].push_back(*t);
      if (!c.satisfied) {
        ++m.violations;
        ++report.violations_by_id[c.id];
      }
    }
    report.violations += m.violations;
    report.results.push_back(std::move(m));
  }
  for (auto& [key, v] : ratios) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    report.aggregate[key] = TightnessStats{v.size(), *lo, detail::median_of(v), *hi};
  }
  return report;
}

// ---------------------------------------------------------------------------
// Single-matrix report

struct BoundsReport {
  Matrix subject;
  double dw_est = 0.0;
  std::vector<CheckRecord> records;
  bool chain_ok = true;
  double slack = 0.0;
};

/// Every single-matrix evaluator at (alpha, r, p), each record compared with
/// the estimate of its own target. Theorem 5 needs r >= 2 and is skipped
/// below that; Theorem 6 is evaluated at r = 1 and at r.
inline BoundsReport bounds_report(const Matrix& s, double alpha = 0.5, double r = 2.0, double p = 1.0,
                                  const ChainOptions& base = {}) {
  detail::check_alpha(alpha);
  if (!(r >= 1.0) || !std::isfinite(r)) throw DomainError("bounds: r must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("bounds: p must be >= 1");
  ChainOptions opt = base;
  opt.families = {"eq1.1", "kittaneh", "lemma4", "lemma5", "thm3", "thm4", "rem3", "thm5", "rem5", "thm6", "dwp"};
  opt.alphas = {alpha};
  opt.thm5_r = r >= 2.0 ? std::vector<double>{r} : std::vector<double>{};
  opt.thm6_r = r == 1.0 ? std::vector<double>{1.0} : std::vector<double>{1.0, r};
  opt.powers = {p};
  detail::ChainContext ctx(s, opt);
  detail::run_families(ctx, opt);
  BoundsReport out{s, ctx.dw(), std::move(ctx.records), true, opt.slack};
  for (const auto& c : out.records) out.chain_ok = out.chain_ok && c.satisfied;
  return out;
}

// ---------------------------------------------------------------------------
// dw(S1 + S2) <= dw(S1) + dw(S2) + dw(S1* S2 + S2* S1)

struct SumProbe {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool satisfied = true;
};

struct SumProbeReport {
  std::vector<SumProbe> pairs;
  std::size_t violations = 0;
  double min_margin = 0.0;
};

/// Every dw is a sphere-ascent lower estimate, so a negative margin on the
/// right-hand side is evidence, not proof.
inline SumProbeReport probe_eq1_2(const std::vector<std::pair<Matrix, Matrix>>& pairs,
                                  const SphereRadiusOptions& opt = {256, 1, 1e-9}, double slack = 1e-6) {
  SumProbeReport out;
  out.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs) {
    require_same_shape(a, b, "probe_eq1_2");
    require_square(a, "probe_eq1_2");
    SumProbe p;
    p.lhs = dw_radius(a + b, opt).value;
    const Matrix cross = multiply(adjoint(a), b) + multiply(adjoint(b), a);
    p.rhs = dw_radius(a, opt).value + dw_radius(b, opt).value + dw_radius(cross, opt).value;
    p.margin = p.rhs - p.lhs;
    p.satisfied = p.margin >= -slack * std::max(1.0, p.lhs);
    if (!p.satisfied) ++out.violations;
    out.min_margin = std::min(out.min_margin, p.margin);
    out.pairs.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printed example values

enum class RowStatus { match, mismatch, logged };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "mismatch";
    case RowStatus::logged: return "logged";
  }
  return "unknown";
}

struct RegressionRow {
  std::string anchor;
  double printed = 0.0;
  double computed = 0.0;
  double delta = 0.0;
  double tolerance = 0.0;
  RowStatus status = RowStatus::match;
  std::string note;
};

struct RegressionReport {
  std::vector<RegressionRow> rows;
  bool ok() const {
    return std::none_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == RowStatus::mismatch; });
  }
};

inline const Matrix& example1() {
  static const Matrix m{{0, 1}, {2, 1}};
  return m;
}
inline const Matrix& example2() {
  static const Matrix m{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  return m;
}
inline const Matrix& nilpotent_example() {
  static const Matrix m{{0, 2}, {0, 0}};
  return m;
}
inline const Matrix& projection_example() {
  static const Matrix m{{1, 0}, {0, 0}};
  return m;
}

/// Recomputes every printed example value. Rows flagged `logged` record a
/// printed number the computation refutes; they never fail the report.
inline RegressionReport paper_regression() {
  RegressionReport rep;
  auto row = [&](std::string anchor, double printed, double computed, std::optional<double> tol = {}) {
    RegressionRow r{std::move(anchor), printed, computed, std::abs(computed - printed), 0.0, RowStatus::match, {}};
    r.tolerance = tol ? *tol : 5e-5 * std::max(1.0, std::abs(printed));
    r.status = r.delta <= r.tolerance ? RowStatus::match : RowStatus::mismatch;
    rep.rows.push_back(std::move(r));
  };
  auto logged = [&](std::string anchor, double printed, double computed, std::string note) {
    RegressionRow r{std::move(anchor), printed, computed, std::abs(computed - printed), 0.0, RowStatus::match, {}};
    r.tolerance = 5e-5 * std::max(1.0, std::abs(printed));
    r.status = r.delta <= r.tolerance ? RowStatus::match : RowStatus::logged;
    r.note = std::move(note);
    rep.rows.push_back(std::move(r));
  };
  const SphereRadiusOptions dw_opt{256, 1, 1e-9};

  {
    const Subject x(example1());
    row("example1 norm", 2.28825, x.norm);
    row("example1 w", 2.08114, x.w);
    row("example1 eq1.1-upper", 5.63449, find_record(eval_eq1_1(x), "eq1.1-upper").radius_value());
    row("example1 thm3-upper", 5.61938, find_record(eval_thm3_2_10(x), "thm3-upper").radius_value());
    row("example1 rem3-upper", 5.59709, find_record(eval_rem3(x), "rem3-upper").radius_value());
  }
  {
    const Subject x(example2());
    row("example2 w", 2.0, x.w, 1e-8);
    row("example2 norm", 2.0, x.norm, 1e-8);
    row("example2 eq1.1-lower", 4.0, find_record(eval_eq1_1(x), "eq1.1-lower").radius_value());
    row("example2 thm4-lower", 4.2426, find_record(eval_thm4_2_11(x), "thm4-lower").radius_value());
    row("example2 thm4-upper1", 4.47214, find_record(eval_thm4_2_11(x), "thm4-upper1").radius_value());
    row("example2 eq1.1-upper", 4.47214, find_record(eval_eq1_1(x), "eq1.1-upper").radius_value());
    row("example2 dw", 4.47214, dw_radius(x.s, dw_opt).value);
  }
  {
    const Subject x(nilpotent_example());
    row("nilpotent thm6-upper", 4.2426, find_record(eval_thm6_2_15(x, 0.5, 1.0), "thm6-upper").radius_value());
    row("nilpotent norm", 2.0, x.norm);
    logged("nilpotent w", 2.0, x.w, "square-zero S has w = ||S||/2");
    logged("nilpotent eq1.1-upper", 2.0 * std::sqrt(5.0), find_record(eval_eq1_1(x), "eq1.1-upper").radius_value(),
           "printed value uses w = 2");
    row("nilpotent dw", 4.0, dw_radius(x.s, dw_opt).value, 1e-4);
  }
  {
    const Subject x(projection_example());
    row("projection norm", 1.0, x.norm, 1e-9);
    row("projection w", 1.0, x.w, 1e-9);
    row("projection dw", std::numbers::sqrt2, dw_radius(x.s, dw_opt).value, 1e-6);
  }
  return rep;
}

}  // namespace dwr
