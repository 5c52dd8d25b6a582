#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace dwr;

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;
const SphereRadiusOptions tight{256, 1, 1e-9};

const Matrix ex1{{0, 1}, {2, 1}};
const Matrix ex2{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
const Matrix square_zero{{0, 2}, {0, 0}};
const Matrix proj{{1, 0}, {0, 0}};

double dw_at(const Matrix& s, std::span<const Complex> x) {
  const auto y = mat_vec(s, x);
  const double r = std::pow(norm2(y), 2);
  return std::sqrt(std::norm(dot(x, y)) + r * r);
}

// Mixed corpus: every ensemble at dims 2..5.
std::vector<Matrix> corpus(std::size_t per_kind, std::uint64_t seed) {
  std::vector<Matrix> out;
  for (EnsembleKind k : all_ensembles) {
    for (std::size_t i = 0; i < per_kind; ++i) {
      Rng rng(mix_seed(seed, out.size()));
      out.push_back(generate_one(k, 2 + i % 4, rng));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(NumericalRadius, Examples) {
  EXPECT_NEAR(numerical_radius(ex1).value, 2.08114, 5e-5);
  EXPECT_NEAR(numerical_radius(Matrix{{0, 1}, {0, 0}}).value, 0.5, 1e-12);
  EXPECT_NEAR(numerical_radius(ex2).value, 2.0, 1e-10);
  EXPECT_NEAR(numerical_radius(Matrix::identity(3)).value, 1.0, 1e-14);
  EXPECT_EQ(numerical_radius(Matrix::zero(2, 2)).value, 0.0);
}

TEST(NumericalRadius, CertificateReproducesValue) {
  Rng rng(31);
  for (int k = 0; k < 50; ++k) {
    const Matrix s = ginibre(rng, 1 + k % 6, 1 + k % 6);
    const RadiusResult r = numerical_radius(s);
    ASSERT_TRUE(r.has_angle());
    EXPECT_EQ(r.method, Method::rotation_scan);
    EXPECT_GE(r.angle(), 0.0);
    EXPECT_LT(r.angle(), 2 * std::numbers::pi);
    EXPECT_NEAR(rotated_lambda_max(s, r.angle()), r.value, 1e-12 * std::max(1.0, r.value));
    const auto x = numerical_radius_vector(s, r.angle());
    EXPECT_NEAR(std::abs(quadratic_form(s, x)), r.value, 1e-9 * std::max(1.0, r.value));
  }
}

TEST(NumericalRadius, HermitianUsesSpectrum) {
  const RadiusResult r = numerical_radius(Matrix::diagonal({-3, 1}));
  EXPECT_DOUBLE_EQ(r.value, 3.0);
  EXPECT_DOUBLE_EQ(r.angle(), std::numbers::pi);
}

TEST(NumericalRadius, NormSandwich) {
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const Matrix s = ginibre(rng, 2 + k % 5, 2 + k % 5);
    const double w = numerical_radius(s).value, n = operator_norm(s);
    EXPECT_LE(w, n + 1e-10);
    EXPECT_GE(w, 0.5 * n - 1e-10);
  }
}

TEST(NumericalRadius, RejectsNonSquare) { EXPECT_THROW(numerical_radius(Matrix(2, 3)), DimensionError); }

// ---------------------------------------------------------------------------

TEST(DavisWielandt, Examples) {
  EXPECT_NEAR(dw_radius(proj, tight).value, sqrt2, 1e-9);
  EXPECT_NEAR(dw_radius(square_zero, tight).value, 4.0, 1e-9);
  EXPECT_NEAR(dw_radius(ex2, tight).value, 2.0 * std::sqrt(5.0), 1e-8);
  EXPECT_EQ(dw_radius(Matrix::zero(3, 3)).value, 0.0);
}

TEST(DavisWielandt, Errors) {
  EXPECT_THROW(dw_radius(Matrix(2, 3)), DimensionError);
  EXPECT_THROW(dw_radius(ex1, {0, 1, 1e-6}), DomainError);
}

TEST(DavisWielandt, CertificateIsPhaseNormalizedUnitVector) {
  Rng rng(33);
  for (int k = 0; k < 30; ++k) {
    const Matrix s = ginibre(rng, 2 + k % 4, 2 + k % 4);
    const RadiusResult r = dw_radius(s);
    ASSERT_FALSE(r.has_angle());
    const auto& x = r.vector();
    EXPECT_NEAR(norm2(x), 1.0, 1e-12);
    const auto first = std::find_if(x.begin(), x.end(), [](Complex z) { return std::abs(z) > 1e-12; });
    ASSERT_NE(first, x.end());
    EXPECT_EQ(first->imag(), 0.0);
    EXPECT_GT(first->real(), 0.0);
    EXPECT_NEAR(dw_at(s, x), r.value, 1e-12 * std::max(1.0, r.value));
    EXPECT_EQ(r.restarts_used, 64 + 2);
  }
}

TEST(DavisWielandt, DeterministicPerSeed) {
  Rng rng(34);
  const Matrix s = ginibre(rng, 4, 4);
  const RadiusResult a = dw_radius(s, {16, 5, 1e-8}), b = dw_radius(s, {16, 5, 1e-8});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.vector(), b.vector());
}

TEST(DavisWielandt, SandwichOnCorpus) {
  for (const Matrix& s : corpus(6, 41)) {
    const double w = numerical_radius(s).value, n = operator_norm(s);
    const double dw = dw_radius(s).value;
    const double tol = 1e-6 * std::max(1.0, dw);
    EXPECT_GE(dw, std::max(w, n * n) - tol);
    EXPECT_LE(dw, std::sqrt(w * w + n * n * n * n) + tol);
  }
}

TEST(DavisWielandt, UnitarySimilarityInvariance) {
  Rng rng(35);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 4;
    const Matrix s = ginibre(rng, n, n), u = haar_unitary(rng, n);
    const Matrix t = adjoint(u) * s * u;
    EXPECT_NEAR(numerical_radius(t).value, numerical_radius(s).value, 1e-8);
    EXPECT_NEAR(dw_radius(t, tight).value, dw_radius(s, tight).value, 1e-6);
  }
}

TEST(DavisWielandt, CartesianPairIdentity) {
  // w_e(S, S*S) is dw(S) by definition of both suprema.
  for (const Matrix& s : corpus(6, 42)) {
    const double dw = dw_radius(s, tight).value;
    const double we = euclid_radius({s, gram(s)}, tight).value;
    EXPECT_NEAR(we, dw, 1e-5 * std::max(1.0, dw));
  }
}

TEST(DavisWielandt, ProjectionsAttainSqrt2TimesW) {
  for (std::size_t k = 0; k < 30; ++k) {
    Rng rng(mix_seed(43, k));
    const Matrix p = generate_one(EnsembleKind::projection, 2 + k % 5, rng);
    EXPECT_NEAR(dw_radius(p, tight).value, sqrt2 * numerical_radius(p).value, 1e-6);
  }
}

TEST(DavisWielandt, NonNormalGapHasEitherSign) {
  // Reported, not asserted: the sign of dw(S) - sqrt2 w(S) off projections.
  int above = 0, below = 0;
  for (std::size_t k = 0; k < 40; ++k) {
    Rng rng(mix_seed(44, k));
    const Matrix s = (k % 2 ? 0.3 : 1.5) * ginibre(rng, 3, 3);
    const double gap = dw_radius(s).value - sqrt2 * numerical_radius(s).value;
    (gap > 0 ? above : below)++;
  }
  RecordProperty("above", above);
  RecordProperty("below", below);
  EXPECT_EQ(above + below, 40);
}

TEST(DavisWielandt, MaximalNumericalRadiusCase) {
  // w = ||S|| forces dw = ||S|| sqrt(1 + ||S||^2) and S*S <= w^2.
  int seen = 0;
  for (EnsembleKind kind : {EnsembleKind::hermitian, EnsembleKind::normal, EnsembleKind::unitary}) {
    for (std::size_t k = 0; k < 10; ++k) {
      Rng rng(mix_seed(45, k));
      const Matrix s = generate_one(kind, 2 + k % 4, rng);
      const double w = numerical_radius(s).value, n = operator_norm(s);
      if (std::abs(w - n) > 1e-9) continue;
      ++seen;
      EXPECT_NEAR(dw_radius(s, tight).value, n * std::sqrt(1 + n * n), 1e-6);
      EXPECT_LE(lambda_max(gram(s)), w * w + 1e-9);
    }
  }
  EXPECT_EQ(seen, 30);
}

// ---------------------------------------------------------------------------

TEST(Oracle, Examples) {
  EXPECT_NEAR(dw_oracle_2x2(proj), sqrt2, 1e-4);
  EXPECT_NEAR(dw_oracle_2x2(square_zero), 4.0, 1e-4);
  EXPECT_EQ(dw_oracle_2x2(Matrix::zero(2, 2)), 0.0);
}

TEST(Oracle, Errors) {
  EXPECT_THROW(dw_oracle_2x2(Matrix(3, 3)), DimensionError);
  EXPECT_THROW(dw_oracle_2x2(proj, 32), DomainError);
}

TEST(Oracle, AgreesWithAscentOnRandomTwoByTwo) {
  Rng rng(46);
  for (int k = 0; k < 200; ++k) {
    const Matrix s = ginibre(rng, 2, 2);
    EXPECT_NEAR(dw_radius(s, tight).value, dw_oracle_2x2(s), 1e-3);
  }
}

// ---------------------------------------------------------------------------

TEST(EuclideanRadius, Examples) {
  EXPECT_NEAR(euclid_radius({ex1, ex1}, tight).value, 2.94318, 1e-3);
  EXPECT_NEAR(euclid_radius({ex1, ex1}, tight).value, sqrt2 * numerical_radius(ex1).value, 1e-8);
  const Matrix z = Matrix::zero(2, 2);
  EXPECT_EQ(euclid_radius({z, z, z}).value, 0.0);
  EXPECT_NEAR(euclid_radius({proj, gram(proj)}, tight).value, sqrt2, 1e-9);
}

TEST(EuclideanRadius, Errors) {
  EXPECT_THROW(euclid_radius({}), DomainError);
  EXPECT_THROW(euclid_radius({Matrix(2, 2), Matrix(3, 3)}), DimensionError);
  EXPECT_THROW(euclid_radius({Matrix(2, 3)}), DimensionError);
}

TEST(EuclideanRadius, DominatesEachMember) {
  Rng rng(47);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    const double we = euclid_radius({a, b}).value;
    EXPECT_GE(we, std::max(numerical_radius(a).value, numerical_radius(b).value) - 1e-6);
  }
}

TEST(EuclideanRadius, Homogeneity) {
  Rng rng(48);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    const Complex lambda = 2.0 * rng.complex_normal();
    const double base = euclid_radius({a, b}, tight).value;
    EXPECT_NEAR(euclid_radius({lambda * a, lambda * b}, tight).value, std::abs(lambda) * base,
                1e-8 * std::max(1.0, std::abs(lambda) * base));
  }
}

TEST(EuclideanRadius, Subadditivity) {
  Rng rng(49);
  for (int k = 0; k < 20; ++k) {
    const Matrix a1 = ginibre(rng, 3, 3), a2 = ginibre(rng, 3, 3);
    const Matrix b1 = ginibre(rng, 3, 3), b2 = ginibre(rng, 3, 3);
    EXPECT_LE(euclid_radius({a1 + b1, a2 + b2}, tight).value,
              euclid_radius({a1, a2}, tight).value + euclid_radius({b1, b2}, tight).value + 1e-7);
  }
}

TEST(EuclideanRadius, AdjointInvariance) {
  Rng rng(50);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    EXPECT_NEAR(euclid_radius({adjoint(a), adjoint(b)}, tight).value, euclid_radius({a, b}, tight).value, 1e-6);
  }
}

TEST(EuclideanRadius, CongruenceProbe) {
  // Observed ratio w_e(X*T_iX) / (||X|| w_e(T_i)); reported only.
  Rng rng(51);
  double lo = 1e300, hi = 0.0, hi_sq = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Matrix x = ginibre(rng, 3, 3), a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    const double nx = operator_norm(x);
    const double lhs = euclid_radius({adjoint(x) * a * x, adjoint(x) * b * x}).value;
    const double base = euclid_radius({a, b}).value;
    lo = std::min(lo, lhs / (nx * base));
    hi = std::max(hi, lhs / (nx * base));
    hi_sq = std::max(hi_sq, lhs / (nx * nx * base));
  }
  RecordProperty("ratio_norm_min", std::to_string(lo));
  RecordProperty("ratio_norm_max", std::to_string(hi));
  RecordProperty("ratio_norm_squared_max", std::to_string(hi_sq));
  EXPECT_LE(hi_sq, 1.0 + 1e-6);
}

TEST(EuclideanRadius, GramCogramProbe) {
  // Observed gap between w_e(T_i*T_i) and w_e(T_iT_i*) for pairs; reported only.
  Rng rng(52);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    const double g = euclid_radius({gram(a), gram(b)}).value;
    const double c = euclid_radius({a * adjoint(a), b * adjoint(b)}).value;
    worst = std::max(worst, std::abs(g - c) / std::max(g, c));
  }
  RecordProperty("relative_gap_max", std::to_string(worst));
  SUCCEED();
}

// ---------------------------------------------------------------------------

TEST(GeneralizedRadius, Examples) {
  EXPECT_NEAR(gen_radius_p({ex1, gram(ex1)}, 2.0, tight).value, dw_radius(ex1, tight).value, 1e-8);
  EXPECT_NEAR(gen_radius_p({ex1}, 1.0, tight).value, numerical_radius(ex1).value, 1e-8);
  EXPECT_NEAR(gen_radius_p({square_zero, gram(square_zero)}, 4.0, tight).value, 4.0, 1e-8);
}

TEST(GeneralizedRadius, SecondPowerMatchesEuclidean) {
  Rng rng(53);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    EXPECT_NEAR(gen_radius_p({a, b}, 2.0).value, euclid_radius({a, b}).value, 2e-6);
  }
}

TEST(GeneralizedRadius, Errors) {
  EXPECT_THROW(gen_radius_p({ex1}, 0.5), DomainError);
  EXPECT_THROW(gen_radius_p({}, 2.0), DomainError);
  EXPECT_THROW(gen_radius_p({ex1, ex2}, 2.0), DimensionError);
}

// ---------------------------------------------------------------------------

TEST(EuclideanDavisWielandt, Examples) {
  EXPECT_NEAR(dw_euclid({ex1}, tight).value, dw_radius(ex1, tight).value, 1e-8);
  EXPECT_NEAR(dw_euclid({ex1, ex1}, tight).value, sqrt2 * dw_radius(ex1, tight).value, 1e-8);
  EXPECT_EQ(dw_euclid({Matrix::zero(2, 2)}).value, 0.0);
  EXPECT_THROW(dw_euclid({}), DomainError);
}

TEST(EuclideanDavisWielandt, MatchesInterleavedTuple) {
  Rng rng(54);
  for (int k = 0; k < 20; ++k) {
    const Matrix a = ginibre(rng, 3, 3), b = ginibre(rng, 3, 3);
    EXPECT_NEAR(dw_euclid({a, b}, tight).value, euclid_radius({a, gram(a), b, gram(b)}, tight).value,
                2e-6 * std::max(1.0, dw_euclid({a, b}, tight).value));
  }
}

// ---------------------------------------------------------------------------

namespace {

// Relative error between an objective's gradient and central differences in
// the 2n real coordinates.
double gradient_error(const SphereObjective& f, std::span<const Complex> x) {
  std::vector<Complex> g;
  f(x, &g);
  const double h = 1e-6;
  double num = 0.0, den = 0.0;
  std::vector<Complex> y(x.begin(), x.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    for (int part = 0; part < 2; ++part) {
      const Complex step = part == 0 ? Complex(h, 0) : Complex(0, h);
      y[k] = x[k] + step;
      const double fp = f(y, nullptr);
      y[k] = x[k] - step;
      const double fm = f(y, nullptr);
      y[k] = x[k];
      const double fd = (fp - fm) / (2 * h);
      const double an = part == 0 ? g[k].real() : g[k].imag();
      num += (fd - an) * (fd - an);
      den += an * an;
    }
  }
  return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

}  // namespace

TEST(Ascent, GradientsMatchFiniteDifferences) {
  Rng rng(55);
  for (int m = 0; m < 20; ++m) {
    const std::size_t n = 2 + m % 4;
    const Matrix s = ginibre(rng, n, n), t = ginibre(rng, n, n);
    const std::vector<SphereObjective> objectives{dw_objective(s), power_sum_objective({s, t}, 2.0),
                                                  power_sum_objective({s, t}, 4.0),
                                                  dw_euclid_objective({s, t})};
    for (int k = 0; k < 25; ++k) {
      const auto x = random_unit_vector(rng, n);
      for (const auto& f : objectives) ASSERT_LT(gradient_error(f, x), 1e-5);
    }
  }
}

TEST(Ascent, RejectsBadStarts) {
  EXPECT_THROW(sphere_ascent(dw_objective(ex1), 2, {0, 1, 1e-6, 100}), DomainError);
  const std::vector<UnitVector> bad{UnitVector(3, Complex(1))};
  EXPECT_THROW(sphere_ascent(dw_objective(ex1), 2, {1, 1, 1e-6, 100}, bad), DimensionError);
}

TEST(Ascent, PhaseNormalization) {
  UnitVector x{Complex(0, 0), Complex(0, 1), Complex(1, 0)};
  normalize_phase(x);
  EXPECT_NEAR(x[1].real(), 1.0, 1e-15);
  EXPECT_EQ(x[1].imag(), 0.0);
  EXPECT_NEAR(x[2].imag(), -1.0, 1e-15);
}

// ---------------------------------------------------------------------------

TEST(Shell, IdentityAndZero) {
  for (const auto& p : sample_shell(Matrix::identity(3), 100, 7)) {
    EXPECT_NEAR(p.re_z, 1.0, 1e-14);
    EXPECT_NEAR(p.im_z, 0.0, 1e-14);
    EXPECT_NEAR(p.r, 1.0, 1e-14);
  }
  for (const auto& p : sample_shell(Matrix::zero(2, 2), 10, 7)) {
    EXPECT_EQ(p.re_z, 0.0);
    EXPECT_EQ(p.im_z, 0.0);
    EXPECT_EQ(p.r, 0.0);
  }
}

TEST(Shell, SamplesApproachRadiusFromBelow) {
  const double oracle = dw_oracle_2x2(ex1);
  double best = 0.0;
  for (const auto& p : sample_shell(ex1, 100000, 7)) {
    best = std::max(best, std::sqrt(p.re_z * p.re_z + p.im_z * p.im_z + p.r * p.r));
    // |<Sx,x>|^2 <= ||Sx||^2 on the unit sphere.
    ASSERT_LE(p.re_z * p.re_z + p.im_z * p.im_z, p.r + 1e-12);
  }
  EXPECT_LE(best, oracle + 1e-6);
  EXPECT_GE(best, oracle - 0.05);
}

TEST(Shell, DeterministicAndValidated) {
  const auto a = sample_shell(ex1, 50, 3), b = sample_shell(ex1, 50, 3);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].r, b[k].r);
  EXPECT_THROW(sample_shell(ex1, 0, 3), DomainError);
  EXPECT_THROW(sample_shell(Matrix(2, 3), 1, 3), DimensionError);
}
