#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "test_support.hpp"

using namespace dwr;

namespace {

// Bounds with explicit counterexamples (see the bounds and blockops suites).
const std::set<std::string> refuted{"thm3-lower", "dwp-lower", "lemma5-lower",
                                    "thm8-upper", "thm9-upper", "cor5-upper"};

ChainOptions quick() {
  ChainOptions o;
  o.restarts = 64;
  o.aux_restarts = 32;
  return o;
}

std::vector<std::string> sound_families() {
  std::vector<std::string> f;
  for (const auto& name : chain_families())
    if (name != "thm3" && name != "dwp" && name != "lemma5" && name != "thm8" && name != "thm9" && name != "cor5")
      f.push_back(name);
  return f;
}

}  // namespace

TEST(Ensembles, NamesRoundTrip) {
  for (EnsembleKind k : all_ensembles) EXPECT_EQ(parse_ensemble(to_string(k)), k);
  EXPECT_STREQ(to_string(EnsembleKind::shifted_projection), "shifted-projection");
  EXPECT_FALSE(parse_ensemble("wishart").has_value());
}

TEST(Ensembles, DefiningProperties) {
  for (std::size_t n : {1u, 2u, 3u, 6u}) {
    for (EnsembleKind kind : all_ensembles) {
      for (const Matrix& s : generate({kind, n, 5, 17})) {
        ASSERT_EQ(s.rows(), n);
        ASSERT_EQ(s.cols(), n);
        switch (kind) {
          case EnsembleKind::hermitian: EXPECT_EQ(hermitian_defect(s), 0.0); break;
          case EnsembleKind::unitary:
            EXPECT_LE(frobenius_norm(gram(s) - Matrix::identity(n)), 1e-12);
            break;
          case EnsembleKind::normal:
            EXPECT_LE(frobenius_norm(gram(s) - s * adjoint(s)), 1e-12 * std::max(1.0, frobenius_norm(gram(s))));
            break;
          case EnsembleKind::projection:
            EXPECT_LE(frobenius_norm(s * s - s), 1e-12);
            EXPECT_EQ(hermitian_defect(s), 0.0);
            EXPECT_GE(std::round(trace(s).real()), 1.0);
            EXPECT_LE(std::round(trace(s).real()), std::max<double>(1.0, n - 1.0));
            break;
          case EnsembleKind::nilpotent: {
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j <= i; ++j) EXPECT_EQ(s(i, j), Complex(0));
            Matrix p = s;
            for (std::size_t k = 1; k < n; ++k) p = p * s;
            EXPECT_EQ(max_abs(p), 0.0);
            break;
          }
          case EnsembleKind::shifted_projection: {
            // S = P + mu I: the skew part is scalar and H(S) has spectrum {Re mu, Re mu + 1}.
            const Matrix skew = s - adjoint(s);
            EXPECT_LE(frobenius_norm(skew - skew(0, 0) * Matrix::identity(n)), 1e-12);
            if (n > 1) {
              const HermEigen e = herm_eig(hermitian_part(s));
              EXPECT_NEAR(e.max() - e.min(), 1.0, 1e-12);
            }
            break;
          }
          default: break;
        }
      }
    }
  }
}

TEST(Ensembles, NilpotentTwoByTwoShape) {
  const Matrix s = generate({EnsembleKind::nilpotent, 2, 1, 3}).front();
  EXPECT_EQ(s(0, 0), Complex(0));
  EXPECT_EQ(s(1, 0), Complex(0));
  EXPECT_EQ(s(1, 1), Complex(0));
  EXPECT_NE(s(0, 1), Complex(0));
}

TEST(Ensembles, Deterministic) {
  for (EnsembleKind kind : all_ensembles) {
    const auto a = generate({kind, 4, 10, 99}), b = generate({kind, 4, 10, 99});
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k], b[k]);
    EXPECT_NE(generate({kind, 4, 1, 100}).front(), a.front());
  }
}

TEST(Ensembles, ConfigLimits) {
  EXPECT_THROW(generate({EnsembleKind::ginibre, 0, 1, 1}), DomainError);
  EXPECT_THROW(generate({EnsembleKind::ginibre, 65, 1, 1}), DomainError);
  EXPECT_THROW(generate({EnsembleKind::ginibre, 2, 0, 1}), DomainError);
  EXPECT_THROW(generate({EnsembleKind::ginibre, 2, 100001, 1}), DomainError);
  EXPECT_NO_THROW(generate({EnsembleKind::ginibre, 64, 1, 1}));
}

// ---------------------------------------------------------------------------

TEST(Chain, ExampleCorpus) {
  const auto rep = run_chain({example1(), example2(), nilpotent_example()});
  ASSERT_EQ(rep.results.size(), 3u);
  for (const auto& [id, count] : rep.violations_by_id)
    EXPECT_TRUE(refuted.contains(id)) << id << " violated " << count << " times";
  for (const auto& m : rep.results)
    for (const auto& c : m.records)
      if (c.kind == CheckKind::identity) { EXPECT_TRUE(c.satisfied) << c.key(); }
  EXPECT_NEAR(rep.results[1].dw_est, 2 * std::sqrt(5.0), 1e-8);
  EXPECT_NEAR(rep.results[2].dw_est, 4.0, 1e-8);
}

TEST(Chain, SoundFamiliesHoldOnGinibre) {
  ChainOptions opt = quick();
  opt.families = sound_families();
  const auto rep = run_chain(generate({EnsembleKind::ginibre, 4, 40, 7}), opt);
  EXPECT_EQ(rep.violations, 0u);
  for (const auto& [id, count] : rep.violations_by_id) ADD_FAILURE() << id << ": " << count;
}

TEST(Chain, ViolationsConfinedToRefutedBoundsAcrossEnsembles) {
  std::map<std::string, std::size_t> seen;
  for (EnsembleKind kind : all_ensembles) {
    for (std::size_t dim = 2; dim <= 6; dim += 2) {
      const auto rep = run_chain(generate({kind, dim, 4, 11}), quick());
      for (const auto& [id, count] : rep.violations_by_id) {
        EXPECT_TRUE(refuted.contains(id)) << to_string(kind) << " dim " << dim << ": " << id;
        seen[id] += count;
      }
    }
  }
  for (const auto& [id, count] : seen) RecordProperty(id, static_cast<int>(count));
}

TEST(Chain, EmptyFamilySetGivesEmptyRecords) {
  ChainOptions opt = quick();
  opt.families.clear();
  const auto rep = run_chain({example1()}, opt);
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_TRUE(rep.results[0].records.empty());
  EXPECT_TRUE(rep.aggregate.empty());
  EXPECT_EQ(rep.violations, 0u);
}

TEST(Chain, UnknownFamilyRejected) {
  ChainOptions opt = quick();
  opt.families = {"eq1.1", "nonsense"};
  EXPECT_THROW(run_chain({example1()}, opt), DomainError);
}

TEST(Chain, BitIdenticalAcrossRuns) {
  const auto mats = generate({EnsembleKind::normal, 3, 5, 5});
  const auto a = run_chain(mats, quick()), b = run_chain(mats, quick());
  const Json cfg{{"seed", 5}};
  EXPECT_EQ(to_canonical_json(chain_report_to_json(a, cfg)), to_canonical_json(chain_report_to_json(b, cfg)));
}

TEST(Chain, ProjectionQuadraticUpperIsTight) {
  const auto rep = run_chain(generate({EnsembleKind::projection, 3, 50, 1}), [] {
    ChainOptions o;
    o.families = {"thm3"};
    return o;
  }());
  const auto& stats = rep.aggregate.at("thm3-upper");
  EXPECT_EQ(stats.count, 50u);
  EXPECT_NEAR(stats.min, 1.0, 1e-6);
  EXPECT_NEAR(stats.max, 1.0, 1e-6);
}

TEST(Chain, CheckKeysCarryParameters) {
  ChainOptions opt = quick();
  opt.families = {"thm6"};
  const auto rep = run_chain({example1()}, opt);
  std::set<std::string> keys;
  for (const auto& c : rep.results[0].records) keys.insert(c.key());
  EXPECT_EQ(keys.size(), rep.results[0].records.size());
}

// ---------------------------------------------------------------------------

TEST(BoundsReport, IdentityIsInsideWindow) {
  const auto rep = bounds_report(Matrix::identity(2));
  EXPECT_TRUE(rep.chain_ok);
  EXPECT_NEAR(rep.dw_est, std::numbers::sqrt2, 1e-9);
  for (const auto& c : rep.records) {
    if (c.id == "eq1.1-lower") { EXPECT_NEAR(c.bound, 1.0, 1e-14); }
    if (c.id == "eq1.1-upper") { EXPECT_NEAR(c.bound, std::numbers::sqrt2, 1e-14); }
  }
}

TEST(BoundsReport, ParameterValidation) {
  EXPECT_THROW(bounds_report(example1(), 2.0), DomainError);
  EXPECT_THROW(bounds_report(example1(), 0.5, 0.5), DomainError);
  EXPECT_THROW(bounds_report(example1(), 0.5, 2.0, 0.0), DomainError);
}

// ---------------------------------------------------------------------------

TEST(SumProbe, Examples) {
  const Matrix s{{0, 1}, {2, 1}};
  const Matrix p{{1, 0}, {0, 0}};
  const auto rep = probe_eq1_2({{s, Matrix::zero(2, 2)}, {p, p}});
  ASSERT_EQ(rep.pairs.size(), 2u);
  EXPECT_GE(rep.pairs[0].margin, -1e-9);
  EXPECT_GE(rep.pairs[1].margin, 0.0);
  EXPECT_EQ(rep.violations, 0u);
}

TEST(SumProbe, RandomPairs) {
  std::vector<std::pair<Matrix, Matrix>> pairs;
  Rng rng(81);
  for (int k = 0; k < 100; ++k) pairs.emplace_back(ginibre(rng, 3, 3), ginibre(rng, 3, 3));
  const auto rep = probe_eq1_2(pairs, {64, 1, 1e-9});
  EXPECT_EQ(rep.violations, 0u);
  EXPECT_THROW(probe_eq1_2({{Matrix(2, 2), Matrix(3, 3)}}), DimensionError);
}

// ---------------------------------------------------------------------------

TEST(Regression, AllRowsWithinTolerance) {
  const auto rep = paper_regression();
  EXPECT_TRUE(rep.ok());
  std::size_t logged = 0;
  for (const auto& r : rep.rows) {
    EXPECT_NE(r.status, RowStatus::mismatch) << r.anchor << " computed " << r.computed;
    logged += r.status == RowStatus::logged;
  }
  EXPECT_EQ(logged, 2u);
}

TEST(Regression, SquareZeroRadiusIsHalfTheNorm) {
  const auto rep = paper_regression();
  const auto it = std::find_if(rep.rows.begin(), rep.rows.end(), [](const auto& r) { return r.anchor == "nilpotent w"; });
  ASSERT_NE(it, rep.rows.end());
  EXPECT_EQ(it->status, RowStatus::logged);
  EXPECT_NEAR(it->computed, 1.0, 1e-12);
}

TEST(Regression, ExampleCounts) {
  const auto rep = paper_regression();
  auto count = [&](const std::string& prefix) {
    return std::count_if(rep.rows.begin(), rep.rows.end(),
                         [&](const auto& r) { return r.anchor.rfind(prefix, 0) == 0; });
  };
  EXPECT_EQ(count("example1 "), 5);
  EXPECT_GE(count("example2 "), 3);
  EXPECT_EQ(count("projection "), 3);
}
