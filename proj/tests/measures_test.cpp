#include <algorithm>
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "divinfo/errors.hpp"
#include "divinfo/measures.hpp"
#include "divinfo/random.hpp"
#include "divinfo/verify.hpp"
#include "oracles.hpp"

namespace divinfo {
namespace {

const Distribution kSkewed{0.7, 0.2, 0.1};
constexpr double kSkewedDivergence = 0.7492725295239783;  // 0.7 log2 2.1
constexpr double kSkewedRelEntropy = 0.4281828512741166;  // log2 3 - H

Distribution shifted(const Distribution& p, std::size_t by) {
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[(i + by) % p.size()];
  return Distribution(v);
}

TEST(Distribution, ValidatesEntriesAndSum) {
  EXPECT_THROW(Distribution({0.5, 0.3}), InvalidDistribution);
  EXPECT_THROW(Distribution({1.2, -0.2}), InvalidDistribution);
  EXPECT_THROW(Distribution(std::vector<double>{}), InvalidDistribution);
  EXPECT_NO_THROW(Distribution({0.5, 0.5 + 5e-10}));
  const Distribution normalised(std::vector<double>{2.0, 6.0}, true);
  EXPECT_DOUBLE_EQ(normalised[0], 0.25);
  EXPECT_DOUBLE_EQ(normalised[1], 0.75);
}

TEST(Distribution, Uniform) {
  EXPECT_EQ(Distribution::uniform(2), Distribution({0.5, 0.5}));
  EXPECT_EQ(Distribution::uniform(4), Distribution({0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(Distribution::uniform(1), Distribution({1.0}));
  EXPECT_THROW(Distribution::uniform(0), InvalidArgument);
}

TEST(Event, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Event(std::vector<std::size_t>{}), InvalidArgument);
  EXPECT_THROW(Event({1, 1}), InvalidArgument);
}

TEST(Ensemble, RequiresMatchingShapes) {
  EXPECT_THROW(Ensemble(Distribution{0.5, 0.5}, {Distribution{1.0, 0.0}}), DimensionMismatch);
  EXPECT_THROW(Ensemble(Distribution{0.5, 0.5}, {Distribution{1.0, 0.0}, kSkewed}),
               DimensionMismatch);
}

TEST(SortDescending, Examples) {
  EXPECT_EQ(sort_descending(Distribution{0.1, 0.7, 0.2}), Distribution({0.7, 0.2, 0.1}));
  EXPECT_EQ(sort_descending(Distribution{0.5, 0.5}), Distribution({0.5, 0.5}));
  EXPECT_EQ(sort_descending(Distribution::uniform(3)), Distribution::uniform(3));
}

TEST(Entropy, Examples) {
  EXPECT_DOUBLE_EQ(entropy(Distribution::uniform(2)), 1.0);
  EXPECT_DOUBLE_EQ(entropy(Distribution{1.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(entropy(Distribution{0.5, 0.25, 0.25}), 1.5);
}

TEST(RelativeEntropy, Examples) {
  EXPECT_EQ(relative_entropy(kSkewed, kSkewed).value(), 0.0);
  EXPECT_DOUBLE_EQ(relative_entropy(Distribution::point_mass(4), Distribution::uniform(4)).value(), 2.0);
  EXPECT_NEAR(relative_entropy(Distribution{0.5, 0.5}, Distribution{0.25, 0.75}).value(),
              0.20751874963942185, 1e-6);
}

TEST(RelativeEntropy, InfiniteOnlyWhenSupportEscapes) {
  EXPECT_TRUE(relative_entropy(Distribution{0.5, 0.5}, Distribution{1.0, 0.0}).is_infinite());
  EXPECT_TRUE(relative_entropy(Distribution{1.0, 0.0}, Distribution{0.5, 0.5}).is_finite());
  EXPECT_THROW(relative_entropy(kSkewed, Distribution::uniform(2)), DimensionMismatch);
}

TEST(ProbabilityOf, Examples) {
  EXPECT_DOUBLE_EQ(probability_of(kSkewed, Event{0}), 0.7);
  EXPECT_DOUBLE_EQ(probability_of(kSkewed, Event{0, 1, 2}), 1.0);
  EXPECT_NEAR(probability_of(kSkewed, Event{1, 2}), 0.3, 1e-15);
  EXPECT_THROW(probability_of(kSkewed, Event{3}), InvalidArgument);
}

TEST(DivergenceExact, Examples) {
  EXPECT_EQ(divergence_exact(kSkewed, kSkewed).value(), 0.0);
  EXPECT_DOUBLE_EQ(divergence_exact(Distribution{1.0, 0.0}, Distribution::uniform(2)).value(), 1.0);
  EXPECT_NEAR(divergence_exact(kSkewed, Distribution::uniform(3)).value(), kSkewedDivergence, 1e-12);
}

TEST(DivergenceExact, ErrorsAndInfinity) {
  EXPECT_TRUE(divergence_exact(Distribution{0.5, 0.5}, Distribution{1.0, 0.0}).is_infinite());
  EXPECT_THROW(divergence_exact(Distribution::uniform(25), Distribution::uniform(25)),
               TooLargeForExhaustive);
  EXPECT_THROW(divergence_exact(kSkewed, Distribution::uniform(4)), DimensionMismatch);
}

TEST(DivergenceExact, MatchesDirectSubsetEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.index(1, 10);
    const auto p = verify::random_sparse_distribution(n, rng);
    const auto q = verify::random_distribution(n, rng);
    EXPECT_NEAR(divergence_exact(p, q).value(), oracle::divergence_by_subsets(p.values(), q.values()),
                1e-12);
  }
}

TEST(DivergenceExact, LargestSupportRuns) {
  const auto u = Distribution::uniform(kMaxExhaustiveSupport);
  EXPECT_NEAR(divergence_exact(Distribution::point_mass(kMaxExhaustiveSupport), u).value(),
              std::log2(24.0), 1e-12);
}

TEST(DivergenceUniform, Examples) {
  EXPECT_EQ(divergence_uniform(Distribution::uniform(7)), 0.0);
  for (std::size_t n : {2, 5, 64, 1000}) {
    EXPECT_NEAR(divergence_uniform(Distribution::point_mass(n, n / 2)), std::log2(double(n)), 1e-12);
  }
  EXPECT_NEAR(divergence_uniform(kSkewed), kSkewedDivergence, 1e-12);
}

TEST(Majorizes, Examples) {
  EXPECT_TRUE(majorizes(Distribution{1.0, 0.0}, Distribution{0.5, 0.5}));
  EXPECT_FALSE(majorizes(Distribution{0.6, 0.2, 0.2}, Distribution{0.5, 0.4, 0.1}));
  EXPECT_THROW(majorizes(kSkewed, Distribution::uniform(2)), DimensionMismatch);
}

TEST(EnsembleAverage, Examples) {
  const Ensemble pair(Distribution{0.5, 0.5}, {Distribution{1.0, 0.0}, Distribution{0.0, 1.0}});
  EXPECT_EQ(ensemble_average(pair), Distribution({0.5, 0.5}));
  const Ensemble single(Distribution{1.0}, {kSkewed});
  EXPECT_EQ(ensemble_average(single), kSkewed);
  const auto cyc = Ensemble::with_uniform_weights({kSkewed, shifted(kSkewed, 1), shifted(kSkewed, 2)});
  EXPECT_LE(max_abs_difference(ensemble_average(cyc), Distribution::uniform(3)), 1e-15);
}

TEST(InformationMeasures, Examples) {
  const Ensemble pair(Distribution{0.5, 0.5}, {Distribution{1.0, 0.0}, Distribution{0.0, 1.0}});
  EXPECT_DOUBLE_EQ(holevo_information(pair).value(), 1.0);
  EXPECT_DOUBLE_EQ(divergence_information(pair).value(), 1.0);

  const auto same = Ensemble::with_uniform_weights({kSkewed, kSkewed});
  EXPECT_NEAR(holevo_information(same).value(), 0.0, 1e-15);
  EXPECT_NEAR(divergence_information(same).value(), 0.0, 1e-15);

  const auto cyc = Ensemble::with_uniform_weights({kSkewed, shifted(kSkewed, 1), shifted(kSkewed, 2)});
  EXPECT_NEAR(holevo_information(cyc).value(), kSkewedRelEntropy, 1e-12);
  EXPECT_NEAR(divergence_information(cyc).value(), kSkewedDivergence, 1e-12);
  EXPECT_NEAR(divergence_information(cyc, DivergenceStrategy::exhaustive).value(), kSkewedDivergence,
              1e-12);
}

TEST(DivergenceInformation, StrategyErrors) {
  std::vector<double> skew(25, 0.5 / 24.0);
  skew[0] = 0.5;
  const Ensemble big(Distribution{1.0}, {Distribution(skew)});
  EXPECT_THROW(divergence_information(big), NotComputableExactly);
  EXPECT_THROW(divergence_information(big, DivergenceStrategy::uniform_average), PreconditionViolated);
  EXPECT_THROW(divergence_information(big, DivergenceStrategy::exhaustive), TooLargeForExhaustive);
  // Uniform average: the fast path handles any support size.
  const auto u = Ensemble::with_uniform_weights({Distribution::uniform(100)});
  EXPECT_NEAR(divergence_information(u).value(), 0.0, 1e-12);
}

// ---- properties ---------------------------------------------------------

TEST(MeasureProperties, PrefixFormulaMatchesExhaustive) {
  Rng rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(1, 12);
    const auto p = trial % 2 ? verify::random_sparse_distribution(n, rng) : verify::random_distribution(n, rng);
    EXPECT_NEAR(divergence_uniform(p), divergence_exact(p, Distribution::uniform(n)).value(), 1e-12);
  }
}

TEST(MeasureProperties, RangeEntropyLinkAndNonNegativity) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(1, 300);
    const auto p = trial % 3 ? verify::random_distribution(n, rng) : verify::random_sparse_distribution(n, rng);
    const auto u = Distribution::uniform(n);
    const double d = divergence_uniform(p);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, std::log2(double(n)) + 1e-12);
    EXPECT_NEAR(relative_entropy(p, u).value(), std::log2(double(n)) - entropy(p), 1e-12);
    EXPECT_NEAR(relative_entropy(p, u).value(), oracle::relative_entropy_to_uniform(p.values()), 1e-12);
  }
}

TEST(MeasureProperties, PermutationInvariance) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.index(2, 64);
    const auto p = verify::random_distribution(n, rng);
    std::vector<double> v = p.values();
    for (std::size_t i = n - 1; i > 0; --i) std::swap(v[i], v[rng.index(0, i)]);
    const Distribution perm(v);
    const auto u = Distribution::uniform(n);
    EXPECT_NEAR(entropy(perm), entropy(p), 1e-12);
    EXPECT_NEAR(divergence_uniform(perm), divergence_uniform(p), 1e-12);
    EXPECT_NEAR(relative_entropy(perm, u).value(), relative_entropy(p, u).value(), 1e-12);
  }
}

TEST(MeasureProperties, MajorizationMonotonicity) {
  Rng rng(5);
  int majorizing_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng.index(2, 20);
    const auto p = verify::random_distribution(n, rng);
    EXPECT_TRUE(majorizes(p, Distribution::uniform(n)));
    // A Robin Hood transfer between two cells yields a distribution P majorises.
    std::vector<double> v = sort_descending(p).values();
    const std::size_t i = rng.index(0, n - 2);
    const std::size_t j = rng.index(i + 1, n - 1);
    const double t = rng.uniform() * 0.5 * (v[i] - v[j]);
    v[i] -= t;
    v[j] += t;
    const Distribution q(v);
    EXPECT_TRUE(majorizes(p, q));
    EXPECT_LE(entropy(p), entropy(q) + 1e-12);
    const auto r = verify::random_distribution(n, rng);
    if (majorizes(p, r)) {
      ++majorizing_pairs;
      EXPECT_LE(entropy(p), entropy(r) + 1e-12);
    }
  }
  EXPECT_GT(majorizing_pairs, 0);
}

TEST(MeasureProperties, PairRelationsOnRandomEnsembles) {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.index(2, 10);
    const auto e = verify::random_ensemble(n, rng.index(1, 6), rng);
    const double chi = holevo_information(e).value();
    const double d = divergence_information(e, DivergenceStrategy::exhaustive).value();
    EXPECT_GE(chi, 0.0);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, chi + 1.0 + 1e-9);
    EXPECT_LE(chi, d * double(n - 1) + 1e-9);
  }
}

}  // namespace
}  // namespace divinfo
