#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "powergraph/error.hpp"
#include "powergraph/random.hpp"
#include "powergraph/theory.hpp"

using namespace powergraph;
using namespace powergraph::theory;

namespace {

constexpr double kE = std::numbers::e;

TheoryParams params(double n, double d, unsigned r) {
  TheoryParams t;
  t.n = n;
  t.d = d;
  t.r = r;
  return t;
}

}  // namespace

TEST(TheoryParamsTest, Validation) {
  EXPECT_NO_THROW(params(100, 2, 2).validate());
  EXPECT_THROW(params(0, 2, 2).validate(), DomainError);
  EXPECT_THROW(params(100, 0, 2).validate(), DomainError);
  EXPECT_THROW(params(100, 2, 0).validate(), DomainError);
  auto t = params(100, 2, 10);
  t.epsilon = 0.1;
  EXPECT_THROW(t.validate(), DomainError);
  EXPECT_DOUBLE_EQ(params(100, 2, 2).p(), 0.02);
  EXPECT_DOUBLE_EQ(params(100, 2, 3).janson_alpha(), 60.0);
  auto nu = params(100, 16, 2);
  nu.epsilon = 0.25;
  EXPECT_NEAR(nu.nu0(), 8.0, 1e-12);
}

TEST(IteratedLog, Examples) {
  EXPECT_NEAR(iterated_log(std::exp(kE), 2), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(iterated_log(-3.5, 0), -3.5);
  EXPECT_NEAR(iterated_log(1e6, 2), 2.625792, 1e-6);
  EXPECT_NEAR(iterated_log(1e6, 2), std::log(std::log(1e6)), 1e-15);
  EXPECT_THROW(iterated_log(0.5, 2), DomainError);
  EXPECT_THROW(iterated_log(0.0, 1), DomainError);
}

TEST(DStar, Examples) {
  EXPECT_NEAR(d_star(std::exp(std::exp(kE)), 2), std::exp(1.0 * kE), 1e-9);
  EXPECT_NEAR(d_star(std::exp(kE), 1), kE, 1e-12);
  EXPECT_NEAR(d_star(1e6, 1), 5.261464, 1e-6);
  EXPECT_THROW(d_star(10, 2), DomainError);  // log log log 10 < 0
}

TEST(UValue, Examples) {
  EXPECT_NEAR(u_value(DegreeProfile{0}, 1.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(u_value(DegreeProfile{1, 1}, 1.0), std::exp(-2.0), 1e-15);
  EXPECT_EQ(u_value(DegreeProfile{0, 3}, 2.0), 0.0);
  EXPECT_EQ(log_u(DegreeProfile{0, 3}, 2.0), -std::numeric_limits<double>::infinity());
}

TEST(UValue, PoissonReduction) {
  for (double d : {0.5, 1.0, 2.0, 5.0}) {
    for (unsigned D = 0; D <= 60; ++D) {
      const double want = oracle::poisson_pmf(d, D);
      const double got = u_value(DegreeProfile{D}, d);
      EXPECT_NEAR(got / want, 1.0, 1e-10) << "d=" << d << " D=" << D;
    }
  }
}

TEST(UValue, DirectSubstitution) {
  // r = 3, l = (2, 3, 1), d = 1.5:
  //   d^6 e^{-d(1 + 6 - 1)} / (2! 3! 1!) * 2^3 * 3^1
  const double d = 1.5;
  const double want = std::pow(d, 6) * std::exp(-d * 6) / (2.0 * 6.0 * 1.0) * 8.0 * 3.0;
  EXPECT_NEAR(u_value(DegreeProfile{2, 3, 1}, d), want, 1e-15);
  EXPECT_NEAR(log_u(DegreeProfile{2, 3, 1}, d), std::log(want), 1e-12);
}

TEST(LogUStirling, GapWithinConstant) {
  RandomSource src(3);
  for (int i = 0; i < 200; ++i) {
    const unsigned r = 1 + static_cast<unsigned>(src.next_u64() % 4);
    DegreeProfile p;
    for (unsigned k = 0; k < r; ++k) p.ell.push_back(1 + src.next_u64() % 40);
    const double gap = log_u(p, 2.5) - log_u_stirling(p, 2.5);
    EXPECT_LT(gap, 0.0);
    EXPECT_GE(gap, -static_cast<double>(r));
  }
}

TEST(DegreeSumPmf, Examples) {
  EXPECT_NEAR(degree_sum_pmf(params(1e5, 1, 1), 0), std::exp(-1.0), 1e-15);
  EXPECT_THROW(degree_sum_pmf(params(1e5, 1, 2), 61), BudgetExceeded);
  EXPECT_NO_THROW(degree_sum_pmf(params(1e5, 1, 2), 61, 61));
}

TEST(DegreeSumPmf, NormalizesForSeveralRadii) {
  for (double d : {0.5, 1.0, 2.0, 5.0}) {
    double total = 0;
    for (unsigned D = 0; D <= 60; ++D) total += degree_sum_pmf(params(1e5, d, 1), D);
    EXPECT_NEAR(total, 1.0, 1e-9) << "d=" << d;
  }
  // For r = 2 the law is a two-generation Poisson branching total; with
  // d = 0.8 the tail past 60 is negligible.
  double total = 0;
  for (unsigned D = 0; D <= 60; ++D) total += degree_sum_pmf(params(1e5, 0.8, 2), D);
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(DegreeSumPmf, SmallValuesByHand) {
  // r = 2, D = 1: only (1, 0): d e^{-d(1 + 1 - 0)} = d e^{-2d}.
  const double d = 2.0;
  EXPECT_NEAR(degree_sum_pmf(params(1e5, d, 2), 1), d * std::exp(-2 * d), 1e-15);
  // D = 2: (2, 0) and (1, 1).
  const double want = d * d * std::exp(-3 * d) / 2 + d * d * std::exp(-2 * d);
  EXPECT_NEAR(degree_sum_pmf(params(1e5, d, 2), 2), want, 1e-15);
}

TEST(LayerEntropy, Objective) {
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{2, 2}), 2 * std::log(2.0), 1e-15);
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{1, 3}), 3 * std::log(3.0), 1e-15);
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{3, 1}), 3 * std::log(3.0) + std::log(1.0 / 3),
              1e-15);
  EXPECT_EQ(layer_entropy_objective(DegreeProfile{0, 1}),
            std::numeric_limits<double>::infinity());
  EXPECT_EQ(layer_entropy_objective(DegreeProfile{4, 0}), 4 * std::log(4.0));
}

TEST(Lemma2Exact, Examples) {
  for (std::uint64_t D : {1u, 2u, 7u, 50u}) {
    const auto res = lemma2_min_exact(D, 1);
    EXPECT_DOUBLE_EQ(res.value, static_cast<double>(D) * std::log(static_cast<double>(D)));
    EXPECT_EQ(res.argmin, DegreeProfile{D});
  }
  const auto four = lemma2_min_exact(4, 2);
  EXPECT_NEAR(four.value, 1.38629, 1e-5);
  EXPECT_EQ(four.argmin, (DegreeProfile{2, 2}));
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{1, 3}), 3.2958, 1e-4);
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{3, 1}), 2.1972, 1e-4);
  EXPECT_NEAR(layer_entropy_objective(DegreeProfile{4, 0}), 5.5452, 1e-4);
  const auto one = lemma2_min_exact(1, 2);
  EXPECT_DOUBLE_EQ(one.value, 0.0);
  EXPECT_EQ(one.argmin, (DegreeProfile{1, 0}));
  EXPECT_DOUBLE_EQ(lemma2_min_exact(0, 3).value, 0.0);
}

TEST(Lemma2Exact, MatchesBruteForce) {
  for (unsigned r = 1; r <= 4; ++r) {
    const std::uint64_t top = r <= 3 ? 40 : 18;
    for (std::uint64_t D = 0; D <= top; ++D) {
      const auto want = oracle::layer_entropy_bruteforce(D, r);
      const auto got = lemma2_min_exact(D, r);
      EXPECT_NEAR(got.value, want.value, 1e-9) << "D=" << D << " r=" << r;
      EXPECT_NEAR(layer_entropy_objective(got.argmin), got.value, 1e-9);
      EXPECT_EQ(got.argmin.total(), D);
    }
  }
}

TEST(Lemma2Exact, MoreLayersNeverHurt) {
  for (std::uint64_t D = 1; D <= 80; ++D) {
    double prev = lemma2_min_exact(D, 1).value;
    for (unsigned r = 2; r <= 4; ++r) {
      const double v = lemma2_min_exact(D, r).value;
      EXPECT_LE(v, prev + 1e-9);
      prev = v;
    }
  }
}

TEST(Lemma2Exact, RandomProfilesNeverBeatIt) {
  RandomSource src(17);
  for (int i = 0; i < 300; ++i) {
    const unsigned r = 2 + static_cast<unsigned>(src.next_u64() % 2);
    DegreeProfile p;
    for (unsigned k = 0; k < r; ++k) p.ell.push_back(1 + src.next_u64() % 30);
    EXPECT_LE(lemma2_min_exact(p.total(), r).value, layer_entropy_objective(p) + 1e-9);
  }
}

TEST(Lemma2Exact, BudgetExceeded) {
  EXPECT_THROW(lemma2_min_exact(5000, 3, 1000), BudgetExceeded);
}

TEST(Lemma2Lagrange, FixedPointRelations) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (double D : {4.0, 37.5, 1e3, 1e6}) {
      const auto res = lemma2_min_lagrange(D, r);
      ASSERT_EQ(res.p.size(), r);
      double sum = 0;
      for (double l : res.ell) sum += l;
      EXPECT_NEAR(sum, D, 1e-8 * std::max(1.0, D));
      for (unsigned i = 0; i + 1 < r; ++i) {
        EXPECT_NEAR(res.p[i], res.p[r - 1] * std::exp(res.p[i + 1]), 1e-8 * res.p[i]);
      }
      double prod = 1;
      for (unsigned i = 0; i < r; ++i) {
        prod *= res.p[i];
        EXPECT_NEAR(res.ell[i], prod, 1e-9 * prod);
      }
    }
  }
}

TEST(Lemma2Lagrange, RelaxationBelowIntegerMinimum) {
  EXPECT_LE(lemma2_min_lagrange(4, 2).value, 1.38629436111989 + 1e-12);
  for (unsigned r = 1; r <= 3; ++r) {
    for (std::uint64_t D = 1; D <= 60; ++D) {
      const auto cont = lemma2_min_lagrange(static_cast<double>(D), r);
      EXPECT_LE(cont.value, lemma2_min_exact(D, r).value + 1e-9) << "D=" << D << " r=" << r;
    }
  }
}

TEST(Lemma2Lagrange, TowerShapeAtMillion) {
  const double D = 1e6;
  const auto res = lemma2_min_lagrange(D, 2);
  const double pr = res.p[1];
  EXPECT_LE(pr, std::log(D));
  ASSERT_TRUE(std::isfinite(res.tower_constant));
  EXPECT_GT(res.tower_constant, 0.0);
  EXPECT_NEAR(pr, std::log(D) - res.tower_constant * std::log(std::log(D)), 1e-9);
  EXPECT_LT(res.tower_constant, 2.0);
}

TEST(Lemma2Lagrange, ErrorsAndNoConvergence) {
  EXPECT_THROW(lemma2_min_lagrange(0.0, 2), DomainError);
  BisectionOptions opts;
  opts.max_iterations = 2;
  opts.abs_tolerance = 1e-15;
  try {
    lemma2_min_lagrange(1e5, 3, opts);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_LT(e.lo, e.hi);
  }
}

TEST(Janson, K0Examples) {
  EXPECT_NEAR(janson_k0(params(1e6, 100, 1)), 460517.0, 0.1);
  EXPECT_NEAR(janson_k0(params(1e4, 10, 2)), 20 * 1e4 * std::log(10.0) / 100, 1e-9);
  EXPECT_NEAR(janson_k0(params(5000, kE, 1)), 10 * 5000 / kE, 1e-9);
  EXPECT_THROW(janson_k0(params(100, 1.0, 1)), DomainError);
}

TEST(Janson, MuExamples) {
  EXPECT_NEAR(janson_mu(params(1000, 10, 1), 2), 0.01, 1e-15);
  EXPECT_EQ(janson_mu(params(1000, 10, 1), 0), 0.0);
  EXPECT_EQ(janson_mu(params(1000, 10, 1), 1), 0.0);
  EXPECT_NEAR(janson_mu(params(1000, 10, 1), 100), 49.5, 1e-10);
  // r = 2: C(k,2) (n - 2) (d/n)^2.
  EXPECT_NEAR(janson_mu(params(1000, 10, 2), 50), 1225.0 * 998 * 1e-4, 1e-9);
}

TEST(Janson, MuMonotone) {
  for (unsigned r = 1; r <= 3; ++r) {
    double prev = 0;
    for (double k = 2; k <= 5000; k *= 1.7) {
      const double mu = janson_mu(params(1e5, 20, r), k);
      EXPECT_GT(mu, prev);
      prev = mu;
    }
    prev = 0;
    for (double d = 2; d <= 200; d *= 1.5) {
      const double mu = janson_mu(params(1e5, d, r), 100);
      EXPECT_GT(mu, prev);
      prev = mu;
    }
    // In n with k = k0(n): more vertices, more candidate pairs.
    prev = 0;
    for (double n = 1e3; n <= 1e8; n *= 3) {
      const auto t = params(n, 20, r);
      const double mu = janson_mu(t, janson_k0(t));
      EXPECT_GT(mu, prev);
      prev = mu;
    }
  }
}

TEST(Aks, Examples) {
  EXPECT_NEAR(aks_chi_bound(100, std::exp(2.0)), 50.0, 1e-12);
  EXPECT_NEAR(aks_chi_bound(37, 37, 2.0), 2.0 * 37 / std::log(37.0), 1e-12);
  EXPECT_NEAR(aks_chi_bound(1e4, 1e2), 2171.5, 0.05);
  EXPECT_THROW(aks_chi_bound(100, 1.5), DomainError);
  EXPECT_THROW(aks_chi_bound(10, 20), DomainError);
}

TEST(LogBinomial, Values) {
  EXPECT_NEAR(log_binomial(10, 3), std::log(120.0), 1e-12);
  EXPECT_EQ(log_binomial(3, 5), -std::numeric_limits<double>::infinity());
}
