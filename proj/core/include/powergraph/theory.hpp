#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powergraph/degree_profile.hpp"

// Closed-form quantities for G(n, d/n) and its powers.
//
// All logarithms are natural logarithms.
//
// The degree-profile probability uses the exponent e^{-d(l_0 + ... + l_{r-1})}
// = e^{-d(1 + D - l_r)}, which follows from the product of layer
// probabilities. Writing D instead of d in the exponent would not give a
// probability (for r = 1 it must reduce to the Poisson(d) law).

namespace powergraph::theory {

struct TheoryParams {
  double n = 1;
  double d = 1;
  unsigned r = 1;
  double epsilon = 0.1;

  /// n >= 1, d > 0, r >= 1, 0 < epsilon < 1/r. Throws DomainError.
  void validate() const;

  double p() const noexcept { return d / n; }
  /// nu_0 = d^{1 - epsilon}, the co-degree sparsity threshold.
  double nu0() const noexcept;
  /// alpha = 10 r!.
  double janson_alpha() const noexcept;
};

/// log applied k times; k = 0 returns x. DomainError when an intermediate
/// value is <= 0.
double iterated_log(double x, unsigned k);

/// D* = log n / log_{(r+1)} n.
double d_star(double n, unsigned r);

/// Probability weight u of a degree profile:
///   d^D e^{-d(1 + D - l_r)} / prod l_i! * prod_{i>=2} l_{i-1}^{l_i}.
/// 0 for an infeasible profile. d > 0.
double u_value(const DegreeProfile& profile, double d);
/// Exact log u via lgamma; -inf for an infeasible profile.
double log_u(const DegreeProfile& profile, double d);

/// Stirling form of log u:
///   D log d - d(1 + D - l_r) + D - sum l_i log(l_i / l_{i-1}) - (1/2) log L
/// with the O(r) constant left out. log_u - log_u_stirling lies in [-r, 0).
double log_u_stirling(const DegreeProfile& profile, double d);

inline constexpr std::uint64_t kDefaultPmfCap = 60;

/// P(G^r-degree = D) as the sum of u over all feasible compositions of D
/// into r layers; the relative finite-n correction is dropped. Throws
/// BudgetExceeded when D > cap.
double degree_sum_pmf(const TheoryParams& params, std::uint64_t D,
                      std::uint64_t cap = kDefaultPmfCap);

/// Objective sum l_i log(l_i / l_{i-1}) with l_0 = 1, 0 log(0/x) = 0 and
/// +inf when a zero layer precedes a nonzero one.
double layer_entropy_objective(const DegreeProfile& profile);

struct Lemma2Exact {
  double value = 0;
  DegreeProfile argmin;
};

inline constexpr std::uint64_t kDefaultLemma2Budget = 2'000'000'000;

/// Exact integer minimum of layer_entropy_objective over profiles with
/// r layers summing to D, by memoized dynamic programming over
/// (layer, remaining mass, previous layer). The lexicographically smallest
/// minimizer is returned. Throws BudgetExceeded when the estimated
/// transition count exceeds `budget`.
Lemma2Exact lemma2_min_exact(std::uint64_t D, unsigned r,
                             std::uint64_t budget = kDefaultLemma2Budget);

struct Lemma2Lagrange {
  double value = 0;
  /// p_1..p_r (ratios l_i / l_{i-1}).
  std::vector<double> p;
  /// l_1..l_r.
  std::vector<double> ell;
  /// sum l_i - D at the returned point.
  double residual = 0;
  /// (log_{(r-1)} D - p_r) / log_{(r)} D when both logs are defined, else NaN.
  double tower_constant = 0;
  int iterations = 0;
};

struct BisectionOptions {
  double abs_tolerance = 1e-10;
  int max_iterations = 1000;
};

/// Continuous relaxation of the same problem. Stationarity gives
/// p_i = p_r e^{p_{i+1}} for i < r; p_r is found by bisection on the
/// increasing map p_r -> sum_i prod_{j<=i} p_j - D. Requires D > 0.
/// Converged when |residual| <= abs_tolerance * max(1, D) or the bracket
/// cannot shrink further at double precision with the same bound met;
/// otherwise NoConvergence with the final bracket.
Lemma2Lagrange lemma2_min_lagrange(double D, unsigned r,
                                   const BisectionOptions& options = {});

/// k_0 = 10 r! n log d / d^r. DomainError for d <= 1.
double janson_k0(const TheoryParams& params);

/// mu = C(k, 2) C(n - 2, r - 1) (d/n)^r, evaluated in log space.
double janson_mu(const TheoryParams& params, double k);

/// c Delta / log t. DomainError unless 2 <= t <= Delta.
double aks_chi_bound(double delta, double t, double c = 1.0);

/// log C(n, k) for real n >= k >= 0.
double log_binomial(double n, double k);

}  // namespace powergraph::theory
