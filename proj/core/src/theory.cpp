#include "powergraph/theory.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>

#include "powergraph/error.hpp"

namespace powergraph::theory {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

void TheoryParams::validate() const {
  if (!(n >= 1)) throw DomainError("n must be >= 1");
  if (!(d > 0)) throw DomainError("d must be > 0");
  if (r < 1) throw DomainError("r must be >= 1");
  if (!(epsilon > 0 && epsilon < 1.0 / r)) {
    throw DomainError("epsilon must lie in (0, 1/r)");
  }
}

double TheoryParams::nu0() const noexcept { return std::pow(d, 1.0 - epsilon); }

double TheoryParams::janson_alpha() const noexcept { return 10.0 * factorial(r); }

double iterated_log(double x, unsigned k) {
  for (unsigned i = 0; i < k; ++i) {
    if (!(x > 0)) {
      throw DomainError("iterated log undefined: intermediate value " +
                        std::to_string(x) + " <= 0");
    }
    x = std::log(x);
  }
  return x;
}

double d_star(double n, unsigned r) {
  const double denom = iterated_log(n, r + 1);
  if (!(denom > 0)) {
    throw DomainError("log_(" + std::to_string(r + 1) + ") n must be positive");
  }
  return std::log(n) / denom;
}

double log_u(const DegreeProfile& profile, double d) {
  if (!profile.feasible()) return -kInf;
  const auto D = static_cast<double>(profile.total());
  const double last = profile.ell.empty() ? 0.0 : static_cast<double>(profile.ell.back());
  double value = (D > 0 ? D * std::log(d) : 0.0) - d * (1.0 + D - last);
  double prev = 1.0;
  for (auto l : profile.ell) {
    const auto x = static_cast<double>(l);
    value -= std::lgamma(x + 1.0);
    if (l > 0) value += x * std::log(prev);
    prev = x;
  }
  return value;
}

double u_value(const DegreeProfile& profile, double d) {
  if (!profile.feasible()) return 0.0;
  return std::exp(log_u(profile, d));
}

double log_u_stirling(const DegreeProfile& profile, double d) {
  if (!profile.feasible()) return -kInf;
  const auto D = static_cast<double>(profile.total());
  const double last = profile.ell.empty() ? 0.0 : static_cast<double>(profile.ell.back());
  return (D > 0 ? D * std::log(d) : 0.0) - d * (1.0 + D - last) + D -
         layer_entropy_objective(profile) - 0.5 * std::log(profile.product());
}

double layer_entropy_objective(const DegreeProfile& profile) {
  double value = 0.0;
  double prev = 1.0;
  for (auto l : profile.ell) {
    const auto x = static_cast<double>(l);
    if (l > 0) {
      if (prev == 0.0) return kInf;
      value += x * std::log(x / prev);
    }
    prev = x;
  }
  return value;
}

double degree_sum_pmf(const TheoryParams& params, std::uint64_t D, std::uint64_t cap) {
  if (!(params.d > 0)) throw DomainError("d must be > 0");
  if (params.r < 1) throw DomainError("r must be >= 1");
  if (D > cap) {
    throw BudgetExceeded("degree pmf enumeration capped at D = " + std::to_string(cap),
                         0, 0);
  }
  const unsigned r = params.r;
  DegreeProfile profile;
  profile.ell.assign(r, 0);
  double total = 0.0;
  // Feasible compositions only: once a layer is zero the rest are zero.
  std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned i, std::uint64_t left) {
    if (i + 1 == r) {
      profile.ell[i] = left;
      if (profile.feasible()) total += u_value(profile, params.d);
      return;
    }
    const bool prev_zero = i > 0 && profile.ell[i - 1] == 0;
    for (std::uint64_t l = 0; l <= left; ++l) {
      if (prev_zero && l > 0) break;
      profile.ell[i] = l;
      if (l == 0 && left > 0) continue;  // zero here forces zero later
      rec(i + 1, left - l);
    }
    profile.ell[i] = 0;
  };
  rec(0, D);
  return total;
}

namespace {

struct Lemma2Dp {
  std::uint64_t D;
  unsigned r;
  std::vector<double> logs;  // logs[k] = log k, logs[0] unused
  // memo[i] for layer i (1-based, 2 <= i < r): key (left << 32 | prev)
  std::vector<std::unordered_map<std::uint64_t, std::pair<double, std::uint64_t>>> memo;

  Lemma2Dp(std::uint64_t D_, unsigned r_) : D(D_), r(r_), logs(D_ + 1, 0.0), memo(r_ + 1) {
    for (std::uint64_t k = 1; k <= D; ++k) logs[k] = std::log(static_cast<double>(k));
  }

  double cost(std::uint64_t l, std::uint64_t prev) const {
    if (l == 0) return 0.0;
    if (prev == 0) return kInf;
    return static_cast<double>(l) * (logs[l] - logs[prev]);
  }

  static bool better(double candidate, double best) {
    if (best == kInf) return candidate < kInf;
    return candidate < best - 1e-12 * std::max(1.0, std::fabs(best));
  }

  /// Minimum over layers i..r with `left` mass remaining and l_{i-1} = prev;
  /// returns (value, chosen l_i).
  std::pair<double, std::uint64_t> solve(unsigned i, std::uint64_t left, std::uint64_t prev) {
    if (i == r) return {cost(left, prev), left};
    const std::uint64_t key = (left << 32) | prev;
    auto& table = memo[i];
    if (auto it = table.find(key); it != table.end()) return it->second;
    std::pair<double, std::uint64_t> best{kInf, 0};
    for (std::uint64_t l = 0; l <= left; ++l) {
      const double c = cost(l, prev);
      if (c == kInf) break;  // prev == 0 and l > 0, and every larger l too
      if (l == 0 && left > 0) continue;  // remaining mass would be stranded
      const double v = c + solve(i + 1, left - l, l).first;
      if (better(v, best.first)) best = {v, l};
    }
    table.emplace(key, best);
    return best;
  }
};

double lemma2_cost_estimate(std::uint64_t D, unsigned r) {
  // States at layer i are pairs (left, prev); at most D^{i-1} of them and
  // never more than (D + 1)^2. Each costs D + 1 transitions.
  const double d1 = static_cast<double>(D) + 1.0;
  double total = 0;
  double states = 1;
  for (unsigned i = 1; i < r; ++i) {
    total += std::min(states, d1 * d1) * d1;
    states *= d1;
  }
  return total + 1;
}

}  // namespace

Lemma2Exact lemma2_min_exact(std::uint64_t D, unsigned r, std::uint64_t budget) {
  if (r < 1) throw DomainError("r must be >= 1");
  if (D >= (std::uint64_t{1} << 31)) throw DomainError("D too large");
  const double estimate = lemma2_cost_estimate(D, r);
  if (estimate > static_cast<double>(budget)) {
    throw BudgetExceeded("layer-entropy DP needs ~" + std::to_string(estimate) +
                             " transitions, budget " + std::to_string(budget),
                         0, 0);
  }
  Lemma2Dp dp(D, r);
  Lemma2Exact out;
  out.argmin.ell.assign(r, 0);
  std::uint64_t left = D;
  std::uint64_t prev = 1;
  for (unsigned i = 1; i <= r; ++i) {
    const auto [value, choice] = dp.solve(i, left, prev);
    if (i == 1) out.value = value;
    out.argmin.ell[i - 1] = choice;
    left -= choice;
    prev = choice;
  }
  return out;
}

Lemma2Lagrange lemma2_min_lagrange(double D, unsigned r, const BisectionOptions& options) {
  if (r < 1) throw DomainError("r must be >= 1");
  if (!(D > 0)) throw DomainError("continuous relaxation needs D > 0");

  std::vector<double> p(r);
  std::vector<double> ell(r);
  // Fills p and ell for p_r = x; returns sum l_i (inf on overflow).
  auto evaluate = [&](double x) {
    p[r - 1] = x;
    for (unsigned i = r - 1; i-- > 0;) p[i] = x * std::exp(p[i + 1]);
    double prod = 1.0;
    double sum = 0.0;
    for (unsigned i = 0; i < r; ++i) {
      prod *= p[i];
      ell[i] = prod;
      sum += prod;
    }
    return std::isfinite(sum) ? sum : kInf;
  };

  const double tol = options.abs_tolerance * std::max(1.0, D);
  double lo = 0.0;
  double hi = std::max(1.0, D);
  double x = hi;
  double residual = evaluate(x) - D;
  int it = 0;
  for (; it < options.max_iterations && std::fabs(residual) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted at double precision
    x = mid;
    residual = evaluate(x) - D;
    if (residual < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (!(std::fabs(residual) <= tol)) {
    // Try the bracket ends before giving up.
    for (double end : {lo, hi}) {
      if (end <= 0) continue;
      const double res = evaluate(end) - D;
      if (std::fabs(res) < std::fabs(residual)) {
        x = end;
        residual = res;
      }
    }
    if (!(std::fabs(residual) <= tol)) {
      throw NoConvergence("bisection for p_r did not meet tolerance", lo, hi);
    }
  }
  evaluate(x);

  Lemma2Lagrange out;
  out.p = p;
  out.ell = ell;
  out.residual = residual;
  out.iterations = it;
  double value = 0.0;
  for (unsigned i = 0; i < r; ++i) value += ell[i] * std::log(p[i]);
  out.value = value;
  out.tower_constant = std::numeric_limits<double>::quiet_NaN();
  try {
    const double top = iterated_log(D, r - 1);
    const double bottom = iterated_log(D, r);
    if (bottom > 0) out.tower_constant = (top - p[r - 1]) / bottom;
  } catch (const DomainError&) {
  }
  return out;
}

double janson_k0(const TheoryParams& params) {
  if (!(params.d > 1)) throw DomainError("k0 needs d > 1");
  return params.janson_alpha() * params.n * std::log(params.d) /
         std::pow(params.d, static_cast<double>(params.r));
}

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -kInf;
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double janson_mu(const TheoryParams& params, double k) {
  if (k < 2) return 0.0;
  const double lb = log_binomial(params.n - 2, params.r - 1.0);
  if (lb == -kInf) return 0.0;
  const double log_mu = std::log(k * (k - 1) / 2) + lb +
                        params.r * std::log(params.d / params.n);
  return std::exp(log_mu);
}

double aks_chi_bound(double delta, double t, double c) {
  if (!(t >= 2 && t <= delta)) throw DomainError("AKS bound needs 2 <= t <= Delta");
  return c * delta / std::log(t);
}

}  // namespace powergraph::theory
