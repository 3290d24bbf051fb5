#include "powergraph/conjecture.hpp"

#include <algorithm>

#include "powergraph/clique.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/error.hpp"
#include "powergraph/power_metrics.hpp"

namespace powergraph {

GapReport conjecture_gap(const Graph& g, unsigned r, const GapBudgets& budgets) {
  GapReport rep;
  rep.r = r;
  rep.n = g.num_vertices();
  const Graph power = graph_power(g, r, budgets.edge_cap);
  const std::size_t n = rep.n;
  const std::size_t delta_plus_one = n == 0 ? 0 : power.max_degree() + 1;

  try {
    rep.omega.lower = rep.omega.upper = max_clique_exact(power, budgets.clique_nodes);
    rep.omega.exact = true;
  } catch (const BudgetExceeded& e) {
    rep.omega.lower = std::max(e.lower, clique_lower_bound(g, r));
    rep.omega.upper = std::min(e.upper, delta_plus_one);
  }

  try {
    rep.alpha.lower = rep.alpha.upper =
        independence_number(power, IndependenceMode::Exact, budgets.independence_nodes);
    rep.alpha.exact = true;
  } catch (const BudgetExceeded& e) {
    rep.alpha.lower = std::max(e.lower, greedy_independent_set(power).size());
    rep.alpha.upper = std::min(e.upper, n);
  }

  try {
    const auto chi = dsatur_chromatic_exact(power, budgets.chromatic_nodes);
    rep.chi.lower = rep.chi.upper = chi.chi;
    rep.chi.exact = true;
  } catch (const BudgetExceeded& e) {
    std::size_t by_alpha = 0;
    if (rep.alpha.upper > 0) by_alpha = (n + rep.alpha.upper - 1) / rep.alpha.upper;
    rep.chi.lower = std::max({e.lower, rep.omega.lower, by_alpha});
    rep.chi.upper = e.upper;
  }

  const double omega = static_cast<double>(rep.omega.lower);
  const double alpha = static_cast<double>(rep.alpha.upper);
  const double chi = static_cast<double>(rep.chi.upper);
  const double denom = std::max(omega, alpha > 0 ? static_cast<double>(n) / alpha : 0.0);
  rep.ratio = denom > 0 ? chi / denom : 0.0;
  rep.all_exact = rep.omega.exact && rep.alpha.exact && rep.chi.exact;
  return rep;
}

}  // namespace powergraph
