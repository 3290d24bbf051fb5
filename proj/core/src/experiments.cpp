#include "powergraph/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "powergraph/clique.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/error.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/power_metrics.hpp"
#include "powergraph/random.hpp"
#include "powergraph/theory.hpp"
#include "powergraph/traversal.hpp"

namespace powergraph {

namespace {

using ojson = nlohmann::ordered_json;

std::int64_t i64(std::size_t x) { return static_cast<std::int64_t>(x); }

std::string delta_name(unsigned s) { return "delta_" + std::to_string(s); }

std::vector<std::string> kind_columns(const ExperimentConfig& cfg) {
  switch (cfg.kind) {
    case ExperimentKind::DeltaConcentration:
      return {"d_star", "ratio"};
    case ExperimentKind::Chi2Equality:
      return {"s_size", "forest", "palette", "proper", "greedy_palette",
              "ball_vertex", "ball_chi", "ball_exact", "z_size", "success"};
    case ExperimentKind::ChiSandwich:
      return {"s_size", "forest", "palette", "proper", "within_bound",
              "greedy_palette", "lb_ok", "z_size"};
    case ExperimentKind::DenseChi:
      return {"target", "greedy_palette", "alpha_greedy", "n_over_alpha",
              "upper_ratio", "lower_ratio", "upper_ge_lower"};
    case ExperimentKind::CliqueSandwich:
      return {"lower", "upper", "lower_ok", "upper_ok", "greedy_palette"};
    case ExperimentKind::DegreePmf: {
      std::vector<std::string> c;
      for (std::uint64_t k = 0; k <= cfg.d_max; ++k) c.push_back("count_" + std::to_string(k));
      c.push_back("count_over");
      return c;
    }
  }
  return {};
}

/// Shared state of one trial: the sampled graph and its power-degree
/// sequences for s = 1..r.
struct TrialContext {
  const ExperimentConfig& cfg;
  Graph g;
  std::vector<std::vector<std::size_t>> degrees;  // degrees[s - 1]
  std::vector<PowerDegreeSummary> deltas;         // deltas[s - 1]

  std::size_t delta(unsigned s) const { return s == 0 ? 0 : deltas[s - 1].delta; }
};

PowerDegreeSummary summarize_degrees(const std::vector<std::size_t>& deg, unsigned r) {
  PowerDegreeSummary s;
  s.r = r;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (s.argmax == kNoVertex || deg[v] > s.delta) {
      s.delta = deg[v];
      s.argmax = static_cast<Vertex>(v);
    }
  }
  return s;
}

/// Results feeding the deterministic chain
///   clique_lb <= omega (when exact) <= chi_upper <= Delta(G^r) + 1.
struct Chain {
  std::size_t clique_lb = 0;
  std::optional<std::size_t> omega;
  std::size_t chi_upper = 0;
};

std::optional<std::size_t> exact_omega(const TrialContext& ctx) {
  try {
    const Graph power = graph_power(ctx.g, ctx.cfg.r, ctx.cfg.edge_cap);
    return max_clique_exact(power, ctx.cfg.clique_budget);
  } catch (const BudgetExceeded&) {
  } catch (const MemoryBudgetError&) {
  }
  return std::nullopt;
}

void delta_concentration(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const auto& cfg = ctx.cfg;
  const std::size_t dr = ctx.delta(cfg.r);
  double ds = -1.0;
  double ratio = -1.0;
  try {
    ds = theory::d_star(static_cast<double>(cfg.n), cfg.r);
    ratio = static_cast<double>(dr) / ds;
  } catch (const DomainError&) {
  }
  rec.set("d_star", ds);
  rec.set("ratio", ratio);
  chain.chi_upper = greedy_power_coloring(ctx.g, cfg.r).palette_size;
}

struct TwoPhaseOutcome {
  bool forest = false;
  std::int64_t palette = -1;
  bool proper = false;
};

TwoPhaseOutcome run_two_phase(const Graph& g, unsigned r) {
  TwoPhaseOutcome out;
  try {
    const Coloring c = two_phase_power_coloring(g, r);
    out.forest = true;
    out.palette = i64(c.palette_size);
    out.proper = verify_proper_power_coloring(g, r, c).proper;
  } catch (const ForestViolation&) {
  }
  return out;
}

std::int64_t z_size(const TrialContext& ctx) {
  return i64(short_cycle_proximity(ctx.g, ctx.cfg.z_s(), ctx.cfg.z_t()));
}

void chi2_equality(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const auto& g = ctx.g;
  const std::size_t d1 = ctx.delta(1);
  rec.set("s_size", i64(high_degree_set(g, 2, static_cast<std::int64_t>(d1)).size()));
  const auto tp = run_two_phase(g, 2);
  rec.set("forest", tp.forest);
  rec.set("palette", tp.palette);
  rec.set("proper", tp.proper);
  const std::size_t greedy = greedy_power_coloring(g, 2).palette_size;
  rec.set("greedy_palette", i64(greedy));

  // Lower-bound certificate: chi of G^2 restricted to the closed
  // neighborhood of a maximum-degree vertex.
  std::int64_t ball_chi = -1;
  bool ball_exact = false;
  const Vertex center = ctx.deltas[0].argmax;
  if (center != kNoVertex) {
    const Graph h = induced_power_subgraph(g, 2, ball(g, center, 1), ctx.cfg.edge_cap);
    try {
      ball_chi = i64(dsatur_chromatic_exact(h, ctx.cfg.chi_budget).chi);
      ball_exact = true;
    } catch (const BudgetExceeded& e) {
      ball_chi = i64(e.lower);
    }
  }
  rec.set("ball_vertex", center == kNoVertex ? std::int64_t{-1} : std::int64_t{center});
  rec.set("ball_chi", ball_chi);
  rec.set("ball_exact", ball_exact);
  rec.set("z_size", z_size(ctx));
  const auto target = static_cast<std::int64_t>(d1 + 1);
  rec.set("success", tp.forest && tp.proper && tp.palette == target && ball_chi >= target);

  chain.chi_upper = greedy;
  if (tp.proper) chain.chi_upper = std::min(greedy, static_cast<std::size_t>(tp.palette));
  chain.omega = exact_omega(ctx);
}

void chi_sandwich(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const auto& g = ctx.g;
  const unsigned r = ctx.cfg.r;
  const std::size_t prev = ctx.delta(r - 1);
  rec.set("s_size", i64(high_degree_set(g, r, static_cast<std::int64_t>(prev)).size()));
  const auto tp = run_two_phase(g, r);
  rec.set("forest", tp.forest);
  rec.set("palette", tp.palette);
  rec.set("proper", tp.proper);
  rec.set("within_bound",
          tp.forest && tp.proper && tp.palette <= static_cast<std::int64_t>(prev + 1));
  const std::size_t greedy = greedy_power_coloring(g, r).palette_size;
  rec.set("greedy_palette", i64(greedy));
  chain.chi_upper = greedy;
  if (tp.proper) chain.chi_upper = std::min(greedy, static_cast<std::size_t>(tp.palette));
  rec.set("lb_ok", chain.clique_lb <= chain.chi_upper);
  rec.set("z_size", z_size(ctx));
  chain.omega = exact_omega(ctx);
}

void dense_chi(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const auto& cfg = ctx.cfg;
  const double d = cfg.d();
  const double target = std::pow(d, static_cast<double>(cfg.r)) / std::log(d);
  rec.set("target", target);
  const std::size_t greedy = greedy_power_coloring(ctx.g, cfg.r).palette_size;
  rec.set("greedy_palette", i64(greedy));
  chain.chi_upper = greedy;
  const Graph power = graph_power(ctx.g, cfg.r, cfg.edge_cap);
  const std::size_t alpha = greedy_independent_set(power).size();
  const double lower = alpha > 0 ? static_cast<double>(cfg.n) / static_cast<double>(alpha) : 0.0;
  rec.set("alpha_greedy", i64(alpha));
  rec.set("n_over_alpha", lower);
  rec.set("upper_ratio", static_cast<double>(greedy) / target);
  rec.set("lower_ratio", lower / target);
  rec.set("upper_ge_lower", static_cast<double>(greedy) >= lower);
}

void clique_sandwich(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const unsigned r = ctx.cfg.r;
  const std::size_t lower = chain.clique_lb;
  const std::size_t upper = ctx.delta((r + 1) / 2) + 1;
  rec.set("lower", i64(lower));
  rec.set("upper", i64(upper));
  chain.omega = exact_omega(ctx);
  rec.set("lower_ok", chain.omega.has_value() && lower <= *chain.omega);
  rec.set("upper_ok", chain.omega.has_value() && *chain.omega <= upper);
  const std::size_t greedy = greedy_power_coloring(ctx.g, r).palette_size;
  rec.set("greedy_palette", i64(greedy));
  chain.chi_upper = greedy;
}

void degree_pmf(TrialContext& ctx, TrialRecord& rec, Chain& chain) {
  const auto& cfg = ctx.cfg;
  std::vector<std::int64_t> counts(cfg.d_max + 2, 0);
  for (auto k : ctx.degrees[cfg.r - 1]) ++counts[std::min<std::uint64_t>(k, cfg.d_max + 1)];
  for (std::uint64_t k = 0; k <= cfg.d_max; ++k) {
    rec.set("count_" + std::to_string(k), counts[k]);
  }
  rec.set("count_over", counts[cfg.d_max + 1]);
  chain.chi_upper = greedy_power_coloring(ctx.g, cfg.r).palette_size;
}

void record_chain(const TrialContext& ctx, const Chain& chain, TrialRecord& rec) {
  const std::size_t cap = ctx.cfg.n == 0 ? 0 : ctx.delta(ctx.cfg.r) + 1;
  rec.set("clique_lb", i64(chain.clique_lb));
  rec.set("omega", chain.omega ? i64(*chain.omega) : std::int64_t{-1});
  rec.set("omega_exact", chain.omega.has_value());
  rec.set("chi_upper", i64(chain.chi_upper));
  rec.set("delta_r_plus_1", i64(cap));
  bool ok = chain.chi_upper <= cap;
  if (chain.omega) {
    ok = ok && chain.clique_lb <= *chain.omega && *chain.omega <= chain.chi_upper;
  } else {
    ok = ok && chain.clique_lb <= chain.chi_upper;
  }
  rec.set("chain_ok", ok);
}

}  // namespace

std::vector<std::string> record_columns(const ExperimentConfig& cfg) {
  std::vector<std::string> cols{"status", "edges"};
  for (unsigned s = 1; s <= cfg.r; ++s) cols.push_back(delta_name(s));
  for (auto& c : kind_columns(cfg)) cols.push_back(std::move(c));
  for (const char* c : {"clique_lb", "omega", "omega_exact", "chi_upper", "delta_r_plus_1",
                        "chain_ok"}) {
    cols.emplace_back(c);
  }
  return cols;
}

TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = derive_seed(cfg.seed, trial);
  rec.config_hash = cfg.hash();
  rec.set("status", std::string("ok"));

  RandomSource src(rec.seed);
  TrialContext ctx{cfg, gnp_sample(cfg.n, cfg.p(), src, cfg.sampling), {}, {}};
  rec.set("edges", i64(ctx.g.num_edges()));
  try {
    for (unsigned s = 1; s <= cfg.r; ++s) {
      ctx.degrees.push_back(power_degrees(ctx.g, s));
      ctx.deltas.push_back(summarize_degrees(ctx.degrees.back(), s));
      rec.set(delta_name(s), i64(ctx.deltas.back().delta));
    }
    Chain chain;
    const unsigned half = cfg.r / 2;
    chain.clique_lb = half == 0 ? (ctx.g.num_edges() > 0 ? 2 : 1) : ctx.delta(half) + 1;
    switch (cfg.kind) {
      case ExperimentKind::DeltaConcentration:
        delta_concentration(ctx, rec, chain);
        break;
      case ExperimentKind::Chi2Equality:
        chi2_equality(ctx, rec, chain);
        break;
      case ExperimentKind::ChiSandwich:
        chi_sandwich(ctx, rec, chain);
        break;
      case ExperimentKind::DenseChi:
        dense_chi(ctx, rec, chain);
        break;
      case ExperimentKind::CliqueSandwich:
        clique_sandwich(ctx, rec, chain);
        break;
      case ExperimentKind::DegreePmf:
        degree_pmf(ctx, rec, chain);
        break;
    }
    record_chain(ctx, chain, rec);
  } catch (const Error& e) {
    rec.set("status", std::string(to_string(e.code())));
  }

  // Put the fields in column order so in-memory records equal re-read ones.
  std::vector<std::pair<std::string, FieldValue>> ordered;
  for (const auto& c : record_columns(cfg)) {
    if (const auto* v = rec.find(c)) ordered.emplace_back(c, *v);
  }
  rec.fields = std::move(ordered);
  rec.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentResult result;
  RecordSink sink(cfg.out, cfg.format, to_string(cfg.kind), cfg.hash(),
                  record_columns(cfg), cfg.timing);

  const std::size_t trials = cfg.trials;
  std::vector<std::optional<TrialRecord>> done(trials);
  std::size_t next_emit = 0;
  std::mutex mu;
  std::atomic<std::size_t> next_trial{0};
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t t = next_trial.fetch_add(1);
      if (t >= trials) return;
      TrialRecord rec;
      try {
        rec = run_trial(cfg, t);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next_trial = trials;
        return;
      }
      std::lock_guard lock(mu);
      done[t] = std::move(rec);
      // Records leave in trial order whatever order trials finish in.
      try {
        while (next_emit < trials && done[next_emit]) sink.write(*done[next_emit++]);
      } catch (...) {
        if (!failure) failure = std::current_exception();
        next_trial = trials;
        return;
      }
    }
  };

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(cfg.workers, 1, trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.records.reserve(trials);
  for (auto& r : done) result.records.push_back(std::move(*r));
  result.summary = summarize(cfg, result.records);
  return result;
}

double ExperimentSummary::metric(std::string_view name) const {
  for (const auto& [k, v] : metrics) {
    if (k == name) return v;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool ExperimentSummary::passed() const {
  return std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.passed; });
}

namespace {

ojson gates_json(const std::vector<Gate>& gates) {
  ojson arr = ojson::array();
  for (const auto& g : gates) {
    arr.push_back({{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
  }
  return arr;
}

ojson summary_json(const ExperimentSummary& s) {
  ojson j;
  j["kind"] = s.kind;
  j["config_hash"] = s.config_hash;
  j["trials"] = s.trials;
  j["failed_trials"] = s.failed_trials;
  ojson m = ojson::object();
  for (const auto& [k, v] : s.metrics) {
    if (std::isfinite(v)) {
      m[k] = v;
    } else {
      m[k] = nullptr;
    }
  }
  j["metrics"] = m;
  j["gates"] = gates_json(s.gates);
  j["passed"] = s.passed();
  return j;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Gate band_gate(std::string name, double value, double lo, double hi) {
  const bool ok = value >= lo && value <= hi;
  return {std::move(name), ok, num(value) + " in [" + num(lo) + ", " + num(hi) + "]"};
}

Gate min_gate(std::string name, double value, double lo) {
  return {std::move(name), value >= lo, num(value) + " >= " + num(lo)};
}

Gate zero_gate(std::string name, std::size_t count) {
  return {std::move(name), count == 0, std::to_string(count) + " violations"};
}

bool ok_status(const TrialRecord& r) {
  const auto* s = r.find("status");
  return s && std::get<std::string>(*s) == "ok";
}

}  // namespace

std::string ExperimentSummary::to_json() const { return summary_json(*this).dump(); }

ExperimentSummary summarize(const ExperimentConfig& cfg,
                            const std::vector<TrialRecord>& records) {
  ExperimentSummary s;
  s.kind = to_string(cfg.kind);
  s.config_hash = cfg.hash();
  s.trials = records.size();
  std::vector<const TrialRecord*> ok;
  std::size_t chain_violations = 0;
  for (const auto& r : records) {
    if (!ok_status(r)) {
      ++s.failed_trials;
      continue;
    }
    ok.push_back(&r);
    if (!r.get_bool("chain_ok")) ++chain_violations;
  }
  const double used = static_cast<double>(ok.size());
  auto mean = [&](const char* field) {
    if (ok.empty()) return std::numeric_limits<double>::quiet_NaN();
    double sum = 0;
    for (const auto* r : ok) sum += r->get_double(field);
    return sum / used;
  };
  auto fraction = [&](const char* field) {
    if (ok.empty()) return 0.0;
    double hits = 0;
    for (const auto* r : ok) hits += r->get_bool(field) ? 1 : 0;
    return hits / used;
  };

  const std::string dr = delta_name(cfg.r);
  s.metrics.emplace_back("mean_delta_r", mean(dr.c_str()));
  s.metrics.emplace_back("mean_chi_upper", mean("chi_upper"));
  s.metrics.emplace_back("chain_violations", static_cast<double>(chain_violations));
  s.gates.push_back(zero_gate("chain", chain_violations));
  s.gates.push_back(zero_gate("trial_errors", s.failed_trials));

  switch (cfg.kind) {
    case ExperimentKind::DeltaConcentration: {
      const double ratio = mean("ratio");
      s.metrics.emplace_back("d_star", ok.empty() ? -1.0 : ok.front()->get_double("d_star"));
      s.metrics.emplace_back("mean_ratio", ratio);
      s.gates.push_back(band_gate("ratio_band", ratio, 0.3, 3.0));
      break;
    }
    case ExperimentKind::Chi2Equality: {
      std::size_t improper = 0;
      for (const auto* r : ok) {
        if (r->get_bool("forest") && !r->get_bool("proper")) ++improper;
      }
      s.metrics.emplace_back("forest_fraction", fraction("forest"));
      s.metrics.emplace_back("success_fraction", fraction("success"));
      s.metrics.emplace_back("mean_z_size", mean("z_size"));
      s.gates.push_back(min_gate("success_fraction", fraction("success"), 0.9));
      s.gates.push_back(zero_gate("improper_two_phase", improper));
      break;
    }
    case ExperimentKind::ChiSandwich: {
      std::size_t bound = 0;
      std::size_t lb = 0;
      for (const auto* r : ok) {
        if (r->get_bool("forest") && !r->get_bool("within_bound")) ++bound;
        if (!r->get_bool("lb_ok")) ++lb;
      }
      s.metrics.emplace_back("success_rate", fraction("forest"));
      s.metrics.emplace_back("mean_palette_over_bound", [&] {
        double sum = 0;
        double cnt = 0;
        for (const auto* r : ok) {
          if (!r->get_bool("forest")) continue;
          sum += r->get_double("palette") /
                 (r->get_double(delta_name(cfg.r - 1).c_str()) + 1.0);
          cnt += 1;
        }
        return cnt > 0 ? sum / cnt : std::numeric_limits<double>::quiet_NaN();
      }());
      s.metrics.emplace_back("mean_z_size", mean("z_size"));
      s.gates.push_back(min_gate("success_rate", fraction("forest"), 0.8));
      s.gates.push_back(zero_gate("bound_violations", bound));
      s.gates.push_back(zero_gate("lower_bound_violations", lb));
      break;
    }
    case ExperimentKind::DenseChi: {
      double up_lo = std::numeric_limits<double>::infinity();
      double up_hi = -up_lo;
      double lo_lo = up_lo;
      double lo_hi = -up_lo;
      std::size_t order = 0;
      for (const auto* r : ok) {
        const double u = r->get_double("upper_ratio");
        const double l = r->get_double("lower_ratio");
        up_lo = std::min(up_lo, u);
        up_hi = std::max(up_hi, u);
        lo_lo = std::min(lo_lo, l);
        lo_hi = std::max(lo_hi, l);
        if (!r->get_bool("upper_ge_lower")) ++order;
      }
      s.metrics.emplace_back("mean_upper_ratio", mean("upper_ratio"));
      s.metrics.emplace_back("mean_lower_ratio", mean("lower_ratio"));
      s.metrics.emplace_back("min_upper_ratio", up_lo);
      s.metrics.emplace_back("max_upper_ratio", up_hi);
      s.metrics.emplace_back("min_lower_ratio", lo_lo);
      s.metrics.emplace_back("max_lower_ratio", lo_hi);
      s.gates.push_back(band_gate("upper_ratio_min", up_lo, 0.2, 20));
      s.gates.push_back(band_gate("upper_ratio_max", up_hi, 0.2, 20));
      s.gates.push_back(band_gate("lower_ratio_min", lo_lo, 0.05, 20));
      s.gates.push_back(band_gate("lower_ratio_max", lo_hi, 0.05, 20));
      s.gates.push_back(zero_gate("upper_below_lower", order));
      break;
    }
    case ExperimentKind::CliqueSandwich: {
      std::size_t inexact = 0;
      for (const auto* r : ok) inexact += r->get_bool("omega_exact") ? 0 : 1;
      s.metrics.emplace_back("lower_fraction", fraction("lower_ok"));
      s.metrics.emplace_back("upper_fraction", fraction("upper_ok"));
      s.gates.push_back(zero_gate("inexact_clique", inexact));
      s.gates.push_back(min_gate("lower_fraction", fraction("lower_ok"), 1.0));
      s.gates.push_back(min_gate("upper_fraction", fraction("upper_ok"), 0.9));
      break;
    }
    case ExperimentKind::DegreePmf: {
      const double total = used * static_cast<double>(cfg.n);
      theory::TheoryParams params;
      params.n = static_cast<double>(cfg.n);
      params.d = cfg.d();
      params.r = cfg.r;
      double worst = 0;
      std::size_t tested = 0;
      for (std::uint64_t k = 0; k <= cfg.d_max; ++k) {
        const std::string name = "count_" + std::to_string(k);
        double observed = 0;
        for (const auto* r : ok) observed += r->get_double(name.c_str());
        const double pi = theory::degree_sum_pmf(params, k);
        const double freq = total > 0 ? observed / total : 0.0;
        s.metrics.emplace_back("freq_" + std::to_string(k), freq);
        s.metrics.emplace_back("pmf_" + std::to_string(k), pi);
        if (total * pi < 5 || pi >= 1) continue;
        const double se = std::sqrt(pi * (1 - pi) / total);
        const double z = (freq - pi) / se;
        s.metrics.emplace_back("z_" + std::to_string(k), z);
        worst = std::max(worst, std::fabs(z));
        ++tested;
      }
      s.metrics.emplace_back("tested_bins", static_cast<double>(tested));
      s.metrics.emplace_back("max_abs_z", worst);
      s.gates.push_back({"pmf_within_4se", tested > 0 && worst <= 4.0,
                         "max |z| = " + num(worst) + " over " + std::to_string(tested) +
                             " bins"});
      break;
    }
  }
  return s;
}

bool VerifyReport::passed() const {
  return std::all_of(campaigns.begin(), campaigns.end(),
                     [](const ExperimentSummary& s) { return s.passed(); }) &&
         std::all_of(gates.begin(), gates.end(), [](const Gate& g) { return g.passed; });
}

std::string VerifyReport::to_json() const {
  ojson j;
  j["theorem"] = theorem;
  ojson arr = ojson::array();
  for (const auto& c : campaigns) arr.push_back(summary_json(c));
  j["campaigns"] = arr;
  j["gates"] = gates_json(gates);
  j["passed"] = passed();
  return j.dump();
}

std::vector<ExperimentConfig> verify_configs(std::string_view theorem,
                                             const VerifyOverrides& o) {
  struct Base {
    ExperimentKind kind;
    std::vector<std::size_t> n;
    double d;
    std::vector<unsigned> r;
    std::size_t trials;
  };
  Base b;
  if (theorem == "th1") {
    b = {ExperimentKind::DeltaConcentration, {10'000, 100'000, 1'000'000}, 2.0, {2}, 10};
  } else if (theorem == "th2") {
    b = {ExperimentKind::Chi2Equality, {2000}, 2.0, {2}, 50};
  } else if (theorem == "th3") {
    b = {ExperimentKind::ChiSandwich, {3000}, 2.0, {3}, 30};
  } else if (theorem == "th4") {
    b = {ExperimentKind::DenseChi, {4000}, 60.0, {2}, 10};
  } else if (theorem == "lemma-clique") {
    b = {ExperimentKind::CliqueSandwich, {150}, 3.0, {2, 3}, 100};
  } else {
    throw ConfigError("unknown theorem '" + std::string(theorem) +
                      "' (expected th1, th2, th3, th4 or lemma-clique)");
  }
  if (o.n) b.n = {*o.n};
  if (o.r) b.r = {*o.r};

  std::vector<ExperimentConfig> out;
  for (auto r : b.r) {
    for (auto n : b.n) {
      ExperimentConfig cfg;
      cfg.kind = b.kind;
      cfg.n = n;
      cfg.r = r;
      if (o.p) {
        cfg.p_value = *o.p;
      } else {
        cfg.d_value = o.d.value_or(b.d);
      }
      if (o.epsilon) cfg.epsilon = *o.epsilon;
      cfg.trials = o.trials.value_or(b.trials);
      if (o.seed) cfg.seed = *o.seed;
      if (o.clique_budget) cfg.clique_budget = *o.clique_budget;
      if (o.chi_budget) cfg.chi_budget = *o.chi_budget;
      if (o.edge_cap) cfg.edge_cap = *o.edge_cap;
      cfg.workers = o.workers;
      cfg.format = o.format;
      cfg.validate();
      out.push_back(std::move(cfg));
    }
  }
  if (!o.out.empty()) {
    // One record file per campaign: the base name gets -n<n>-r<r> when
    // there is more than one.
    const std::filesystem::path base(o.out);
    for (auto& cfg : out) {
      if (out.size() == 1) {
        cfg.out = o.out;
      } else {
        auto p = base;
        p.replace_filename(base.stem().string() + "-n" + std::to_string(cfg.n) + "-r" +
                           std::to_string(cfg.r) + base.extension().string());
        cfg.out = p.string();
      }
    }
  }
  return out;
}

VerifyReport verify_theorem(std::string_view theorem, const VerifyOverrides& o) {
  VerifyReport report;
  report.theorem = std::string(theorem);
  const auto configs = verify_configs(theorem, o);
  for (const auto& cfg : configs) report.campaigns.push_back(run_experiment(cfg).summary);

  if (theorem == "th1" && report.campaigns.size() >= 2) {
    // |mean ratio - 1| must shrink from each n to the next.
    bool monotone = true;
    std::string detail;
    for (std::size_t i = 0; i < report.campaigns.size(); ++i) {
      const double gap = std::fabs(report.campaigns[i].metric("mean_ratio") - 1.0);
      detail += (i ? ", " : "") + std::string("n=") + std::to_string(configs[i].n) +
                ": |ratio-1|=" + num(gap);
      if (i > 0) {
        const double prev = std::fabs(report.campaigns[i - 1].metric("mean_ratio") - 1.0);
        monotone = monotone && gap < prev;
      }
    }
    report.gates.push_back({"trend_towards_one", monotone, detail});
  }
  return report;
}

}  // namespace powergraph
