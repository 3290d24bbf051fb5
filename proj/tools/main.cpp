// powergraph command line: sampling, power metrics, colorings, closed-form
// evaluations and Monte Carlo campaigns.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powergraph/clique.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/conjecture.hpp"
#include "powergraph/error.hpp"
#include "powergraph/experiments.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph_io.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/power_metrics.hpp"
#include "powergraph/random.hpp"
#include "powergraph/theory.hpp"

namespace pg = powergraph;
namespace th = powergraph::theory;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kIo = 3 };

struct Common {
  std::optional<std::size_t> n;
  std::optional<double> d;
  std::optional<double> p;
  std::optional<unsigned> r;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string format = "csv";
  std::string out;
  std::optional<std::uint64_t> clique_budget;
  std::optional<std::uint64_t> chi_budget;
  std::optional<std::uint64_t> edge_cap;
  unsigned workers = 1;
  std::string input;
  std::string sampling = "auto";

  unsigned radius() const { return r.value_or(2); }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--n", c.n, "number of vertices");
  app->add_option("--d", c.d, "expected degree (p = d/n)");
  app->add_option("--p", c.p, "edge probability");
  app->add_option("--r", c.r, "power");
  app->add_option("--epsilon", c.epsilon, "co-degree exponent slack");
  app->add_option("--seed", c.seed, "64-bit seed");
  app->add_option("--trials", c.trials, "number of trials");
  app->add_option("--format", c.format, "record format")->check(CLI::IsMember({"csv", "jsonl"}));
  app->add_option("--out", c.out, "output path");
  app->add_option("--clique-budget", c.clique_budget, "clique search node budget");
  app->add_option("--chi-budget", c.chi_budget, "chromatic search node budget");
  app->add_option("--edge-cap", c.edge_cap, "edge cap for explicit powers");
  app->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
}

void add_graph_source(CLI::App* app, Common& c) {
  app->add_option("--input", c.input, "graph file (edge list, or DIMACS for .col/.dimacs)");
  app->add_option("--sampling", c.sampling, "G(n,p) sampling mode")
      ->check(CLI::IsMember({"auto", "pairwise", "skip"}));
}

pg::SamplingMode sampling_mode(const std::string& s) {
  if (s == "pairwise") return pg::SamplingMode::Pairwise;
  if (s == "skip") return pg::SamplingMode::GeometricSkip;
  return pg::SamplingMode::Auto;
}

double edge_probability(const Common& c) {
  if (!c.n) throw pg::ConfigError("--n is required");
  if (c.d && c.p) throw pg::ConfigError("give --d or --p, not both");
  if (c.p) return *c.p;
  if (c.d) return *c.n == 0 ? 0.0 : *c.d / static_cast<double>(*c.n);
  throw pg::ConfigError("one of --d or --p is required");
}

json sample_params(const Common& c) {
  json p;
  if (!c.input.empty()) {
    p["input"] = c.input;
    return p;
  }
  p["n"] = *c.n;
  p["p"] = edge_probability(c);
  p["seed"] = c.seed.value_or(1);
  p["sampling"] = c.sampling;
  return p;
}

pg::Graph graph_from(const Common& c) {
  if (!c.input.empty()) return pg::load_graph(c.input);
  const double p = edge_probability(c);
  if (!(p >= 0 && p <= 1)) throw pg::ConfigError("p must lie in [0, 1]");
  pg::RandomSource src(c.seed.value_or(1));
  return pg::gnp_sample(*c.n, p, src, sampling_mode(c.sampling));
}

void emit_line(const std::string& op, const json& params, const json& value) {
  json j;
  j["op"] = op;
  j["params"] = params;
  j["value"] = value;
  std::cout << j.dump() << '\n';
}

// ---- sample / power ---------------------------------------------------------

int cmd_sample(const Common& c) {
  const pg::Graph g = graph_from(c);
  if (!c.out.empty()) pg::save_graph(c.out, g);
  emit_line("sample", sample_params(c),
            {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"max_degree", g.max_degree()}});
  if (c.out.empty()) pg::write_edge_list(std::cout, g);
  return kPass;
}

int cmd_power(const Common& c) {
  const pg::Graph g = graph_from(c);
  const unsigned r = c.radius();
  const pg::Graph power = pg::graph_power(g, r, c.edge_cap.value_or(pg::kDefaultEdgeCap));
  if (!c.out.empty()) pg::save_graph(c.out, power);
  json params = sample_params(c);
  params["r"] = r;
  emit_line("power", params,
            {{"n", power.num_vertices()}, {"m", power.num_edges()},
             {"max_degree", power.max_degree()}});
  if (c.out.empty()) pg::write_edge_list(std::cout, power);
  return kPass;
}

// ---- stats ------------------------------------------------------------------

int cmd_stats(const Common& c, bool exact, bool cycles) {
  const pg::Graph g = graph_from(c);
  const unsigned r = c.radius();
  json base = sample_params(c);
  for (unsigned s = 1; s <= r; ++s) {
    json params = base;
    params["r"] = s;
    const auto sum = pg::power_max_degree(g, s, c.workers);
    emit_line("power_max_degree", params,
              {{"delta", sum.delta},
               {"argmax", sum.argmax == pg::kNoVertex ? -1 : std::int64_t{sum.argmax}}});
  }
  json params = base;
  params["r"] = r;
  emit_line("clique_lower_bound", params, pg::clique_lower_bound(g, r, c.workers));
  const auto cod = pg::codegree_max(g, r, c.workers);
  emit_line("codegree_max", params,
            {{"layer", cod.layer_codegree}, {"power", cod.power_codegree}});
  const auto prev = r >= 2 ? pg::power_max_degree(g, r - 1, c.workers).delta : 0;
  emit_line("high_degree_set_size", params,
            pg::high_degree_set(g, r, r >= 2 ? static_cast<std::int64_t>(prev) : -1,
                                c.workers)
                .size());
  if (cycles) {
    json zp = params;
    zp["t"] = std::min(8 * r, pg::kDefaultMaxCycleLength);
    emit_line("short_cycle_proximity", zp,
              pg::short_cycle_proximity(g, r, std::min(8 * r, pg::kDefaultMaxCycleLength)));
  }
  if (exact) {
    pg::GapBudgets b;
    if (c.clique_budget) b.clique_nodes = b.independence_nodes = *c.clique_budget;
    if (c.chi_budget) b.chromatic_nodes = *c.chi_budget;
    if (c.edge_cap) b.edge_cap = *c.edge_cap;
    const auto gap = pg::conjecture_gap(g, r, b);
    auto bounded = [](const pg::Bounded& x) {
      return json{{"lower", x.lower}, {"upper", x.upper}, {"exact", x.exact}};
    };
    emit_line("conjecture_gap", params,
              {{"omega", bounded(gap.omega)},
               {"alpha", bounded(gap.alpha)},
               {"chi", bounded(gap.chi)},
               {"ratio", gap.ratio},
               {"all_exact", gap.all_exact}});
  }
  return kPass;
}

// ---- color ------------------------------------------------------------------

int cmd_color(const Common& c, const std::string& method) {
  const pg::Graph g = graph_from(c);
  const unsigned r = c.radius();
  pg::Coloring col;
  json extra = json::object();
  if (method == "greedy") {
    col = pg::greedy_power_coloring(g, r);
  } else if (method == "two-phase") {
    try {
      col = pg::two_phase_power_coloring(g, r);
    } catch (const pg::ForestViolation& e) {
      json params = sample_params(c);
      params["r"] = r;
      params["method"] = method;
      emit_line("color", params, {{"forest", false}, {"cycle", e.cycle}});
      return kFail;
    }
  } else {
    const pg::Graph power = pg::graph_power(g, r, c.edge_cap.value_or(pg::kDefaultEdgeCap));
    if (method == "dsatur") {
      col = pg::dsatur_coloring(power);
    } else {
      try {
        auto res = pg::dsatur_chromatic_exact(
            power, c.chi_budget.value_or(pg::kDefaultChromaticBudget));
        col = std::move(res.witness);
        extra["exact"] = true;
      } catch (const pg::BudgetExceeded& e) {
        extra["exact"] = false;
        extra["lower"] = e.lower;
        extra["upper"] = e.upper;
        col = pg::dsatur_coloring(power);
      }
    }
    col.radius = r;
  }
  const auto check = pg::verify_proper_power_coloring(g, r, col, c.workers);
  if (!c.out.empty()) {
    std::ofstream out(c.out);
    if (!out) throw pg::IoError("cannot open '" + c.out + "'");
    pg::write_coloring(out, col);
  }
  json params = sample_params(c);
  params["r"] = r;
  params["method"] = method;
  json value{{"palette", col.palette_size}, {"proper", check.proper}};
  for (auto it = extra.begin(); it != extra.end(); ++it) value[it.key()] = it.value();
  emit_line("color", params, value);
  return check.proper ? kPass : kFail;
}

// ---- eval -------------------------------------------------------------------

double num_in(const json& in, const char* key) {
  if (!in.contains(key) || !in[key].is_number()) {
    throw pg::ConfigError(std::string("missing numeric input '") + key + "'");
  }
  return in[key].get<double>();
}

th::TheoryParams theory_params(const json& in) {
  th::TheoryParams t;
  t.n = in.value("n", 1.0);
  t.d = num_in(in, "d");
  t.r = in.value("r", 1u);
  t.epsilon = in.value("epsilon", 0.1);
  return t;
}

pg::DegreeProfile profile_in(const json& in) {
  if (!in.contains("ell")) throw pg::ConfigError("missing input 'ell'");
  pg::DegreeProfile p;
  p.ell = in["ell"].get<std::vector<std::uint64_t>>();
  return p;
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json evaluate(const std::string& formula, const json& in) {
  if (formula == "iterated_log") {
    return th::iterated_log(num_in(in, "x"), in.value("k", 1u));
  }
  if (formula == "d_star") return th::d_star(num_in(in, "n"), in.value("r", 1u));
  if (formula == "u_value") return th::u_value(profile_in(in), num_in(in, "d"));
  if (formula == "log_u") return finite_or_null(th::log_u(profile_in(in), num_in(in, "d")));
  if (formula == "log_u_stirling") {
    return finite_or_null(th::log_u_stirling(profile_in(in), num_in(in, "d")));
  }
  if (formula == "degree_sum_pmf") {
    return th::degree_sum_pmf(theory_params(in), static_cast<std::uint64_t>(num_in(in, "D")));
  }
  if (formula == "layer_entropy") {
    return finite_or_null(th::layer_entropy_objective(profile_in(in)));
  }
  if (formula == "lemma2_exact") {
    const auto res = th::lemma2_min_exact(static_cast<std::uint64_t>(num_in(in, "D")),
                                          in.value("r", 1u));
    return json{{"value", res.value}, {"argmin", res.argmin.ell}};
  }
  if (formula == "lemma2_lagrange") {
    const auto res = th::lemma2_min_lagrange(num_in(in, "D"), in.value("r", 1u));
    return json{{"value", res.value},
                {"p", res.p},
                {"ell", res.ell},
                {"residual", res.residual},
                {"tower_constant", finite_or_null(res.tower_constant)}};
  }
  if (formula == "janson_k0") return th::janson_k0(theory_params(in));
  if (formula == "janson_mu") return th::janson_mu(theory_params(in), num_in(in, "k"));
  if (formula == "aks_chi_bound") {
    return th::aks_chi_bound(num_in(in, "delta"), num_in(in, "t"), in.value("c", 1.0));
  }
  if (formula == "nu0") return theory_params(in).nu0();
  throw pg::ConfigError("unknown formula '" + formula + "'");
}

int cmd_eval(const std::string& formula, const std::string& inputs, const std::string& batch) {
  auto one = [](const std::string& f, const json& in) {
    json out;
    out["formula"] = f;
    out["inputs"] = in;
    out["value"] = evaluate(f, in);
    std::cout << out.dump() << '\n';
  };
  if (!batch.empty()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (batch != "-") {
      file.open(batch);
      if (!file) throw pg::IoError("cannot open '" + batch + "'");
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      if (line.empty()) continue;
      const json req = json::parse(line);
      one(req.at("formula").get<std::string>(), req.value("inputs", json::object()));
    }
    return kPass;
  }
  if (formula.empty()) throw pg::ConfigError("--formula or --batch is required");
  one(formula, inputs.empty() ? json::object() : json::parse(inputs));
  return kPass;
}

// ---- experiment / verify-theorem --------------------------------------------

void apply_overrides(pg::ExperimentConfig& cfg, const Common& c, const CLI::App& app) {
  if (c.n) cfg.n = *c.n;
  if (c.d) {
    cfg.d_value = *c.d;
    cfg.p_value.reset();
  }
  if (c.p) {
    cfg.p_value = *c.p;
    cfg.d_value.reset();
  }
  if (c.r) cfg.r = *c.r;
  if (c.epsilon) cfg.epsilon = *c.epsilon;
  if (c.seed) cfg.seed = *c.seed;
  if (c.trials) cfg.trials = *c.trials;
  if (c.clique_budget) cfg.clique_budget = *c.clique_budget;
  if (c.chi_budget) cfg.chi_budget = *c.chi_budget;
  if (c.edge_cap) cfg.edge_cap = *c.edge_cap;
  if (app.count("--workers")) cfg.workers = c.workers;
  if (!c.out.empty()) cfg.out = c.out;
  if (app.count("--format")) cfg.format = pg::parse_format(c.format);
}

int cmd_experiment(const std::string& path, const Common& c, const CLI::App& app,
                   bool timing) {
  pg::ExperimentConfig cfg = pg::load_config(path);
  apply_overrides(cfg, c, app);
  if (timing) cfg.timing = true;
  const auto result = pg::run_experiment(cfg);
  std::cout << result.summary.to_json() << '\n';
  return result.summary.passed() ? kPass : kFail;
}

int cmd_verify(const std::string& theorem, const Common& c) {
  pg::VerifyOverrides o;
  o.n = c.n;
  o.d = c.d;
  o.p = c.p;
  o.r = c.r;
  o.epsilon = c.epsilon;
  o.trials = c.trials;
  o.seed = c.seed;
  o.clique_budget = c.clique_budget;
  o.chi_budget = c.chi_budget;
  o.edge_cap = c.edge_cap;
  o.workers = c.workers;
  o.out = c.out;
  o.format = pg::parse_format(c.format);
  const auto report = pg::verify_theorem(theorem, o);
  std::cout << report.to_json() << '\n';
  for (const auto& s : report.campaigns) {
    for (const auto& g : s.gates) {
      std::cerr << (g.passed ? "PASS " : "FAIL ") << s.kind << ' ' << g.name << ": "
                << g.detail << '\n';
    }
  }
  for (const auto& g : report.gates) {
    std::cerr << (g.passed ? "PASS " : "FAIL ") << g.name << ": " << g.detail << '\n';
  }
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph powers of sparse random graphs: sampling, metrics, colorings"};
  app.require_subcommand(1);

  Common c;
  std::string method = "greedy";
  std::string formula;
  std::string inputs;
  std::string batch;
  std::string config_path;
  std::string theorem;
  bool exact = false;
  bool cycles = false;
  bool timing = false;

  auto* sample = app.add_subcommand("sample", "sample G(n,p) and write its edge list");
  add_common(sample, c);
  add_graph_source(sample, c);

  auto* power = app.add_subcommand("power", "materialize G^r");
  add_common(power, c);
  add_graph_source(power, c);

  auto* stats = app.add_subcommand("stats", "power-degree statistics as JSON lines");
  add_common(stats, c);
  add_graph_source(stats, c);
  stats->add_flag("--exact", exact, "also compute omega, alpha and chi of G^r");
  stats->add_flag("--cycles", cycles, "also compute the short-cycle proximity set size");

  auto* color = app.add_subcommand("color", "color G^r");
  add_common(color, c);
  add_graph_source(color, c);
  color->add_option("--method", method, "coloring method")
      ->check(CLI::IsMember({"greedy", "two-phase", "dsatur", "exact"}));

  auto* eval = app.add_subcommand("eval", "evaluate a closed-form quantity");
  eval->add_option("--formula", formula, "formula name");
  eval->add_option("--inputs", inputs, "JSON object of inputs");
  eval->add_option("--batch", batch, "JSON lines {formula, inputs}; '-' for stdin");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo campaigns");
  experiment->require_subcommand(1);
  auto* run = experiment->add_subcommand("run", "run a campaign from a config file");
  run->add_option("config", config_path, "config file")->required();
  add_common(run, c);
  run->add_flag("--timing", timing, "add a wall_ms column to the records");

  auto* verify = app.add_subcommand("verify-theorem", "run the regression gates of a claim");
  verify->add_option("theorem", theorem, "th1, th2, th3, th4 or lemma-clique")->required();
  add_common(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfig;
  }

  try {
    if (*sample) return cmd_sample(c);
    if (*power) return cmd_power(c);
    if (*stats) return cmd_stats(c, exact, cycles);
    if (*color) return cmd_color(c, method);
    if (*eval) return cmd_eval(formula, inputs, batch);
    if (*run) return cmd_experiment(config_path, c, *run, timing);
    if (*verify) return cmd_verify(theorem, c);
  } catch (const pg::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const pg::Error& e) {
    std::cerr << "error (" << pg::to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == pg::ErrorCode::BudgetExceeded ? kFail : kConfig;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  }
  return kConfig;
}
