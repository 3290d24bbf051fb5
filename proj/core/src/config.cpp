#include "powergraph/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "powergraph/error.hpp"

namespace powergraph {

namespace {

struct KindName {
  ExperimentKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {ExperimentKind::DeltaConcentration, "delta-concentration"},
    {ExperimentKind::Chi2Equality, "chi2-equality"},
    {ExperimentKind::ChiSandwich, "chi-sandwich"},
    {ExperimentKind::DenseChi, "dense-chi"},
    {ExperimentKind::CliqueSandwich, "clique-sandwich"},
    {ExperimentKind::DegreePmf, "degree-pmf"},
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_integer(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("bad integer for '" + std::string(key) + "': '" +
                      std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  // std::from_chars for double is available in libstdc++ 11.
  double out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    throw ConfigError("bad number for '" + std::string(key) + "': '" +
                      std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("bad boolean for '" + std::string(key) + "': '" +
                    std::string(value) + "'");
}

// Scientific notation like 1e6 is common for n; accept it when integral.
std::size_t parse_count(std::string_view key, std::string_view value) {
  if (value.find_first_of("eE.") != std::string_view::npos) {
    const double x = parse_real(key, value);
    if (x < 0 || x != std::floor(x) || x > 9.0e15) {
      throw ConfigError("'" + std::string(key) + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(x);
  }
  return parse_integer<std::size_t>(key, value);
}

std::string real_text(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

const char* to_string(ExperimentKind kind) noexcept {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

ExperimentKind parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) + "'");
}

const char* to_string(RecordFormat f) noexcept {
  return f == RecordFormat::Csv ? "csv" : "jsonl";
}

RecordFormat parse_format(std::string_view name) {
  if (name == "csv") return RecordFormat::Csv;
  if (name == "jsonl") return RecordFormat::Jsonl;
  throw ConfigError("unknown record format '" + std::string(name) + "'");
}

double ExperimentConfig::d() const {
  if (d_value) return *d_value;
  if (p_value) return *p_value * static_cast<double>(n);
  throw ConfigError("one of d or p must be set");
}

double ExperimentConfig::p() const {
  if (p_value) return *p_value;
  if (d_value) return n == 0 ? 0.0 : *d_value / static_cast<double>(n);
  throw ConfigError("one of d or p must be set");
}

unsigned ExperimentConfig::z_s() const noexcept { return z_radius ? z_radius : r; }

unsigned ExperimentConfig::z_t() const noexcept {
  if (z_cycle) return z_cycle;
  return std::min(8 * r, 16u);
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (n < 1) throw ConfigError("n must be >= 1");
  if (n >= (std::size_t{1} << 32)) throw ConfigError("n must fit in 32 bits");
  if (r < 1) throw ConfigError("r must be >= 1");
  if (d_value && p_value) throw ConfigError("set d or p, not both");
  if (!d_value && !p_value) throw ConfigError("one of d or p must be set");
  const double pv = p();
  if (!(pv >= 0 && pv <= 1)) throw ConfigError("p must lie in [0, 1]");
  if (!(epsilon > 0 && epsilon < 1.0 / r)) {
    throw ConfigError("epsilon must lie in (0, 1/r)");
  }
  if (z_cycle > 16) throw ConfigError("z_cycle must be <= 16");
  const double dv = d();
  switch (kind) {
    case ExperimentKind::Chi2Equality:
      if (r != 2) throw ConfigError("chi2-equality requires r = 2");
      break;
    case ExperimentKind::ChiSandwich:
      if (r < 2) throw ConfigError("chi-sandwich requires r >= 2");
      break;
    case ExperimentKind::DenseChi:
      if (!(dv > std::log(static_cast<double>(n)))) {
        throw ConfigError("dense-chi requires d > log n");
      }
      if (!(dv > 1)) throw ConfigError("dense-chi requires d > 1");
      break;
    case ExperimentKind::DegreePmf:
      if (d_max > 60) throw ConfigError("d_max must be <= 60");
      break;
    case ExperimentKind::DeltaConcentration:
    case ExperimentKind::CliqueSandwich:
      break;
  }
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream os;
  os << "kind=" << to_string(kind) << '\n'
     << "n=" << n << '\n';
  if (d_value) os << "d=" << real_text(*d_value) << '\n';
  if (p_value) os << "p=" << real_text(*p_value) << '\n';
  os << "r=" << r << '\n'
     << "epsilon=" << real_text(epsilon) << '\n'
     << "trials=" << trials << '\n'
     << "seed=" << seed << '\n'
     << "clique_budget=" << clique_budget << '\n'
     << "chi_budget=" << chi_budget << '\n'
     << "edge_cap=" << edge_cap << '\n'
     << "sampling=" << to_string(sampling) << '\n'
     << "d_max=" << d_max << '\n'
     << "z_s=" << z_s() << '\n'
     << "z_t=" << z_t() << '\n';
  return os.str();
}

std::string ExperimentConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "kind") {
    cfg.kind = parse_kind(value);
  } else if (key == "n") {
    cfg.n = parse_count(key, value);
  } else if (key == "d") {
    cfg.d_value = parse_real(key, value);
  } else if (key == "p") {
    cfg.p_value = parse_real(key, value);
  } else if (key == "r") {
    cfg.r = parse_integer<unsigned>(key, value);
  } else if (key == "epsilon") {
    cfg.epsilon = parse_real(key, value);
  } else if (key == "trials") {
    cfg.trials = parse_count(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "clique_budget") {
    cfg.clique_budget = parse_count(key, value);
  } else if (key == "chi_budget") {
    cfg.chi_budget = parse_count(key, value);
  } else if (key == "edge_cap") {
    cfg.edge_cap = parse_count(key, value);
  } else if (key == "sampling") {
    if (value == "auto") {
      cfg.sampling = SamplingMode::Auto;
    } else if (value == "pairwise") {
      cfg.sampling = SamplingMode::Pairwise;
    } else if (value == "skip") {
      cfg.sampling = SamplingMode::GeometricSkip;
    } else {
      throw ConfigError("sampling must be auto, pairwise or skip");
    }
  } else if (key == "d_max") {
    cfg.d_max = parse_count(key, value);
  } else if (key == "z_s") {
    cfg.z_radius = parse_integer<unsigned>(key, value);
  } else if (key == "z_t") {
    cfg.z_cycle = parse_integer<unsigned>(key, value);
  } else if (key == "workers") {
    cfg.workers = parse_integer<unsigned>(key, value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "timing") {
    cfg.timing = parse_bool(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const auto key = trim(s.substr(0, eq));
    const auto value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    }
    try {
      apply_setting(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse_config(in);
}

}  // namespace powergraph
