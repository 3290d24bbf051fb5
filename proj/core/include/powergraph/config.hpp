#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "powergraph/clique.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph_ops.hpp"

namespace powergraph {

enum class ExperimentKind {
  DeltaConcentration,
  Chi2Equality,
  ChiSandwich,
  DenseChi,
  CliqueSandwich,
  DegreePmf,
};

const char* to_string(ExperimentKind kind) noexcept;
/// Throws ConfigError for unknown names.
ExperimentKind parse_kind(std::string_view name);

enum class RecordFormat { Csv, Jsonl };

const char* to_string(RecordFormat f) noexcept;
RecordFormat parse_format(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::DeltaConcentration;
  std::size_t n = 1000;
  // Exactly one of d and p is meaningful; the other is derived (d = n p).
  std::optional<double> d_value;
  std::optional<double> p_value;
  unsigned r = 2;
  double epsilon = 0.1;
  std::size_t trials = 1;
  std::uint64_t seed = 1;

  std::uint64_t clique_budget = kDefaultCliqueBudget;
  std::uint64_t chi_budget = kDefaultChromaticBudget;
  std::uint64_t edge_cap = kDefaultEdgeCap;
  SamplingMode sampling = SamplingMode::Auto;

  // degree-pmf: largest power degree tallied individually.
  std::uint64_t d_max = 15;
  // Short-cycle proximity Z_{s,t}; 0 means "derive from r" (s = r,
  // t = min(8r, 16)).
  unsigned z_radius = 0;
  unsigned z_cycle = 0;

  // Not part of the result: scheduling and output only.
  unsigned workers = 1;
  std::string out;
  RecordFormat format = RecordFormat::Csv;
  bool timing = false;

  double d() const;
  double p() const;
  unsigned z_s() const noexcept;
  unsigned z_t() const noexcept;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// Result-affecting fields as `key=value` lines in fixed order.
  std::string canonical() const;
  /// FNV-1a 64 of canonical(), as 16 hex digits.
  std::string hash() const;
};

/// Applies one `key = value` setting. Unknown keys and malformed values throw
/// ConfigError.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Flat `key = value` text, `#` starts a comment. Does not validate.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

}  // namespace powergraph
