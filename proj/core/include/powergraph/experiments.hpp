#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powergraph/config.hpp"
#include "powergraph/records.hpp"

namespace powergraph {

/// A pass/fail threshold applied to a summary. Thresholds are regression
/// choices for finite n, not exact claims.
struct Gate {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ExperimentSummary {
  std::string kind;
  std::string config_hash;
  std::size_t trials = 0;
  std::size_t failed_trials = 0;  // trials that hit a budget or domain error
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<Gate> gates;

  double metric(std::string_view name) const;  // NaN when absent
  bool passed() const;
  std::string to_json() const;
};

struct ExperimentResult {
  ExperimentSummary summary;
  std::vector<TrialRecord> records;  // in trial order
};

/// Column names of the records a kind produces, after trial/seed/config_hash.
std::vector<std::string> record_columns(const ExperimentConfig& cfg);

/// Runs a single trial (index `trial`) of `cfg`. Budget errors are caught and
/// reported through the `status` field.
TrialRecord run_trial(const ExperimentConfig& cfg, std::uint64_t trial);

/// Validates cfg, runs every trial on cfg.workers threads and streams the
/// records, in trial order, to cfg.out when set.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Summary statistics and gates for a finished record stream.
ExperimentSummary summarize(const ExperimentConfig& cfg,
                            const std::vector<TrialRecord>& records);

struct VerifyOverrides {
  std::optional<std::size_t> n;
  std::optional<double> d;
  std::optional<double> p;
  std::optional<unsigned> r;
  std::optional<double> epsilon;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> clique_budget;
  std::optional<std::uint64_t> chi_budget;
  std::optional<std::uint64_t> edge_cap;
  unsigned workers = 1;
  std::string out;  // records of every campaign are appended per campaign
  RecordFormat format = RecordFormat::Csv;
};

struct VerifyReport {
  std::string theorem;
  std::vector<ExperimentSummary> campaigns;
  std::vector<Gate> gates;  // cross-campaign gates (trend checks)
  bool passed() const;
  std::string to_json() const;
};

/// Known names: th1, th2, th3, th4, lemma-clique. Throws ConfigError for
/// anything else.
std::vector<ExperimentConfig> verify_configs(std::string_view theorem,
                                             const VerifyOverrides& o);
VerifyReport verify_theorem(std::string_view theorem, const VerifyOverrides& o);

}  // namespace powergraph
