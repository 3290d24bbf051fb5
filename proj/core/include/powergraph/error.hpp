#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace powergraph {

enum class ErrorCode {
  MemoryBudget,
  BudgetExceeded,
  ForestViolation,
  Domain,
  NoConvergence,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Explicit materialization would exceed the configured edge cap.
class MemoryBudgetError : public Error {
 public:
  MemoryBudgetError(std::uint64_t requested, std::uint64_t cap);

  std::uint64_t requested;
  std::uint64_t cap;
};

/// An exact search ran out of nodes. `lower`/`upper` are the best bounds
/// known when the search stopped.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t lower, std::size_t upper)
      : Error(ErrorCode::BudgetExceeded, what), lower(lower), upper(upper) {}

  std::size_t lower;
  std::size_t upper;
};

/// G[S u N_r(S)] is not a forest; `cycle` lists one cycle in original
/// vertex indices, starting from its smallest vertex.
class ForestViolation : public Error {
 public:
  explicit ForestViolation(std::vector<std::uint32_t> cycle);

  std::vector<std::uint32_t> cycle;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Domain, what) {}
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double lo, double hi)
      : Error(ErrorCode::NoConvergence, what), lo(lo), hi(hi) {}

  double lo;
  double hi;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCode::Config, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace powergraph
