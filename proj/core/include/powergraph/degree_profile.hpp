#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace powergraph {

/// BFS layer sizes (l_1, ..., l_r) around a vertex; l_0 = 1 is implicit.
///
/// D = sum of l_i is the degree of the vertex in G^r. A profile is feasible
/// when no zero layer precedes a nonzero one.
struct DegreeProfile {
  std::vector<std::uint64_t> ell;

  DegreeProfile() = default;
  explicit DegreeProfile(std::vector<std::uint64_t> layers) : ell(std::move(layers)) {}
  DegreeProfile(std::initializer_list<std::uint64_t> layers) : ell(layers) {}

  std::size_t radius() const noexcept { return ell.size(); }
  std::uint64_t total() const noexcept;
  /// Product of the nonzero layers, as a double (can be huge).
  double product() const noexcept;
  bool feasible() const noexcept;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

}  // namespace powergraph
