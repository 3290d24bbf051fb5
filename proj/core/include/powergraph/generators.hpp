#pragma once

#include <cstddef>
#include <cstdint>

#include "powergraph/graph.hpp"
#include "powergraph/random.hpp"

namespace powergraph {

/// How G(n, p) pair decisions consume the random stream.
///
/// Pairwise: one uniform draw per pair {i, j}, i < j, in lexicographic order;
/// the pair is an edge iff the draw is < p.
///
/// GeometricSkip: walks the same lexicographic pair order but jumps over
/// floor(log(1 - U) / log(1 - p)) non-edges per draw. Same distribution,
/// different stream consumption, O(n + m) time.
///
/// Auto resolves deterministically from (n, p): Pairwise when the pair count
/// is at most kPairwiseLimit, GeometricSkip otherwise.
enum class SamplingMode { Auto, Pairwise, GeometricSkip };

inline constexpr std::uint64_t kPairwiseLimit = std::uint64_t{1} << 24;

SamplingMode resolve_sampling_mode(std::size_t n, SamplingMode mode) noexcept;
const char* to_string(SamplingMode mode) noexcept;  // auto, pairwise, skip

/// Binomial random graph G(n, p). Throws std::invalid_argument for p outside
/// [0, 1].
Graph gnp_sample(std::size_t n, double p, RandomSource& src,
                 SamplingMode mode = SamplingMode::Auto);

// Deterministic families used by tests, benchmarks and the sandwich suite.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// K_{1,leaves} with the center at index 0.
Graph star_graph(std::size_t leaves);
Graph empty_graph(std::size_t n);
Graph petersen_graph();
Graph grid_graph(std::size_t rows, std::size_t cols);
/// Uniform random labelled tree (Pruefer sequence).
Graph random_tree(std::size_t n, RandomSource& src);

}  // namespace powergraph
