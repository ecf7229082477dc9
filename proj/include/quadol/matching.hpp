/*!
  \file matching.hpp
  \brief Maximum cardinality matching on general graphs
*/

#pragma once

#include <quadol/pairs.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace quadol
{

/*! \brief Indices into ConflictGraph::edges, ascending. */
struct Matching
{
  std::vector<std::size_t> edges;

  std::size_t size() const noexcept { return edges.size(); }
  friend bool operator==( const Matching&, const Matching& ) = default;
};

using Edge = std::pair<uint32_t, uint32_t>;

/*! \brief Edmonds' blossom algorithm; returns the mate of each vertex or -1. */
std::vector<int32_t> maximum_matching( std::size_t num_vertices, std::span<const Edge> edges );

Matching maximum_matching( const ConflictGraph& graph );

/*! \brief Up to `k` matchings, deleting one random edge of each solution before the next search.

  Stops early once no edge is left. Results only depend on `seed`.
*/
std::vector<Matching> k_random_matchings( const ConflictGraph& graph, uint32_t k, uint64_t seed );

/*! \brief Uniform integer in [0, bound) by rejection; identical on every platform. */
uint64_t bounded_draw( std::mt19937_64& rng, uint64_t bound );

} // namespace quadol
