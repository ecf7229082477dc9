/*!
  \file pairs.hpp
  \brief Mergable LUT pairs and their conflict graph
*/

#pragma once

#include <quadol/lut6_2.hpp>
#include <quadol/netlist.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace quadol
{

/*! \brief A LUT pair that can be packed into one LUT6_2.

  For shared5-65 pairs `f` is the LUT-6 and `m` its unique input; for
  shared5-66 pairs `m` and `n` are the unique inputs of `f` and `g`.
  `shared` lists the common inputs in the order of `f`'s fanins.
*/
struct PairCandidate
{
  SignalId f;
  SignalId g;
  MergeType type{ MergeType::shared6 };
  std::vector<SignalId> shared;
  std::optional<SignalId> m;
  std::optional<SignalId> n;
  std::optional<DualOutputConfig> config;
  std::optional<double> estimated_error;
};

/*! \brief Every mergable pair of a support-normalized network.

  Nodes whose fanin count is not 5 or 6 are skipped, as are pairs where one
  member directly feeds the other. The result is sorted by member names.
*/
std::vector<PairCandidate> enumerate_pairs( const LutNetwork& net );

/*! \brief Pair type of nodes `a` and `b`, or nothing if they are not mergable. */
std::optional<PairCandidate> classify_pair( const LutNetwork& net, SignalId a, SignalId b );

/*! \brief Graph with one vertex per LUT and one edge per candidate pair. */
struct ConflictGraph
{
  std::vector<SignalId> vertices;
  std::vector<PairCandidate> edges;

  std::size_t vertex_index( SignalId s ) const;
};

/*! \brief Builds the conflict graph, collapsing parallel edges.

  Of two candidates over the same two LUTs the one with the smaller
  estimated error survives, or the smaller structural HD when errors are
  not available; the earlier one wins ties.
*/
ConflictGraph build_conflict_graph( std::vector<PairCandidate> candidates );

} // namespace quadol
