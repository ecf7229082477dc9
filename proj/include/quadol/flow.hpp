/*!
  \file flow.hpp
  \brief Error-bounded merging flow and its multi-netlist driver
*/

#pragma once

#include <quadol/matching.hpp>
#include <quadol/netlist.hpp>
#include <quadol/pairs.hpp>
#include <quadol/simulation.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quadol
{

/*! \brief Flow settings. `sampling.seed` is ignored; sampling uses `seed`. */
struct FlowParams
{
  Metric metric{ Metric::er };
  double bound{ 0.0 };
  uint32_t k{ 16u };
  uint64_t seed{ 0u };
  SamplePolicy sampling{};
  WordSpec word{};
  /*! worker threads; 0 means all available cores */
  unsigned jobs{ 1u };
};

/*! \brief Throws std::invalid_argument for a negative bound, an ER bound above 1 or k = 0. */
void validate( const FlowParams& params );

struct ProbeTrace
{
  std::size_t iteration{ 0u };
  std::size_t prefix{ 0u };
  std::size_t lo{ 0u };
  std::size_t hi{ 0u };
  uint64_t seed{ 0u };
  std::size_t graph_vertices{ 0u };
  std::size_t graph_edges{ 0u };
  std::vector<std::size_t> matching_sizes;
  std::vector<double> matching_errors;
  std::size_t distinct_matchings{ 0u };
  bool feasible{ false };
};

struct FlowResult
{
  LutNetwork network;
  ErrorReport base_error;
  ErrorReport error;
  bool base_feasible{ false };
  /*! output error within the bound */
  bool feasible{ false };
  std::size_t exact_luts{ 0u };
  std::size_t base_luts{ 0u };
  std::size_t luts{ 0u };
  double area_ratio{ 1.0 };
  /*! candidates sorted by estimated error, with configurations */
  std::vector<PairCandidate> candidates;
  std::vector<ProbeTrace> trace;

  std::size_t merged_pairs() const noexcept { return network.merges().size(); }
};

uint64_t splitmix64( uint64_t x );

/*! \brief Runs `body(i)` for i in [0, count) on up to `jobs` threads. */
void parallel_for( std::size_t count, unsigned jobs, const std::function<void( std::size_t )>& body );

/*! \brief Optimizes every candidate's configuration on `base` (HD ties settled by simulation). */
void optimize_candidates( const LutNetwork& base, std::vector<PairCandidate>& candidates,
                          const ErrorEvaluator& sim, Metric metric, unsigned jobs );

/*! \brief Output error of each candidate merged alone into `base`. */
void estimate_pair_errors( const LutNetwork& base, std::vector<PairCandidate>& candidates,
                           const ErrorEvaluator& sim, Metric metric, unsigned jobs );

/*! \brief Same, drawing the stimulus from `params`; candidates must carry configurations. */
std::vector<PairCandidate> estimate_all_pair_errors( const LutNetwork& exact_ref, const LutNetwork& base_net,
                                                     std::vector<PairCandidate> candidates, const FlowParams& params );

/*! \brief Merges pairs of `base_net` while the error against `exact_ref` stays within the bound. */
FlowResult run_quadol( const LutNetwork& exact_ref, const LutNetwork& base_net, const FlowParams& params );

struct NamedNetwork
{
  std::string name;
  LutNetwork network;
};

struct PlusRun
{
  std::string name;
  bool skipped{ false };
  std::string warning;
  std::optional<FlowResult> result;
};

struct PlusResult
{
  /*! the run on the exact network first, then one per intermediate */
  std::vector<PlusRun> runs;
  std::optional<std::size_t> winner;

  const FlowResult& best() const;
};

/*! \brief Runs the flow on the exact network and on every intermediate; keeps the smallest feasible result. */
PlusResult run_quadol_plus( const LutNetwork& exact_ref, std::span<const NamedNetwork> intermediates, const FlowParams& params );

} // namespace quadol
