/*!
  \file dual_output.hpp
  \brief Error-optimal LUT6_2 configurations and merge application
*/

#pragma once

#include <quadol/lut6_2.hpp>
#include <quadol/netlist.hpp>
#include <quadol/pairs.hpp>
#include <quadol/simulation.hpp>

#include <span>
#include <vector>

namespace quadol
{

/*! \brief F and G of a pair, each over its own ordered signal list.

  shared6: both tables over `f_signals` (= `g_signals`).
  shared5-66: F over shared + m, G over shared + n.
  shared5-65: F over shared + m, G over shared.
*/
struct PairFrame
{
  MergeType type{ MergeType::shared6 };
  TruthTable f;
  TruthTable g;
  std::vector<SignalId> f_signals;
  std::vector<SignalId> g_signals;
};

PairFrame make_frame( const LutNetwork& net, const PairCandidate& pair );

/*! \brief Every configuration of the pair's table rows for the given polarity variants.

  Variant 0 is (F, G), 1 is (NOT F, G), 2 is (F, NOT G). Each result
  carries its exhaustively evaluated structural HD.
*/
std::vector<DualOutputConfig> enumerate_configurations( const PairFrame& frame, std::span<const uint32_t> variants );

/*! \brief Configurations of minimum structural HD, ordered by (row, split variable, variant, choice). */
std::vector<DualOutputConfig> minimal_configurations( const PairFrame& frame, std::span<const uint32_t> variants );

DualOutputConfig optimize_shared6( const TruthTable& f, const TruthTable& g, std::span<const SignalId> inputs );
DualOutputConfig optimize_shared5_66( const TruthTable& f, const TruthTable& g, std::span<const SignalId> shared,
                                      SignalId m, SignalId n );
DualOutputConfig optimize_shared5_65( const TruthTable& f, const TruthTable& g, std::span<const SignalId> shared,
                                      SignalId m );

/*! \brief Polarity variants allowed for a pair: members driving outputs are never negated. */
std::vector<uint32_t> allowed_variants( const LutNetwork& net, const PairCandidate& pair );

/*! \brief Best configuration of a pair over all rows and allowed variants.

  HD ties are decided by simulated output error when `sim` is given, then
  by the configuration order.
*/
DualOutputConfig optimize_pair( const LutNetwork& net, const PairCandidate& pair,
                                const ErrorEvaluator* sim = nullptr, Metric metric = Metric::er );

/*! \brief Candidate whose provisional merge gives the least output error. */
DualOutputConfig resolve_choice_by_simulation( const LutNetwork& net, const PairCandidate& pair,
                                               std::span<const DualOutputConfig> candidates,
                                               const ErrorEvaluator& sim, Metric metric );

struct MergeRequest
{
  SignalId f;
  SignalId g;
  DualOutputConfig config;
};

/*! \brief Nodes whose function changes when the merge is applied to `net`. */
std::vector<SignalId> merge_touched_nodes( const LutNetwork& net, std::span<const MergeRequest> merges );

/*! \brief Applies a set of non-conflicting merges at once.

  Members take their port functions shrunk to support; fanouts of negated
  members consume the complement. Throws NetworkError for conflicting
  members, already merged members or a negated output driver.
*/
LutNetwork apply_merges( const LutNetwork& net, std::span<const MergeRequest> merges );

LutNetwork apply_merge( const LutNetwork& net, const PairCandidate& pair, const DualOutputConfig& config );

} // namespace quadol
