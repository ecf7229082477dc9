/*!
  \file simulation.hpp
  \brief Bit-parallel simulation and output error metrics
*/

#pragma once

#include <quadol/netlist.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace quadol
{

enum class StimulusMode : uint8_t
{
  exhaustive,
  monte_carlo
};

std::string_view to_string( StimulusMode mode );

/*! \brief When to enumerate all input vectors and how to sample otherwise. */
struct SamplePolicy
{
  uint32_t exhaustive_limit{ 16u };
  uint64_t samples{ 100000u };
  uint64_t seed{ 0u };
};

/*! \brief Input vectors packed 64 per word, one word row per primary input.

  Vector j sets PI i to bit (j % 64) of word (j / 64) of row i. In
  exhaustive mode vector j assigns bit i of j to PI i.
*/
class StimulusSet
{
public:
  static StimulusSet exhaustive( std::size_t num_pis );
  /*! \brief Uniform samples from mt19937_64, filled word by word and PI by PI within a word. */
  static StimulusSet monte_carlo( std::size_t num_pis, uint64_t count, uint64_t seed );
  static StimulusSet for_inputs( std::size_t num_pis, const SamplePolicy& policy );

  StimulusMode mode() const noexcept { return mode_; }
  std::size_t num_pis() const noexcept { return rows_.size(); }
  uint64_t num_vectors() const noexcept { return num_vectors_; }
  std::size_t num_words() const noexcept { return num_words_; }
  uint64_t seed() const noexcept { return seed_; }
  std::span<const uint64_t> pi_words( std::size_t pi ) const { return rows_.at( pi ); }

  /*! \brief Valid bits of word `w`. */
  uint64_t word_mask( std::size_t w ) const noexcept;

private:
  StimulusMode mode_{ StimulusMode::exhaustive };
  uint64_t num_vectors_{ 0u };
  std::size_t num_words_{ 0u };
  uint64_t seed_{ 0u };
  std::vector<std::vector<uint64_t>> rows_;
};

using Signature = std::vector<uint64_t>;

/*! \brief Values of every net, indexed by SignalId::value; undriven nets stay empty. */
struct SimulationState
{
  std::size_t num_words{ 0u };
  std::vector<Signature> values;
};

SimulationState simulate_all( const LutNetwork& net, const StimulusSet& stim );

/*! \brief Output signatures in primary output order. */
std::vector<Signature> simulate( const LutNetwork& net, const StimulusSet& stim );

std::vector<Signature> output_signatures( const LutNetwork& net, const SimulationState& state );

/*! \brief Output signatures of `modified` given the state of a network it was derived from.

  `modified` may differ from the simulated network only in the functions
  and fanins of `changed` nodes and of nodes whose fanins shrank. Only the
  transitive fanout of `changed` is recomputed.
*/
std::vector<Signature> resimulate_cone( const LutNetwork& modified, const SimulationState& base,
                                        std::span<const SignalId> changed );

/*! \brief Repeated cone resimulation against one base network.

  Caches the base topological order and fanout lists. Valid for networks
  that only change node functions and drop fanins.
*/
class ConeSimulator
{
public:
  ConeSimulator( const LutNetwork& base, const StimulusSet& stim );

  const SimulationState& state() const noexcept { return state_; }
  std::vector<Signature> base_outputs() const;
  std::vector<Signature> resimulate( const LutNetwork& modified, std::span<const SignalId> changed ) const;

private:
  SimulationState state_;
  std::vector<SignalId> order_;
  std::vector<std::vector<SignalId>> fanouts_;
  std::vector<SignalId> pos_;
};

/*! \brief Numeric reading of the output vector: weight 2^i for the i-th output, or reversed. */
struct WordSpec
{
  bool msb_first{ false };
};

enum class Metric : uint8_t
{
  er,
  mred
};

std::string_view to_string( Metric metric );

struct ErrorReport
{
  double er{ 0.0 };
  double mred{ 0.0 };
  uint64_t sample_count{ 0u };
  uint64_t differing{ 0u };
  StimulusMode mode{ StimulusMode::exhaustive };

  double value( Metric metric ) const noexcept { return metric == Metric::er ? er : mred; }
};

double error_rate( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors );
double mred( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors, WordSpec word = {} );
ErrorReport compare_outputs( std::span<const Signature> exact, std::span<const Signature> approx,
                             const StimulusSet& stim, WordSpec word = {} );

/*! \brief Error of networks derived from `base`, measured against an exact reference.

  Both networks must have the same interface. One stimulus set is drawn
  for the evaluator's lifetime.
*/
class ErrorEvaluator
{
public:
  ErrorEvaluator( const LutNetwork& exact_ref, const LutNetwork& base, const SamplePolicy& policy, WordSpec word );

  const StimulusSet& stimulus() const noexcept { return stim_; }
  WordSpec word() const noexcept { return word_; }

  ErrorReport evaluate( const LutNetwork& net ) const;
  ErrorReport evaluate_base() const;
  /*! \brief Error of `modified`, a derivative of the base network, via cone resimulation. */
  ErrorReport evaluate_incremental( const LutNetwork& modified, std::span<const SignalId> changed ) const;

private:
  StimulusSet stim_;
  WordSpec word_;
  std::vector<Signature> exact_outputs_;
  ConeSimulator base_;
};

} // namespace quadol
