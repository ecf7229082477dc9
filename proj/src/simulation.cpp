/*!
  \file simulation.cpp
  \brief Bit-parallel simulation and output error metrics
*/

#include <quadol/simulation.hpp>

#include <fmt/format.h>

#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace quadol
{

namespace
{

constexpr std::array<uint64_t, 6> projections{
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

uint64_t valid_bits( uint64_t num_vectors, std::size_t w )
{
  const uint64_t begin = uint64_t{ 64 } * w;
  if ( begin >= num_vectors )
  {
    return 0u;
  }
  const uint64_t left = num_vectors - begin;
  return left >= 64u ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << left ) - 1u );
}

/* mux-tree evaluation of one LUT over all words */
void evaluate_node( const TruthTable& t, std::span<const uint64_t* const> inputs, std::size_t num_words, uint64_t* out )
{
  const auto k = t.num_vars();
  const auto n = t.num_bits();
  std::array<uint64_t, 64> leaves{};
  for ( uint32_t j = 0u; j < n; ++j )
  {
    leaves[j] = ( ( t.bits() >> j ) & 1u ) ? ~uint64_t{ 0 } : 0u;
  }
  std::array<uint64_t, 64> buf{};
  for ( std::size_t w = 0u; w < num_words; ++w )
  {
    std::copy( leaves.begin(), leaves.begin() + n, buf.begin() );
    for ( uint32_t v = k; v-- > 0u; )
    {
      const uint64_t x = inputs[v][w];
      const uint32_t half = 1u << v;
      for ( uint32_t j = 0u; j < half; ++j )
      {
        buf[j] = ( x & buf[j + half] ) | ( ~x & buf[j] );
      }
    }
    out[w] = buf[0];
  }
}

void check_pis( const LutNetwork& net, const StimulusSet& stim )
{
  if ( net.pis().size() != stim.num_pis() )
  {
    throw std::invalid_argument( fmt::format( "stimulus has {} inputs, network '{}' has {}",
                                              stim.num_pis(), net.model_name(), net.pis().size() ) );
  }
}

std::vector<Signature> resimulate_impl( const LutNetwork& modified, const SimulationState& base,
                                        std::span<const SignalId> changed, std::span<const SignalId> order,
                                        const std::vector<std::vector<SignalId>>& fanouts )
{
  std::vector<char> in_cone( modified.num_signals(), 0 );
  std::vector<SignalId> queue( changed.begin(), changed.end() );
  for ( auto s : queue )
  {
    in_cone[s.value] = 1;
  }
  for ( std::size_t i = 0u; i < queue.size(); ++i )
  {
    if ( queue[i].value >= fanouts.size() )
    {
      continue;
    }
    for ( auto fo : fanouts[queue[i].value] )
    {
      if ( !in_cone[fo.value] )
      {
        in_cone[fo.value] = 1;
        queue.push_back( fo );
      }
    }
  }

  std::vector<Signature> overlay( modified.num_signals() );
  const auto value = [&]( SignalId s ) -> const Signature& {
    return overlay[s.value].empty() ? base.values[s.value] : overlay[s.value];
  };

  std::vector<const uint64_t*> inputs;
  for ( auto s : order )
  {
    if ( !in_cone[s.value] )
    {
      continue;
    }
    const auto& n = modified.node( s );
    inputs.clear();
    for ( auto f : n.fanins )
    {
      inputs.push_back( value( f ).data() );
    }
    overlay[s.value].assign( base.num_words, 0u );
    evaluate_node( n.function, inputs, base.num_words, overlay[s.value].data() );
  }

  std::vector<Signature> outputs;
  outputs.reserve( modified.pos().size() );
  for ( auto po : modified.pos() )
  {
    outputs.push_back( value( po ) );
  }
  return outputs;
}

} // namespace

std::string_view to_string( StimulusMode mode )
{
  return mode == StimulusMode::exhaustive ? "exhaustive" : "monte-carlo";
}

std::string_view to_string( Metric metric )
{
  return metric == Metric::er ? "er" : "mred";
}

StimulusSet StimulusSet::exhaustive( std::size_t num_pis )
{
  if ( num_pis > 32u )
  {
    throw std::invalid_argument( fmt::format( "exhaustive simulation of {} inputs is not supported", num_pis ) );
  }
  StimulusSet s;
  s.mode_ = StimulusMode::exhaustive;
  s.num_vectors_ = uint64_t{ 1 } << num_pis;
  s.num_words_ = static_cast<std::size_t>( ( s.num_vectors_ + 63u ) / 64u );
  s.rows_.resize( num_pis );
  for ( std::size_t i = 0u; i < num_pis; ++i )
  {
    auto& row = s.rows_[i];
    row.resize( s.num_words_ );
    for ( std::size_t w = 0u; w < s.num_words_; ++w )
    {
      row[w] = i < 6u ? projections[i] : ( ( ( w >> ( i - 6u ) ) & 1u ) ? ~uint64_t{ 0 } : 0u );
    }
  }
  return s;
}

StimulusSet StimulusSet::monte_carlo( std::size_t num_pis, uint64_t count, uint64_t seed )
{
  if ( count == 0u )
  {
    throw std::invalid_argument( "sample count must be positive" );
  }
  StimulusSet s;
  s.mode_ = StimulusMode::monte_carlo;
  s.num_vectors_ = count;
  s.num_words_ = static_cast<std::size_t>( ( count + 63u ) / 64u );
  s.seed_ = seed;
  s.rows_.assign( num_pis, Signature( s.num_words_ ) );
  std::mt19937_64 rng( seed );
  for ( std::size_t w = 0u; w < s.num_words_; ++w )
  {
    for ( std::size_t i = 0u; i < num_pis; ++i )
    {
      s.rows_[i][w] = rng();
    }
  }
  return s;
}

StimulusSet StimulusSet::for_inputs( std::size_t num_pis, const SamplePolicy& policy )
{
  if ( num_pis <= policy.exhaustive_limit )
  {
    return exhaustive( num_pis );
  }
  return monte_carlo( num_pis, policy.samples, policy.seed );
}

uint64_t StimulusSet::word_mask( std::size_t w ) const noexcept
{
  return valid_bits( num_vectors_, w );
}

SimulationState simulate_all( const LutNetwork& net, const StimulusSet& stim )
{
  check_pis( net, stim );
  SimulationState state;
  state.num_words = stim.num_words();
  state.values.resize( net.num_signals() );
  for ( std::size_t i = 0u; i < net.pis().size(); ++i )
  {
    const auto row = stim.pi_words( i );
    state.values[net.pis()[i].value].assign( row.begin(), row.end() );
  }
  std::vector<const uint64_t*> inputs;
  for ( auto s : topological_order( net ) )
  {
    const auto& n = net.node( s );
    inputs.clear();
    for ( auto f : n.fanins )
    {
      inputs.push_back( state.values[f.value].data() );
    }
    auto& out = state.values[s.value];
    out.assign( state.num_words, 0u );
    evaluate_node( n.function, inputs, state.num_words, out.data() );
  }
  return state;
}

std::vector<Signature> output_signatures( const LutNetwork& net, const SimulationState& state )
{
  std::vector<Signature> outputs;
  outputs.reserve( net.pos().size() );
  for ( auto po : net.pos() )
  {
    outputs.push_back( state.values.at( po.value ) );
  }
  return outputs;
}

std::vector<Signature> simulate( const LutNetwork& net, const StimulusSet& stim )
{
  return output_signatures( net, simulate_all( net, stim ) );
}

std::vector<Signature> resimulate_cone( const LutNetwork& modified, const SimulationState& base,
                                        std::span<const SignalId> changed )
{
  if ( changed.empty() )
  {
    return output_signatures( modified, base );
  }
  const auto order = topological_order( modified );
  return resimulate_impl( modified, base, changed, order, fanout_lists( modified ) );
}

ConeSimulator::ConeSimulator( const LutNetwork& base, const StimulusSet& stim )
    : state_( simulate_all( base, stim ) ),
      order_( topological_order( base ) ),
      fanouts_( fanout_lists( base ) ),
      pos_( base.pos().begin(), base.pos().end() )
{
}

std::vector<Signature> ConeSimulator::base_outputs() const
{
  std::vector<Signature> outputs;
  outputs.reserve( pos_.size() );
  for ( auto po : pos_ )
  {
    outputs.push_back( state_.values[po.value] );
  }
  return outputs;
}

std::vector<Signature> ConeSimulator::resimulate( const LutNetwork& modified, std::span<const SignalId> changed ) const
{
  if ( modified.num_signals() != state_.values.size() )
  {
    throw std::invalid_argument( "network was not derived from the simulated base" );
  }
  return resimulate_impl( modified, state_, changed, order_, fanouts_ );
}

namespace
{

void check_shapes( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors )
{
  if ( exact.size() != approx.size() )
  {
    throw std::invalid_argument( fmt::format( "output count mismatch: {} vs {}", exact.size(), approx.size() ) );
  }
  const auto words = static_cast<std::size_t>( ( num_vectors + 63u ) / 64u );
  for ( std::size_t p = 0u; p < exact.size(); ++p )
  {
    if ( exact[p].size() < words || approx[p].size() < words )
    {
      throw std::invalid_argument( "signature length mismatch" );
    }
  }
}

uint64_t difference_word( std::span<const Signature> exact, std::span<const Signature> approx, std::size_t w )
{
  uint64_t diff = 0u;
  for ( std::size_t p = 0u; p < exact.size(); ++p )
  {
    diff |= exact[p][w] ^ approx[p][w];
  }
  return diff;
}

/* output word under `word`, as a double; exact while the value fits 53 bits */
double output_value( std::span<const Signature> sigs, std::size_t w, unsigned bit, WordSpec word )
{
  const auto n = sigs.size();
  if ( n <= 64u )
  {
    uint64_t value = 0u;
    for ( std::size_t p = 0u; p < n; ++p )
    {
      const auto weight = word.msb_first ? n - 1u - p : p;
      value |= ( ( sigs[p][w] >> bit ) & 1u ) << weight;
    }
    return static_cast<double>( value );
  }
  double value = 0.0;
  for ( std::size_t p = 0u; p < n; ++p )
  {
    if ( ( sigs[p][w] >> bit ) & 1u )
    {
      value += std::ldexp( 1.0, static_cast<int>( word.msb_first ? n - 1u - p : p ) );
    }
  }
  return value;
}

double relative_distance( std::span<const Signature> exact, std::span<const Signature> approx,
                          std::size_t w, unsigned bit, WordSpec word )
{
  if ( exact.size() <= 64u )
  {
    /* integer difference first, so values above 2^53 still subtract exactly */
    uint64_t y = 0u;
    uint64_t y_hat = 0u;
    const auto n = exact.size();
    for ( std::size_t p = 0u; p < n; ++p )
    {
      const auto weight = word.msb_first ? n - 1u - p : p;
      y |= ( ( exact[p][w] >> bit ) & 1u ) << weight;
      y_hat |= ( ( approx[p][w] >> bit ) & 1u ) << weight;
    }
    const uint64_t distance = y_hat > y ? y_hat - y : y - y_hat;
    return static_cast<double>( distance ) / static_cast<double>( std::max<uint64_t>( y, 1u ) );
  }
  const double y = output_value( exact, w, bit, word );
  const double y_hat = output_value( approx, w, bit, word );
  return std::fabs( y_hat - y ) / std::max( y, 1.0 );
}

} // namespace

namespace
{

uint64_t count_differing( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors )
{
  uint64_t differing = 0u;
  const auto words = static_cast<std::size_t>( ( num_vectors + 63u ) / 64u );
  for ( std::size_t w = 0u; w < words; ++w )
  {
    differing += static_cast<uint64_t>( std::popcount( difference_word( exact, approx, w ) & valid_bits( num_vectors, w ) ) );
  }
  return differing;
}

} // namespace

double error_rate( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors )
{
  check_shapes( exact, approx, num_vectors );
  if ( num_vectors == 0u )
  {
    return 0.0;
  }
  return static_cast<double>( count_differing( exact, approx, num_vectors ) ) / static_cast<double>( num_vectors );
}

double mred( std::span<const Signature> exact, std::span<const Signature> approx, uint64_t num_vectors, WordSpec word )
{
  check_shapes( exact, approx, num_vectors );
  if ( num_vectors == 0u )
  {
    return 0.0;
  }
  double sum = 0.0;
  const auto words = static_cast<std::size_t>( ( num_vectors + 63u ) / 64u );
  for ( std::size_t w = 0u; w < words; ++w )
  {
    auto diff = difference_word( exact, approx, w ) & valid_bits( num_vectors, w );
    while ( diff != 0u )
    {
      const auto bit = static_cast<unsigned>( std::countr_zero( diff ) );
      diff &= diff - 1u;
      sum += relative_distance( exact, approx, w, bit, word );
    }
  }
  return sum / static_cast<double>( num_vectors );
}

ErrorReport compare_outputs( std::span<const Signature> exact, std::span<const Signature> approx,
                             const StimulusSet& stim, WordSpec word )
{
  ErrorReport report;
  report.sample_count = stim.num_vectors();
  report.mode = stim.mode();
  report.er = error_rate( exact, approx, stim.num_vectors() );
  report.differing = count_differing( exact, approx, stim.num_vectors() );
  report.mred = mred( exact, approx, stim.num_vectors(), word );
  return report;
}

ErrorEvaluator::ErrorEvaluator( const LutNetwork& exact_ref, const LutNetwork& base, const SamplePolicy& policy, WordSpec word )
    : stim_( StimulusSet::for_inputs( exact_ref.pis().size(), policy ) ),
      word_( word ),
      exact_outputs_( same_interface( exact_ref, base ) ? simulate( exact_ref, stim_ )
                                                         : throw NetworkError( "networks have different interfaces" ) ),
      base_( base, stim_ )
{
}

ErrorReport ErrorEvaluator::evaluate( const LutNetwork& net ) const
{
  if ( net.pis().size() != stim_.num_pis() || net.pos().size() != exact_outputs_.size() )
  {
    throw NetworkError( "network interface does not match the reference" );
  }
  return compare_outputs( exact_outputs_, simulate( net, stim_ ), stim_, word_ );
}

ErrorReport ErrorEvaluator::evaluate_base() const
{
  return compare_outputs( exact_outputs_, base_.base_outputs(), stim_, word_ );
}

ErrorReport ErrorEvaluator::evaluate_incremental( const LutNetwork& modified, std::span<const SignalId> changed ) const
{
  return compare_outputs( exact_outputs_, base_.resimulate( modified, changed ), stim_, word_ );
}

} // namespace quadol
