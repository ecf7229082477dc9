/*!
  \file dual_output.cpp
  \brief Configuration tables for the three pair types, merge application
*/

#include <quadol/dual_output.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace quadol
{

namespace
{

std::size_t position_of( std::span<const SignalId> signals, SignalId s )
{
  const auto it = std::find( signals.begin(), signals.end(), s );
  if ( it == signals.end() )
  {
    throw std::invalid_argument( "signal is not in the list" );
  }
  return static_cast<std::size_t>( it - signals.begin() );
}

/* node function re-expressed over `target` (a superset of its fanins) */
TruthTable reorder( const LutNode& n, const std::vector<SignalId>& target )
{
  std::vector<uint32_t> var_map;
  var_map.reserve( n.fanins.size() );
  for ( auto s : n.fanins )
  {
    var_map.push_back( static_cast<uint32_t>( position_of( target, s ) ) );
  }
  return remap( n.function, static_cast<uint32_t>( target.size() ), var_map );
}

uint32_t cost( const TruthTable& t, std::initializer_list<const TruthTable*> targets )
{
  uint32_t sum = 0u;
  for ( const auto* u : targets )
  {
    sum += hamming_distance( t, *u );
  }
  return sum;
}

class ConfigBuilder
{
public:
  ConfigBuilder( const PairFrame& frame, std::vector<DualOutputConfig>& out )
      : frame_( frame ), out_( out )
  {
  }

  void set_context( std::array<SignalId, 5> pins, uint32_t variant, uint32_t split_var )
  {
    pins_ = pins;
    variant_ = variant;
    split_var_ = split_var;
  }

  /* `i5` invalid means constant 1 */
  void emit( uint32_t row, SignalId i5, bool inverted, OutputPort f_port, OutputPort g_port,
             const TruthTable& a, const TruthTable& b, uint32_t choice, uint32_t closed_form )
  {
    DualOutputConfig c;
    c.type = frame_.type;
    c.pins = pins_;
    c.i5.constant_one = !i5.valid();
    c.i5.signal = i5;
    c.i5.inverted = i5.valid() && inverted;
    c.f_port = f_port;
    c.g_port = g_port;
    c.lut_a = a;
    c.lut_b = b;
    c.f_negated = variant_ == 1u;
    c.g_negated = variant_ == 2u;
    c.table_row = row;
    c.split_var = split_var_;
    c.variant = variant_;
    c.choice = choice;
    c.structural_hd = evaluate_structural_hd( c, frame_.f, frame_.f_signals, frame_.g, frame_.g_signals );
    if ( c.structural_hd != closed_form )
    {
      throw std::logic_error( fmt::format( "{} row {}: evaluated HD {} differs from closed form {}",
                                           to_string( c.type ), row, c.structural_hd, closed_form ) );
    }
    out_.push_back( std::move( c ) );
  }

private:
  const PairFrame& frame_;
  std::vector<DualOutputConfig>& out_;
  std::array<SignalId, 5> pins_{};
  uint32_t variant_{ 0u };
  uint32_t split_var_{ 0u };
};

/* rows over cofactors of F on `s` and of G on `t`; shared6 uses s = t */
void two_split_rows( ConfigBuilder& b, MergeType type, const TruthTable& f, uint32_t f_var, SignalId s,
                     const TruthTable& g, uint32_t g_var, SignalId t )
{
  constexpr auto o5 = OutputPort::o5;
  constexpr auto o6 = OutputPort::o6;
  const auto f1 = cofactor( f, f_var, true );
  const auto f0 = cofactor( f, f_var, false );
  const auto g1 = cofactor( g, g_var, true );
  const auto g0 = cofactor( g, g_var, false );

  {
    const auto maj = majority3( f0, g1, g0 );
    b.emit( 1u, s, false, o6, o5, f1, maj, 0u, cost( maj, { &f0, &g1, &g0 } ) );
  }
  {
    const auto maj = majority3( f1, f0, g0 );
    b.emit( 2u, t, false, o5, o6, g1, maj, 0u, cost( maj, { &f1, &f0, &g0 } ) );
  }
  {
    const auto maj = majority3( f1, g1, g0 );
    b.emit( 3u, s, true, o6, o5, f0, maj, 0u, cost( maj, { &f1, &g1, &g0 } ) );
  }
  {
    const auto maj = majority3( f1, f0, g1 );
    b.emit( 4u, t, true, o5, o6, g0, maj, 0u, cost( maj, { &f1, &f0, &g1 } ) );
  }

  uint32_t row = 5u;
  if ( type == MergeType::shared6 )
  {
    /* both outputs from O6 */
    const std::array<const TruthTable*, 2> as{ &f1, &g1 };
    const std::array<const TruthTable*, 2> bs{ &f0, &g0 };
    for ( uint32_t ia = 0u; ia < 2u; ++ia )
    {
      for ( uint32_t ib = 0u; ib < 2u; ++ib )
      {
        b.emit( row, s, false, o6, o6, *as[ia], *bs[ib], 2u * ia + ib,
                cost( *as[ia], { &f1, &g1 } ) + cost( *bs[ib], { &f0, &g0 } ) );
      }
    }
    ++row;
  }

  /* I5 tied to 1: two independent LUT-5s */
  const std::array<const TruthTable*, 2> as{ &f1, &f0 };
  const std::array<const TruthTable*, 2> bs{ &g1, &g0 };
  for ( uint32_t ia = 0u; ia < 2u; ++ia )
  {
    for ( uint32_t ib = 0u; ib < 2u; ++ib )
    {
      b.emit( row, SignalId{}, false, o6, o5, *as[ia], *bs[ib], 2u * ia + ib,
              cost( *as[ia], { &f1, &f0 } ) + cost( *bs[ib], { &g1, &g0 } ) );
    }
  }
}

void shared5_65_rows( ConfigBuilder& b, const TruthTable& f, SignalId m, const TruthTable& g )
{
  constexpr auto o5 = OutputPort::o5;
  constexpr auto o6 = OutputPort::o6;
  const auto f1 = cofactor( f, 5u, true );
  const auto f0 = cofactor( f, 5u, false );

  const std::array<const TruthTable*, 2> b1{ &f0, &g };
  for ( uint32_t i = 0u; i < 2u; ++i )
  {
    b.emit( 1u, m, false, o6, o5, f1, *b1[i], i, cost( *b1[i], { &f0, &g } ) );
  }
  const std::array<const TruthTable*, 2> b2{ &f1, &g };
  for ( uint32_t i = 0u; i < 2u; ++i )
  {
    b.emit( 2u, m, true, o6, o5, f0, *b2[i], i, cost( *b2[i], { &f1, &g } ) );
  }
  const std::array<const TruthTable*, 2> a3{ &f1, &f0 };
  for ( uint32_t i = 0u; i < 2u; ++i )
  {
    b.emit( 3u, SignalId{}, false, o6, o5, *a3[i], g, i, cost( *a3[i], { &f1, &f0 } ) );
  }
}

std::array<SignalId, 5> first_five( std::span<const SignalId> signals, std::size_t skip = 6u )
{
  std::array<SignalId, 5> pins{};
  std::size_t j = 0u;
  for ( std::size_t i = 0u; i < signals.size() && j < 5u; ++i )
  {
    if ( i != skip )
    {
      pins[j++] = signals[i];
    }
  }
  return pins;
}

auto order_key( const DualOutputConfig& c )
{
  return std::tuple{ c.table_row, c.split_var, c.variant, c.choice };
}

} // namespace

PairFrame make_frame( const LutNetwork& net, const PairCandidate& pair )
{
  const auto& fn = net.node( pair.f );
  const auto& gn = net.node( pair.g );
  PairFrame frame;
  frame.type = pair.type;
  switch ( pair.type )
  {
  case MergeType::shared6:
    frame.f_signals = fn.fanins;
    frame.g_signals = fn.fanins;
    break;
  case MergeType::shared5_66:
    frame.f_signals = pair.shared;
    frame.f_signals.push_back( pair.m.value() );
    frame.g_signals = pair.shared;
    frame.g_signals.push_back( pair.n.value() );
    break;
  case MergeType::shared5_65:
    frame.f_signals = pair.shared;
    frame.f_signals.push_back( pair.m.value() );
    frame.g_signals = pair.shared;
    break;
  }
  if ( fn.fanins.size() != frame.f_signals.size() || gn.fanins.size() != frame.g_signals.size() )
  {
    throw NetworkError( fmt::format( "pair ({}, {}) does not match the network", net.name( pair.f ), net.name( pair.g ) ) );
  }
  frame.f = reorder( fn, frame.f_signals );
  frame.g = reorder( gn, frame.g_signals );
  return frame;
}

std::vector<DualOutputConfig> enumerate_configurations( const PairFrame& frame, std::span<const uint32_t> variants )
{
  std::vector<DualOutputConfig> result;
  ConfigBuilder builder( frame, result );
  for ( auto v : variants )
  {
    if ( v > 2u )
    {
      throw std::invalid_argument( "polarity variant must be 0, 1 or 2" );
    }
    const auto f = v == 1u ? ~frame.f : frame.f;
    const auto g = v == 2u ? ~frame.g : frame.g;
    switch ( frame.type )
    {
    case MergeType::shared6:
      for ( uint32_t x = 0u; x < 6u; ++x )
      {
        builder.set_context( first_five( frame.f_signals, x ), v, x );
        two_split_rows( builder, frame.type, f, x, frame.f_signals[x], g, x, frame.f_signals[x] );
      }
      break;
    case MergeType::shared5_66:
      builder.set_context( first_five( frame.f_signals ), v, 0u );
      two_split_rows( builder, frame.type, f, 5u, frame.f_signals[5], g, 5u, frame.g_signals[5] );
      break;
    case MergeType::shared5_65:
      builder.set_context( first_five( frame.f_signals ), v, 0u );
      shared5_65_rows( builder, f, frame.f_signals[5], g );
      break;
    }
  }
  return result;
}

std::vector<DualOutputConfig> minimal_configurations( const PairFrame& frame, std::span<const uint32_t> variants )
{
  auto all = enumerate_configurations( frame, variants );
  if ( all.empty() )
  {
    return all;
  }
  const auto best = std::min_element( all.begin(), all.end(), []( const auto& x, const auto& y ) {
                      return x.structural_hd < y.structural_hd;
                    } )->structural_hd;
  std::erase_if( all, [best]( const auto& c ) { return c.structural_hd != best; } );
  std::stable_sort( all.begin(), all.end(), []( const auto& x, const auto& y ) { return order_key( x ) < order_key( y ); } );
  return all;
}

namespace
{

DualOutputConfig first_minimal( const PairFrame& frame )
{
  static constexpr std::array<uint32_t, 1> positive{ 0u };
  return minimal_configurations( frame, positive ).front();
}

void check_arity( const TruthTable& t, uint32_t vars, const char* what )
{
  if ( t.num_vars() != vars )
  {
    throw std::invalid_argument( fmt::format( "{} must have {} inputs", what, vars ) );
  }
}

} // namespace

DualOutputConfig optimize_shared6( const TruthTable& f, const TruthTable& g, std::span<const SignalId> inputs )
{
  check_arity( f, 6u, "F" );
  check_arity( g, 6u, "G" );
  if ( inputs.size() != 6u )
  {
    throw std::invalid_argument( "shared6 needs six inputs" );
  }
  PairFrame frame{ MergeType::shared6, f, g, { inputs.begin(), inputs.end() }, { inputs.begin(), inputs.end() } };
  return first_minimal( frame );
}

DualOutputConfig optimize_shared5_66( const TruthTable& f, const TruthTable& g, std::span<const SignalId> shared,
                                      SignalId m, SignalId n )
{
  check_arity( f, 6u, "F" );
  check_arity( g, 6u, "G" );
  if ( shared.size() != 5u )
  {
    throw std::invalid_argument( "shared5-66 needs five shared inputs" );
  }
  PairFrame frame{ MergeType::shared5_66, f, g, { shared.begin(), shared.end() }, { shared.begin(), shared.end() } };
  frame.f_signals.push_back( m );
  frame.g_signals.push_back( n );
  return first_minimal( frame );
}

DualOutputConfig optimize_shared5_65( const TruthTable& f, const TruthTable& g, std::span<const SignalId> shared,
                                      SignalId m )
{
  check_arity( f, 6u, "F" );
  check_arity( g, 5u, "G" );
  if ( shared.size() != 5u )
  {
    throw std::invalid_argument( "shared5-65 needs five shared inputs" );
  }
  PairFrame frame{ MergeType::shared5_65, f, g, { shared.begin(), shared.end() }, { shared.begin(), shared.end() } };
  frame.f_signals.push_back( m );
  return first_minimal( frame );
}

std::vector<uint32_t> allowed_variants( const LutNetwork& net, const PairCandidate& pair )
{
  std::vector<uint32_t> variants{ 0u };
  if ( !net.drives_po( pair.f ) )
  {
    variants.push_back( 1u );
  }
  if ( !net.drives_po( pair.g ) )
  {
    variants.push_back( 2u );
  }
  return variants;
}

DualOutputConfig optimize_pair( const LutNetwork& net, const PairCandidate& pair, const ErrorEvaluator* sim, Metric metric )
{
  const auto frame = make_frame( net, pair );
  const auto candidates = minimal_configurations( frame, allowed_variants( net, pair ) );
  if ( sim == nullptr || candidates.size() == 1u )
  {
    return candidates.front();
  }
  return resolve_choice_by_simulation( net, pair, candidates, *sim, metric );
}

DualOutputConfig resolve_choice_by_simulation( const LutNetwork& net, const PairCandidate& pair,
                                               std::span<const DualOutputConfig> candidates,
                                               const ErrorEvaluator& sim, Metric metric )
{
  if ( candidates.empty() )
  {
    throw std::invalid_argument( "no candidate configuration" );
  }
  if ( candidates.size() == 1u )
  {
    return candidates.front();
  }
  const auto& f_fanins = net.node( pair.f ).fanins;
  const auto& g_fanins = net.node( pair.g ).fanins;

  /* candidates with the same realized functions share one simulation */
  std::map<std::pair<TruthTable, TruthTable>, double> seen;
  std::size_t best = 0u;
  double best_error = 0.0;
  for ( std::size_t i = 0u; i < candidates.size(); ++i )
  {
    const auto& c = candidates[i];
    std::pair key{ realized_f( c, f_fanins ), realized_g( c, g_fanins ) };
    auto it = seen.find( key );
    if ( it == seen.end() )
    {
      const std::array<MergeRequest, 1> request{ MergeRequest{ pair.f, pair.g, c } };
      const auto merged = apply_merges( net, request );
      const auto touched = merge_touched_nodes( net, request );
      it = seen.emplace( std::move( key ), sim.evaluate_incremental( merged, touched ).value( metric ) ).first;
    }
    if ( i == 0u || it->second < best_error )
    {
      best = i;
      best_error = it->second;
    }
  }
  return candidates[best];
}

std::vector<SignalId> merge_touched_nodes( const LutNetwork& net, std::span<const MergeRequest> merges )
{
  std::vector<SignalId> touched;
  std::unordered_set<SignalId> seen;
  const auto add = [&]( SignalId s ) {
    if ( seen.insert( s ).second )
    {
      touched.push_back( s );
    }
  };
  bool any_negated = false;
  for ( const auto& m : merges )
  {
    add( m.f );
    add( m.g );
    any_negated = any_negated || m.config.f_negated || m.config.g_negated;
  }
  if ( any_negated )
  {
    const auto fanouts = fanout_lists( net );
    for ( const auto& m : merges )
    {
      if ( m.config.f_negated )
      {
        std::for_each( fanouts[m.f.value].begin(), fanouts[m.f.value].end(), add );
      }
      if ( m.config.g_negated )
      {
        std::for_each( fanouts[m.g.value].begin(), fanouts[m.g.value].end(), add );
      }
    }
  }
  return touched;
}

namespace
{

void check_requests( const LutNetwork& net, std::span<const MergeRequest> merges )
{
  std::unordered_set<SignalId> members;
  for ( const auto& prior : net.merges() )
  {
    members.insert( prior.f );
    members.insert( prior.g );
  }
  for ( const auto& m : merges )
  {
    for ( auto s : { m.f, m.g } )
    {
      if ( !net.is_node( s ) )
      {
        throw NetworkError( fmt::format( "merge member '{}' is not a node", net.name( s ) ) );
      }
      if ( !members.insert( s ).second )
      {
        throw NetworkError( fmt::format( "conflicting merge: node '{}' is already merged", net.name( s ) ) );
      }
    }
    const auto& ff = net.node( m.f ).fanins;
    const auto& gf = net.node( m.g ).fanins;
    if ( std::find( ff.begin(), ff.end(), m.g ) != ff.end() || std::find( gf.begin(), gf.end(), m.f ) != gf.end() )
    {
      throw NetworkError( fmt::format( "nodes '{}' and '{}' feed each other", net.name( m.f ), net.name( m.g ) ) );
    }
    if ( ( m.config.f_negated && net.drives_po( m.f ) ) || ( m.config.g_negated && net.drives_po( m.g ) ) )
    {
      throw NetworkError( "a node driving a primary output cannot be negated" );
    }
  }
}

void set_port_function( LutNetwork& net, SignalId s, const DualOutputConfig& config, OutputPort port )
{
  const auto& fanins = net.node( s ).fanins;
  TruthTable t;
  try
  {
    t = port_function( config, port, fanins );
  }
  catch ( const std::invalid_argument& )
  {
    throw NetworkError( fmt::format( "configuration does not fit the fanins of '{}'", net.name( s ) ) );
  }
  const auto vars = support( t );
  std::vector<SignalId> kept;
  kept.reserve( vars.size() );
  for ( auto v : vars )
  {
    kept.push_back( fanins[v] );
  }
  net.replace_function( s, std::move( kept ), shrink_to( t, vars ) );
}

} // namespace

LutNetwork apply_merges( const LutNetwork& net, std::span<const MergeRequest> merges )
{
  check_requests( net, merges );
  LutNetwork result = net;
  for ( const auto& m : merges )
  {
    set_port_function( result, m.f, m.config, m.config.f_port );
    set_port_function( result, m.g, m.config, m.config.g_port );
    result.record_merge( MergedPair{ m.f, m.g, m.config } );
  }

  /* members realizing a complement: their consumers absorb the inversion */
  std::vector<SignalId> negated;
  for ( const auto& m : merges )
  {
    if ( m.config.f_negated )
    {
      negated.push_back( m.f );
    }
    if ( m.config.g_negated )
    {
      negated.push_back( m.g );
    }
  }
  if ( negated.empty() )
  {
    return result;
  }
  const auto fanouts = fanout_lists( result );
  for ( auto s : negated )
  {
    for ( auto fo : fanouts[s.value] )
    {
      const auto& n = result.node( fo );
      const auto pos = static_cast<uint32_t>( position_of( n.fanins, s ) );
      result.replace_function( fo, n.fanins, negate_input( n.function, pos ) );
    }
    for ( auto& entry : result.merge_ledger() )
    {
      complement_pin_signal( entry.config, s );
    }
  }
  return result;
}

LutNetwork apply_merge( const LutNetwork& net, const PairCandidate& pair, const DualOutputConfig& config )
{
  const std::array<MergeRequest, 1> request{ MergeRequest{ pair.f, pair.g, config } };
  return apply_merges( net, request );
}

} // namespace quadol
