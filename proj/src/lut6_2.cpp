/*!
  \file lut6_2.cpp
  \brief LUT6_2 evaluation
*/

#include <quadol/lut6_2.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace quadol
{

std::string_view to_string( MergeType type )
{
  switch ( type )
  {
  case MergeType::shared6:
    return "shared6";
  case MergeType::shared5_66:
    return "shared5-66";
  case MergeType::shared5_65:
    return "shared5-65";
  }
  return "unknown";
}

std::string_view to_string( OutputPort port )
{
  return port == OutputPort::o5 ? "O5" : "O6";
}

TruthTable port_function_on_pins( const DualOutputConfig& config, OutputPort port )
{
  static const std::vector<uint32_t> pin_vars{ 0u, 1u, 2u, 3u, 4u };
  if ( port == OutputPort::o5 )
  {
    return remap( config.lut_b, 6u, pin_vars );
  }
  if ( config.i5.constant_one )
  {
    return remap( config.lut_a, 6u, pin_vars );
  }
  return config.i5.inverted ? shannon_join( config.lut_b, config.lut_a, 5u )
                            : shannon_join( config.lut_a, config.lut_b, 5u );
}

TruthTable port_function( const DualOutputConfig& config, OutputPort port, std::span<const SignalId> signals )
{
  const auto on_pins = port_function_on_pins( config, port );
  const auto used = support( on_pins );

  std::vector<uint32_t> var_map;
  var_map.reserve( used.size() );
  for ( auto v : used )
  {
    const SignalId net = v < 5u ? config.pins[v] : config.i5.signal;
    const auto it = std::find( signals.begin(), signals.end(), net );
    if ( it == signals.end() )
    {
      throw std::invalid_argument( "port function depends on a net outside the requested signal list" );
    }
    var_map.push_back( static_cast<uint32_t>( it - signals.begin() ) );
  }
  return remap( shrink_to( on_pins, used ), static_cast<uint32_t>( signals.size() ), var_map );
}

TruthTable realized_f( const DualOutputConfig& config, std::span<const SignalId> f_fanins )
{
  auto t = port_function( config, config.f_port, f_fanins );
  return config.f_negated ? ~t : t;
}

TruthTable realized_g( const DualOutputConfig& config, std::span<const SignalId> g_fanins )
{
  auto t = port_function( config, config.g_port, g_fanins );
  return config.g_negated ? ~t : t;
}

uint32_t evaluate_structural_hd( const DualOutputConfig& config,
                                 const TruthTable& f, std::span<const SignalId> f_fanins,
                                 const TruthTable& g, std::span<const SignalId> g_fanins )
{
  return hamming_distance( f, realized_f( config, f_fanins ) ) + hamming_distance( g, realized_g( config, g_fanins ) );
}

void complement_pin_signal( DualOutputConfig& config, SignalId signal )
{
  for ( uint32_t i = 0u; i < config.pins.size(); ++i )
  {
    if ( config.pins[i] == signal )
    {
      config.lut_a = negate_input( config.lut_a, i );
      config.lut_b = negate_input( config.lut_b, i );
    }
  }
  if ( !config.i5.constant_one && config.i5.signal == signal )
  {
    config.i5.inverted = !config.i5.inverted;
  }
}

} // namespace quadol
