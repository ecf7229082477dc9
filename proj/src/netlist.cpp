/*!
  \file netlist.cpp
  \brief LUT network model
*/

#include <quadol/netlist.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <unordered_set>

namespace quadol
{

LutNetwork::LutNetwork( std::string model_name )
    : model_( std::move( model_name ) )
{
}

SignalId LutNetwork::signal( std::string_view name )
{
  if ( auto s = find( name ) )
  {
    return *s;
  }
  const SignalId s{ static_cast<uint32_t>( names_.size() ) };
  names_.emplace_back( name );
  by_name_.emplace( std::string( name ), s );
  driver_.push_back( Driver::none );
  nodes_.emplace_back();
  return s;
}

std::optional<SignalId> LutNetwork::find( std::string_view name ) const
{
  const auto it = by_name_.find( std::string( name ) );
  if ( it == by_name_.end() )
  {
    return std::nullopt;
  }
  return it->second;
}

SignalId LutNetwork::add_pi( std::string_view name )
{
  const auto s = signal( name );
  if ( driver_[s.value] != Driver::none )
  {
    throw NetworkError( fmt::format( "multiply driven net '{}'", name ) );
  }
  driver_[s.value] = Driver::pi;
  pis_.push_back( s );
  return s;
}

SignalId LutNetwork::add_node( std::string_view name, std::vector<SignalId> fanins, TruthTable function )
{
  const auto s = signal( name );
  set_node( s, std::move( fanins ), std::move( function ) );
  return s;
}

void LutNetwork::set_node( SignalId output, std::vector<SignalId> fanins, TruthTable function )
{
  check_signal( output );
  if ( driver_[output.value] != Driver::none )
  {
    throw NetworkError( fmt::format( "multiply driven net '{}'", name( output ) ) );
  }
  check_node_shape( output, fanins, function );
  driver_[output.value] = Driver::node;
  nodes_[output.value] = LutNode{ output, std::move( fanins ), std::move( function ) };
  node_order_.push_back( output );
}

void LutNetwork::add_po( SignalId signal )
{
  check_signal( signal );
  pos_.push_back( signal );
}

void LutNetwork::replace_function( SignalId node, std::vector<SignalId> fanins, TruthTable function )
{
  if ( !is_node( node ) )
  {
    throw NetworkError( fmt::format( "net '{}' is not driven by a node", name( node ) ) );
  }
  check_node_shape( node, fanins, function );
  auto& n = *nodes_[node.value];
  n.fanins = std::move( fanins );
  n.function = std::move( function );
}

void LutNetwork::record_merge( MergedPair pair )
{
  merges_.push_back( std::move( pair ) );
}

const std::string& LutNetwork::name( SignalId s ) const
{
  check_signal( s );
  return names_[s.value];
}

bool LutNetwork::is_pi( SignalId s ) const
{
  check_signal( s );
  return driver_[s.value] == Driver::pi;
}

bool LutNetwork::is_node( SignalId s ) const
{
  check_signal( s );
  return driver_[s.value] == Driver::node;
}

bool LutNetwork::drives_po( SignalId s ) const
{
  return std::find( pos_.begin(), pos_.end(), s ) != pos_.end();
}

const LutNode& LutNetwork::node( SignalId s ) const
{
  if ( !is_node( s ) )
  {
    throw NetworkError( fmt::format( "net '{}' is not driven by a node", name( s ) ) );
  }
  return *nodes_[s.value];
}

void LutNetwork::check_signal( SignalId s ) const
{
  if ( !s.valid() || s.value >= names_.size() )
  {
    throw NetworkError( "invalid signal id" );
  }
}

void LutNetwork::check_node_shape( SignalId output, const std::vector<SignalId>& fanins, const TruthTable& function ) const
{
  if ( fanins.size() > TruthTable::max_vars )
  {
    throw NetworkError( fmt::format( "node '{}' has {} fanins: not LUT-6 mapped", name( output ), fanins.size() ) );
  }
  if ( fanins.size() != function.num_vars() )
  {
    throw NetworkError( fmt::format( "node '{}' has {} fanins but a {}-input function", name( output ), fanins.size(), function.num_vars() ) );
  }
  for ( std::size_t i = 0u; i < fanins.size(); ++i )
  {
    check_signal( fanins[i] );
    for ( std::size_t j = 0u; j < i; ++j )
    {
      if ( fanins[i] == fanins[j] )
      {
        throw NetworkError( fmt::format( "node '{}' lists fanin '{}' twice", name( output ), name( fanins[i] ) ) );
      }
    }
  }
}

void LutNetwork::validate() const
{
  for ( auto s : node_order_ )
  {
    for ( auto f : nodes_[s.value]->fanins )
    {
      if ( !is_driven( f ) )
      {
        throw NetworkError( fmt::format( "undriven net '{}' used by node '{}'", name( f ), name( s ) ) );
      }
    }
  }
  for ( auto po : pos_ )
  {
    if ( !is_driven( po ) )
    {
      throw NetworkError( fmt::format( "undriven primary output '{}'", name( po ) ) );
    }
  }
  (void)topological_order( *this );
}

std::vector<SignalId> topological_order( const LutNetwork& net )
{
  enum class Mark : uint8_t
  {
    fresh,
    active,
    done
  };
  std::vector<Mark> mark( net.num_signals(), Mark::fresh );
  std::vector<SignalId> order;
  order.reserve( net.num_nodes() );

  /* iterative DFS; each frame is (node, index of next fanin to visit) */
  std::vector<std::pair<SignalId, std::size_t>> stack;
  for ( auto root : net.nodes() )
  {
    if ( mark[root.value] != Mark::fresh )
    {
      continue;
    }
    stack.emplace_back( root, 0u );
    mark[root.value] = Mark::active;
    while ( !stack.empty() )
    {
      auto& [s, next] = stack.back();
      const auto& fanins = net.node( s ).fanins;
      if ( next < fanins.size() )
      {
        const auto f = fanins[next++];
        if ( !net.is_node( f ) )
        {
          continue;
        }
        if ( mark[f.value] == Mark::active )
        {
          throw NetworkError( fmt::format( "combinational cycle through net '{}'", net.name( f ) ) );
        }
        if ( mark[f.value] == Mark::fresh )
        {
          mark[f.value] = Mark::active;
          stack.emplace_back( f, 0u );
        }
        continue;
      }
      mark[s.value] = Mark::done;
      order.push_back( s );
      stack.pop_back();
    }
  }
  return order;
}

std::vector<std::vector<SignalId>> fanout_lists( const LutNetwork& net )
{
  std::vector<std::vector<SignalId>> fanouts( net.num_signals() );
  for ( auto s : net.nodes() )
  {
    for ( auto f : net.node( s ).fanins )
    {
      fanouts[f.value].push_back( s );
    }
  }
  return fanouts;
}

LutNetwork normalize_support( const LutNetwork& net )
{
  LutNetwork result = net;
  for ( auto s : net.nodes() )
  {
    const auto& n = net.node( s );
    const auto vars = support( n.function );
    if ( vars.size() == n.fanins.size() )
    {
      continue;
    }
    std::vector<SignalId> fanins;
    fanins.reserve( vars.size() );
    for ( auto v : vars )
    {
      fanins.push_back( n.fanins[v] );
    }
    result.replace_function( s, std::move( fanins ), shrink_to( n.function, vars ) );
  }
  return result;
}

std::size_t lut_count( const LutNetwork& net, std::span<const MergedPair> merges )
{
  std::unordered_set<SignalId> members;
  for ( const auto& m : merges )
  {
    for ( auto s : { m.f, m.g } )
    {
      if ( !net.is_node( s ) )
      {
        throw NetworkError( fmt::format( "merged pair references '{}', which is not a node", net.name( s ) ) );
      }
      if ( !members.insert( s ).second )
      {
        throw NetworkError( fmt::format( "conflicting merges: node '{}' belongs to two pairs", net.name( s ) ) );
      }
    }
  }
  return net.num_nodes() - merges.size();
}

std::size_t lut_count( const LutNetwork& net )
{
  return lut_count( net, net.merges() );
}

bool same_interface( const LutNetwork& a, const LutNetwork& b )
{
  const auto names_equal = []( const LutNetwork& x, std::span<const SignalId> xs, const LutNetwork& y, std::span<const SignalId> ys ) {
    return std::equal( xs.begin(), xs.end(), ys.begin(), ys.end(),
                       [&]( SignalId p, SignalId q ) { return x.name( p ) == y.name( q ); } );
  };
  return names_equal( a, a.pis(), b, b.pis() ) && names_equal( a, a.pos(), b, b.pos() );
}

} // namespace quadol
