/*!
  \file pairs.cpp
  \brief Pair enumeration
*/

#include <quadol/pairs.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace quadol
{

namespace
{

using InputKey = std::array<uint32_t, 5>;

InputKey make_key( const std::vector<SignalId>& fanins, std::size_t skip )
{
  InputKey key{};
  std::size_t j = 0u;
  for ( std::size_t i = 0u; i < fanins.size(); ++i )
  {
    if ( i != skip )
    {
      key[j++] = fanins[i].value;
    }
  }
  std::sort( key.begin(), key.end() );
  return key;
}

bool contains( const std::vector<SignalId>& v, SignalId s )
{
  return std::find( v.begin(), v.end(), s ) != v.end();
}

} // namespace

std::optional<PairCandidate> classify_pair( const LutNetwork& net, SignalId a, SignalId b )
{
  if ( a == b )
  {
    return std::nullopt;
  }
  const auto& na = net.node( a );
  const auto& nb = net.node( b );
  const auto sa = na.fanins.size();
  const auto sb = nb.fanins.size();
  if ( sa < 5u || sb < 5u || ( sa == 5u && sb == 5u ) )
  {
    return std::nullopt;
  }
  if ( contains( na.fanins, b ) || contains( nb.fanins, a ) )
  {
    return std::nullopt;
  }

  PairCandidate pair;
  if ( sa == 6u && sb == 6u )
  {
    /* F is the member with the smaller name */
    const bool a_first = net.name( a ) < net.name( b );
    pair.f = a_first ? a : b;
    pair.g = a_first ? b : a;
  }
  else
  {
    pair.f = sa == 6u ? a : b;
    pair.g = sa == 6u ? b : a;
  }
  const auto& ff = net.node( pair.f ).fanins;
  const auto& gf = net.node( pair.g ).fanins;

  std::vector<SignalId> f_only;
  for ( auto s : ff )
  {
    ( contains( gf, s ) ? pair.shared : f_only ).push_back( s );
  }
  std::vector<SignalId> g_only;
  for ( auto s : gf )
  {
    if ( !contains( ff, s ) )
    {
      g_only.push_back( s );
    }
  }

  if ( gf.size() == 6u && pair.shared.size() == 6u )
  {
    pair.type = MergeType::shared6;
    return pair;
  }
  if ( pair.shared.size() != 5u )
  {
    return std::nullopt;
  }
  pair.m = f_only.front();
  if ( gf.size() == 6u )
  {
    pair.type = MergeType::shared5_66;
    pair.n = g_only.front();
  }
  else
  {
    pair.type = MergeType::shared5_65;
  }
  return pair;
}

std::vector<PairCandidate> enumerate_pairs( const LutNetwork& net )
{
  /* nodes sharing at least five inputs meet in the bucket of those five */
  std::map<InputKey, std::vector<SignalId>> buckets;
  for ( auto s : net.nodes() )
  {
    const auto& fanins = net.node( s ).fanins;
    if ( fanins.size() == 5u )
    {
      buckets[make_key( fanins, fanins.size() )].push_back( s );
    }
    else if ( fanins.size() == 6u )
    {
      for ( std::size_t skip = 0u; skip < 6u; ++skip )
      {
        buckets[make_key( fanins, skip )].push_back( s );
      }
    }
  }

  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::vector<PairCandidate> result;
  for ( const auto& [key, members] : buckets )
  {
    for ( std::size_t i = 0u; i < members.size(); ++i )
    {
      for ( std::size_t j = i + 1u; j < members.size(); ++j )
      {
        const auto lo = std::min( members[i].value, members[j].value );
        const auto hi = std::max( members[i].value, members[j].value );
        if ( !seen.emplace( lo, hi ).second )
        {
          continue;
        }
        if ( auto pair = classify_pair( net, members[i], members[j] ) )
        {
          result.push_back( std::move( *pair ) );
        }
      }
    }
  }

  std::sort( result.begin(), result.end(), [&]( const PairCandidate& x, const PairCandidate& y ) {
    const auto& xf = net.name( x.f );
    const auto& yf = net.name( y.f );
    if ( xf != yf )
    {
      return xf < yf;
    }
    return net.name( x.g ) < net.name( y.g );
  } );
  return result;
}

std::size_t ConflictGraph::vertex_index( SignalId s ) const
{
  const auto it = std::lower_bound( vertices.begin(), vertices.end(), s );
  if ( it == vertices.end() || *it != s )
  {
    throw std::out_of_range( "signal is not a vertex of the conflict graph" );
  }
  return static_cast<std::size_t>( it - vertices.begin() );
}

ConflictGraph build_conflict_graph( std::vector<PairCandidate> candidates )
{
  const auto better = []( const PairCandidate& x, const PairCandidate& y ) {
    if ( x.estimated_error && y.estimated_error )
    {
      return *x.estimated_error < *y.estimated_error;
    }
    if ( x.config && y.config )
    {
      return x.config->structural_hd < y.config->structural_hd;
    }
    return false;
  };

  ConflictGraph graph;
  std::map<std::pair<uint32_t, uint32_t>, std::size_t> edge_of;
  for ( auto& c : candidates )
  {
    const std::pair key{ std::min( c.f.value, c.g.value ), std::max( c.f.value, c.g.value ) };
    if ( auto it = edge_of.find( key ); it != edge_of.end() )
    {
      if ( better( c, graph.edges[it->second] ) )
      {
        graph.edges[it->second] = std::move( c );
      }
      continue;
    }
    edge_of.emplace( key, graph.edges.size() );
    graph.vertices.push_back( c.f );
    graph.vertices.push_back( c.g );
    graph.edges.push_back( std::move( c ) );
  }
  std::sort( graph.vertices.begin(), graph.vertices.end() );
  graph.vertices.erase( std::unique( graph.vertices.begin(), graph.vertices.end() ), graph.vertices.end() );
  return graph;
}

} // namespace quadol
