/*!
  \file matching.cpp
  \brief Edmonds' blossom algorithm and randomized matching sequences
*/

#include <quadol/matching.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace quadol
{

namespace
{

class Blossom
{
public:
  Blossom( std::size_t n, std::span<const Edge> edges )
      : n_( n ), adj_( n ), match_( n, -1 ), parent_( n ), base_( n ), used_( n ), blossom_( n )
  {
    for ( const auto& [u, v] : edges )
    {
      if ( u >= n || v >= n )
      {
        throw std::out_of_range( "edge endpoint out of range" );
      }
      if ( u == v )
      {
        continue;
      }
      adj_[u].push_back( static_cast<int32_t>( v ) );
      adj_[v].push_back( static_cast<int32_t>( u ) );
    }
    for ( auto& a : adj_ )
    {
      std::sort( a.begin(), a.end() );
      a.erase( std::unique( a.begin(), a.end() ), a.end() );
    }
  }

  std::vector<int32_t> solve()
  {
    for ( int32_t v = 0; v < static_cast<int32_t>( n_ ); ++v )
    {
      if ( match_[v] != -1 )
      {
        continue;
      }
      auto u = find_path( v );
      while ( u != -1 )
      {
        const auto pv = parent_[u];
        const auto ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

private:
  int32_t lca( int32_t a, int32_t b )
  {
    std::vector<char> seen( n_, 0 );
    while ( true )
    {
      a = base_[a];
      seen[a] = 1;
      if ( match_[a] == -1 )
      {
        break;
      }
      a = parent_[match_[a]];
    }
    while ( true )
    {
      b = base_[b];
      if ( seen[b] )
      {
        return b;
      }
      b = parent_[match_[b]];
    }
  }

  void mark_path( int32_t v, int32_t b, int32_t child )
  {
    while ( base_[v] != b )
    {
      blossom_[base_[v]] = 1;
      blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int32_t find_path( int32_t root )
  {
    std::fill( used_.begin(), used_.end(), 0 );
    std::fill( parent_.begin(), parent_.end(), -1 );
    for ( std::size_t i = 0u; i < n_; ++i )
    {
      base_[i] = static_cast<int32_t>( i );
    }
    used_[root] = 1;
    std::deque<int32_t> queue{ root };
    while ( !queue.empty() )
    {
      const auto v = queue.front();
      queue.pop_front();
      for ( auto to : adj_[v] )
      {
        if ( base_[v] == base_[to] || match_[v] == to )
        {
          continue;
        }
        if ( to == root || ( match_[to] != -1 && parent_[match_[to]] != -1 ) )
        {
          /* odd cycle: contract the blossom */
          const auto cur = lca( v, to );
          std::fill( blossom_.begin(), blossom_.end(), 0 );
          mark_path( v, cur, to );
          mark_path( to, cur, v );
          for ( std::size_t i = 0u; i < n_; ++i )
          {
            if ( blossom_[base_[i]] )
            {
              base_[i] = cur;
              if ( !used_[i] )
              {
                used_[i] = 1;
                queue.push_back( static_cast<int32_t>( i ) );
              }
            }
          }
        }
        else if ( parent_[to] == -1 )
        {
          parent_[to] = v;
          if ( match_[to] == -1 )
          {
            return to;
          }
          used_[match_[to]] = 1;
          queue.push_back( match_[to] );
        }
      }
    }
    return -1;
  }

  std::size_t n_;
  std::vector<std::vector<int32_t>> adj_;
  std::vector<int32_t> match_;
  std::vector<int32_t> parent_;
  std::vector<int32_t> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

Matching matching_on( const ConflictGraph& graph, const std::vector<std::size_t>& active )
{
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> index_of;
  edges.reserve( active.size() );
  for ( auto e : active )
  {
    const auto& c = graph.edges[e];
    auto u = static_cast<uint32_t>( graph.vertex_index( c.f ) );
    auto v = static_cast<uint32_t>( graph.vertex_index( c.g ) );
    if ( u > v )
    {
      std::swap( u, v );
    }
    edges.emplace_back( u, v );
    index_of.emplace( Edge{ u, v }, e );
  }
  const auto mate = maximum_matching( graph.vertices.size(), edges );
  Matching m;
  for ( std::size_t u = 0u; u < mate.size(); ++u )
  {
    if ( mate[u] > static_cast<int32_t>( u ) )
    {
      m.edges.push_back( index_of.at( Edge{ static_cast<uint32_t>( u ), static_cast<uint32_t>( mate[u] ) } ) );
    }
  }
  std::sort( m.edges.begin(), m.edges.end() );
  return m;
}

} // namespace

std::vector<int32_t> maximum_matching( std::size_t num_vertices, std::span<const Edge> edges )
{
  return Blossom( num_vertices, edges ).solve();
}

Matching maximum_matching( const ConflictGraph& graph )
{
  std::vector<std::size_t> all( graph.edges.size() );
  for ( std::size_t i = 0u; i < all.size(); ++i )
  {
    all[i] = i;
  }
  return matching_on( graph, all );
}

uint64_t bounded_draw( std::mt19937_64& rng, uint64_t bound )
{
  if ( bound == 0u )
  {
    throw std::invalid_argument( "bound must be positive" );
  }
  const uint64_t threshold = ( 0u - bound ) % bound;
  while ( true )
  {
    const uint64_t r = rng();
    if ( r >= threshold )
    {
      return r % bound;
    }
  }
}

std::vector<Matching> k_random_matchings( const ConflictGraph& graph, uint32_t k, uint64_t seed )
{
  if ( k == 0u )
  {
    throw std::invalid_argument( "k must be at least 1" );
  }
  std::mt19937_64 rng( seed );
  std::vector<std::size_t> active( graph.edges.size() );
  for ( std::size_t i = 0u; i < active.size(); ++i )
  {
    active[i] = i;
  }
  std::vector<Matching> result;
  while ( result.size() < k && !active.empty() )
  {
    auto m = matching_on( graph, active );
    const auto omitted = m.edges[bounded_draw( rng, m.edges.size() )];
    active.erase( std::find( active.begin(), active.end(), omitted ) );
    result.push_back( std::move( m ) );
  }
  return result;
}

} // namespace quadol
