#include <doctest.h>

#include "../common/oracles.hpp"

#include <quadol/matching.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace quadol;

namespace
{

ConflictGraph graph_of( uint32_t n, const std::vector<Edge>& edges )
{
  ConflictGraph g;
  for ( uint32_t v = 0u; v < n; ++v )
  {
    g.vertices.push_back( SignalId{ v } );
  }
  for ( auto [u, v] : edges )
  {
    PairCandidate c;
    c.f = SignalId{ u };
    c.g = SignalId{ v };
    g.edges.push_back( c );
  }
  return g;
}

std::vector<Edge> random_edges( std::mt19937_64& rng, uint32_t n )
{
  std::vector<Edge> edges;
  const auto density = static_cast<double>( rng() % 100u ) / 100.0;
  std::uniform_real_distribution<double> coin( 0.0, 1.0 );
  for ( uint32_t u = 0u; u < n; ++u )
  {
    for ( uint32_t v = u + 1u; v < n; ++v )
    {
      if ( coin( rng ) < density )
      {
        edges.emplace_back( u, v );
      }
    }
  }
  return edges;
}

bool is_matching( const ConflictGraph& g, const Matching& m, const std::set<std::size_t>& allowed )
{
  std::set<uint32_t> used;
  for ( auto e : m.edges )
  {
    if ( !allowed.count( e ) )
    {
      return false;
    }
    if ( !used.insert( g.edges[e].f.value ).second || !used.insert( g.edges[e].g.value ).second )
    {
      return false;
    }
  }
  return std::is_sorted( m.edges.begin(), m.edges.end() );
}

const std::vector<Edge> ring6{ { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 0 } };

} // namespace

TEST_CASE( "small graphs" )
{
  CHECK( maximum_matching( graph_of( 0u, {} ) ).size() == 0u );
  CHECK( maximum_matching( graph_of( 4u, {} ) ).size() == 0u );

  const std::vector<Edge> c5{ { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 } };
  CHECK( maximum_matching( graph_of( 5u, c5 ) ).size() == 2u );

  const auto mate = maximum_matching( 6u, ring6 );
  for ( uint32_t v = 0u; v < 6u; ++v )
  {
    REQUIRE( mate[v] >= 0 );
    CHECK( mate[static_cast<std::size_t>( mate[v] )] == static_cast<int32_t>( v ) );
  }

  /* two triangles joined by an edge: blossoms on both sides */
  const std::vector<Edge> bowtie{ { 0, 1 }, { 1, 2 }, { 2, 0 }, { 2, 3 }, { 3, 4 }, { 4, 5 }, { 5, 3 } };
  CHECK( maximum_matching( graph_of( 6u, bowtie ) ).size() == 3u );
}

TEST_CASE( "random graphs against exhaustive search" )
{
  std::mt19937_64 rng( 51 );
  for ( int round = 0; round < 200; ++round )
  {
    const auto n = static_cast<uint32_t>( 1u + rng() % 12u );
    const auto edges = random_edges( rng, n );
    const auto g = graph_of( n, edges );
    const auto m = maximum_matching( g );
    std::set<std::size_t> all;
    for ( std::size_t i = 0u; i < edges.size(); ++i )
    {
      all.insert( i );
    }
    CHECK( is_matching( g, m, all ) );
    CHECK( m.size() == oracle::brute_force_matching( n, edges ) );
  }
}

TEST_CASE( "k random matchings" )
{
  SUBCASE( "early stop" )
  {
    const auto g = graph_of( 2u, { { 0, 1 } } );
    CHECK( k_random_matchings( g, 3u, 7u ).size() == 1u );
    CHECK( k_random_matchings( graph_of( 3u, {} ), 3u, 7u ).empty() );
    CHECK_THROWS_AS( k_random_matchings( g, 0u, 7u ), std::invalid_argument );
  }
  SUBCASE( "six-node ring" )
  {
    const auto g = graph_of( 6u, ring6 );
    const auto first = maximum_matching( g );
    REQUIRE( first.size() == 3u );
    for ( auto omitted : first.edges )
    {
      std::vector<Edge> rest;
      for ( std::size_t i = 0u; i < ring6.size(); ++i )
      {
        if ( i != omitted )
        {
          rest.push_back( ring6[i] );
        }
      }
      const auto second = maximum_matching( 6u, rest );
      CHECK( std::count_if( second.begin(), second.end(), []( int32_t v ) { return v >= 0; } ) == 6 );
    }
    const auto runs = k_random_matchings( g, 2u, 3u );
    REQUIRE( runs.size() == 2u );
    CHECK( runs[0].size() == 3u );
    CHECK( runs[1].size() == 3u );
    CHECK( runs[0] != runs[1] );
  }
  SUBCASE( "replay on random graphs" )
  {
    std::mt19937_64 rng( 52 );
    for ( int round = 0; round < 50; ++round )
    {
      const auto n = static_cast<uint32_t>( 2u + rng() % 11u );
      const auto edges = random_edges( rng, n );
      const auto g = graph_of( n, edges );
      const auto seed = rng();
      const auto runs = k_random_matchings( g, 8u, seed );
      CHECK( runs == k_random_matchings( g, 8u, seed ) );
      if ( edges.empty() )
      {
        CHECK( runs.empty() );
        continue;
      }
      REQUIRE( !runs.empty() );
      CHECK( runs.size() <= 8u );
      CHECK( runs[0].size() == oracle::brute_force_matching( n, edges ) );

      std::set<std::size_t> active;
      for ( std::size_t i = 0u; i < edges.size(); ++i )
      {
        active.insert( i );
      }
      std::mt19937_64 replay( seed );
      for ( const auto& m : runs )
      {
        std::vector<Edge> working;
        for ( auto e : active )
        {
          working.push_back( edges[e] );
        }
        CHECK( is_matching( g, m, active ) );
        CHECK( m.size() == oracle::brute_force_matching( n, working ) );
        active.erase( m.edges[bounded_draw( replay, m.size() )] );
      }
      CHECK( ( runs.size() == 8u || active.empty() ) );
    }
  }
}

TEST_CASE( "bounded draw" )
{
  std::mt19937_64 rng( 53 );
  std::vector<int> hits( 5, 0 );
  for ( int i = 0; i < 5000; ++i )
  {
    const auto v = bounded_draw( rng, 5u );
    REQUIRE( v < 5u );
    ++hits[v];
  }
  for ( auto h : hits )
  {
    CHECK( h > 800 );
  }
  CHECK_THROWS_AS( bounded_draw( rng, 0u ), std::invalid_argument );
}
