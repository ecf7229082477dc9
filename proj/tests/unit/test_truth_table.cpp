#include <doctest.h>

#include "../common/oracles.hpp"

#include <quadol/truth_table.hpp>

#include <random>
#include <stdexcept>

using namespace quadol;

TEST_CASE( "binary strings are most significant first" )
{
  const auto t = TruthTable::from_binary( "1000" );
  CHECK( t.num_vars() == 2u );
  CHECK( t.bits() == 8u );
  CHECK( t.to_binary() == "1000" );
  CHECK( TruthTable::nth_var( 1u, 0u ).to_binary() == "10" );
  CHECK( TruthTable::constant( true, 0u ).to_binary() == "1" );
  CHECK_THROWS_AS( TruthTable::from_binary( "100" ), std::invalid_argument );
  CHECK_THROWS_AS( TruthTable::from_binary( "10x0" ), std::invalid_argument );
  CHECK_THROWS_AS( TruthTable( 7u ), std::invalid_argument );
  CHECK_THROWS_AS( t.get_bit( 4u ), std::out_of_range );
}

TEST_CASE( "cofactor" )
{
  const auto x0 = TruthTable::nth_var( 1u, 0u );
  CHECK( cofactor( x0, 0u, true ) == TruthTable::constant( true, 0u ) );
  CHECK( cofactor( x0, 0u, false ) == TruthTable::constant( false, 0u ) );

  const auto x = TruthTable::nth_var( 2u, 0u ) ^ TruthTable::nth_var( 2u, 1u );
  CHECK( cofactor( x, 1u, false ) == TruthTable::nth_var( 1u, 0u ) );
  CHECK( cofactor( x, 1u, true ) == ~TruthTable::nth_var( 1u, 0u ) );

  CHECK_THROWS_AS( cofactor( x, 2u, true ), std::out_of_range );
}

TEST_CASE( "Shannon identity on random tables" )
{
  std::mt19937_64 rng( 1 );
  for ( int round = 0; round < 200; ++round )
  {
    const auto t = oracle::random_table( rng, 6u );
    for ( uint32_t i = 0u; i < 6u; ++i )
    {
      const auto hi = cofactor( t, i, true );
      const auto lo = cofactor( t, i, false );
      for ( uint32_t a = 0u; a < 64u; ++a )
      {
        /* drop bit i of the assignment */
        const uint32_t rest = ( a & ( ( 1u << i ) - 1u ) ) | ( ( a >> ( i + 1u ) ) << i );
        const bool expected = ( ( a >> i ) & 1u ) ? hi.get_bit( rest ) : lo.get_bit( rest );
        REQUIRE( t.get_bit( a ) == expected );
      }
      CHECK( shannon_join( hi, lo, i ) == t );
    }
  }
}

TEST_CASE( "Hamming distance" )
{
  std::mt19937_64 rng( 2 );
  for ( int round = 0; round < 200; ++round )
  {
    const auto a = oracle::random_table( rng, 5u );
    const auto b = oracle::random_table( rng, 5u );
    const auto c = oracle::random_table( rng, 5u );
    uint32_t naive = 0u;
    for ( uint32_t m = 0u; m < 32u; ++m )
    {
      naive += a.get_bit( m ) != b.get_bit( m );
    }
    CHECK( hamming_distance( a, b ) == naive );
    CHECK( hamming_distance( a, a ) == 0u );
    CHECK( hamming_distance( a, ~a ) == 32u );
    CHECK( hamming_distance( a, b ) == hamming_distance( b, a ) );
    CHECK( ( hamming_distance( a, b ) == 0u ) == ( a == b ) );
    CHECK( hamming_distance( a, c ) <= hamming_distance( a, b ) + hamming_distance( b, c ) );
  }
  CHECK( hamming_distance( TruthTable( 6u, 0u ), TruthTable( 6u, ~uint64_t{ 0 } ) ) == 64u );
  CHECK_THROWS_AS( hamming_distance( TruthTable( 5u ), TruthTable( 6u ) ), std::invalid_argument );
}

TEST_CASE( "majority3" )
{
  std::mt19937_64 rng( 3 );
  for ( int round = 0; round < 200; ++round )
  {
    const auto t = oracle::random_table( rng, 5u );
    const auto u = oracle::random_table( rng, 5u );
    const auto v = oracle::random_table( rng, 5u );
    CHECK( majority3( t, t, u ) == t );
    CHECK( majority3( t, ~t, u ) == u );

    const auto r = majority3( t, u, v );
    const auto sum = hamming_distance( r, t ) + hamming_distance( r, u ) + hamming_distance( r, v );
    uint32_t best = 0u;
    for ( uint32_t m = 0u; m < 32u; ++m )
    {
      uint32_t per_minterm = 3u;
      for ( bool bit : { false, true } )
      {
        const uint32_t cost = ( bit != t.get_bit( m ) ) + ( bit != u.get_bit( m ) ) + ( bit != v.get_bit( m ) );
        per_minterm = std::min( per_minterm, cost );
      }
      const uint32_t chosen = ( r.get_bit( m ) != t.get_bit( m ) ) + ( r.get_bit( m ) != u.get_bit( m ) ) + ( r.get_bit( m ) != v.get_bit( m ) );
      REQUIRE( chosen == per_minterm );
      best += per_minterm;
    }
    CHECK( sum == best );
  }
  CHECK_THROWS_AS( majority3( TruthTable( 5u ), TruthTable( 5u ), TruthTable( 4u ) ), std::invalid_argument );
}

TEST_CASE( "negations" )
{
  CHECK( negate_output( TruthTable::constant( false, 3u ) ) == TruthTable::constant( true, 3u ) );
  CHECK( negate_input( TruthTable::nth_var( 1u, 0u ), 0u ) == ~TruthTable::nth_var( 1u, 0u ) );
  CHECK_THROWS_AS( negate_input( TruthTable( 2u ), 2u ), std::out_of_range );

  std::mt19937_64 rng( 4 );
  for ( int round = 0; round < 100; ++round )
  {
    const auto t = oracle::random_table( rng, 6u );
    for ( uint32_t i = 0u; i < 6u; ++i )
    {
      const auto n = negate_input( t, i );
      for ( uint32_t a = 0u; a < 64u; ++a )
      {
        REQUIRE( n.get_bit( a ) == t.get_bit( a ^ ( 1u << i ) ) );
      }
      CHECK( negate_input( n, i ) == t );
    }
    CHECK( negate_output( negate_output( t ) ) == t );
  }
}

TEST_CASE( "support" )
{
  CHECK( support( TruthTable::constant( true, 4u ) ).empty() );

  auto parity = TruthTable( 6u );
  for ( uint32_t i = 0u; i < 6u; ++i )
  {
    parity = parity ^ TruthTable::nth_var( 6u, i );
  }
  CHECK( support( parity ) == std::vector<uint32_t>{ 0, 1, 2, 3, 4, 5 } );

  /* g(x0, x2) = x0 AND NOT x2 over four variables */
  const auto g = TruthTable::nth_var( 4u, 0u ) & ~TruthTable::nth_var( 4u, 2u );
  const auto s = support( g );
  CHECK( s == std::vector<uint32_t>{ 0, 2 } );
  for ( uint32_t i = 0u; i < 4u; ++i )
  {
    const bool in = std::find( s.begin(), s.end(), i ) != s.end();
    CHECK( in == ( cofactor( g, i, true ) != cofactor( g, i, false ) ) );
  }
}

TEST_CASE( "remap and shrink" )
{
  std::mt19937_64 rng( 5 );
  const auto t = oracle::random_table( rng, 3u );
  const auto wide = remap( t, 6u, { 4u, 1u, 5u } );
  for ( uint32_t a = 0u; a < 64u; ++a )
  {
    const uint32_t local = ( ( a >> 4 ) & 1u ) | ( ( ( a >> 1 ) & 1u ) << 1 ) | ( ( ( a >> 5 ) & 1u ) << 2 );
    REQUIRE( wide.get_bit( a ) == t.get_bit( local ) );
  }
  CHECK( shrink_to( wide, { 4u, 1u, 5u } ) == t );
  CHECK_THROWS( remap( t, 6u, { 1u, 1u, 2u } ) );
  CHECK_THROWS( shrink_to( wide, { 4u, 1u } ) );
}
