/*!
  \file oracles.hpp
  \brief Brute-force reference implementations shared by the test binaries
*/

#pragma once

#include <quadol/dual_output.hpp>
#include <quadol/lut6_2.hpp>
#include <quadol/matching.hpp>
#include <quadol/netlist.hpp>
#include <quadol/simulation.hpp>
#include <quadol/truth_table.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace oracle
{

using namespace quadol;

inline std::string data_path( const std::string& name )
{
  return std::string( QUADOL_DATA_DIR ) + "/" + name;
}

inline TruthTable random_table( std::mt19937_64& rng, uint32_t vars )
{
  return TruthTable( vars, rng() );
}

inline std::vector<SignalId> ids( std::initializer_list<uint32_t> values )
{
  std::vector<SignalId> out;
  for ( auto v : values )
  {
    out.push_back( SignalId{ v } );
  }
  return out;
}

/* ---------------------------------------------------------------------------
   LUT6_2 cell evaluated bit by bit
   ------------------------------------------------------------------------- */

inline bool cell_output( const DualOutputConfig& c, OutputPort port, uint32_t pin_minterm, bool i5_net )
{
  const bool a = ( c.lut_a.bits() >> pin_minterm ) & 1u;
  const bool b = ( c.lut_b.bits() >> pin_minterm ) & 1u;
  if ( port == OutputPort::o5 )
  {
    return b;
  }
  const bool i5 = c.i5.constant_one ? true : ( c.i5.inverted ? !i5_net : i5_net );
  return i5 ? a : b;
}

/* value of every net of `signals` under assignment `m` of those signals */
inline uint32_t pins_under( const DualOutputConfig& c, const std::vector<SignalId>& signals, uint32_t m, bool& i5_net )
{
  const auto value_of = [&]( SignalId s ) -> bool {
    for ( std::size_t i = 0u; i < signals.size(); ++i )
    {
      if ( signals[i] == s )
      {
        return ( m >> i ) & 1u;
      }
    }
    return false;
  };
  uint32_t p = 0u;
  for ( uint32_t i = 0u; i < 5u; ++i )
  {
    p |= static_cast<uint32_t>( value_of( c.pins[i] ) ) << i;
  }
  i5_net = c.i5.constant_one ? true : value_of( c.i5.signal );
  return p;
}

/* HD(F, F~) + HD(G, G~) by evaluating the programmed cell on every assignment */
inline uint32_t cell_hd( const DualOutputConfig& c, const TruthTable& f, const std::vector<SignalId>& f_signals,
                         const TruthTable& g, const std::vector<SignalId>& g_signals )
{
  uint32_t e = 0u;
  for ( uint32_t m = 0u; m < f.num_bits(); ++m )
  {
    bool i5 = false;
    const auto p = pins_under( c, f_signals, m, i5 );
    const bool out = cell_output( c, c.f_port, p, i5 ) != c.f_negated;
    e += out != f.get_bit( m );
  }
  for ( uint32_t m = 0u; m < g.num_bits(); ++m )
  {
    bool i5 = false;
    const auto p = pins_under( c, g_signals, m, i5 );
    const bool out = cell_output( c, c.g_port, p, i5 ) != c.g_negated;
    e += out != g.get_bit( m );
  }
  return e;
}

/* ---------------------------------------------------------------------------
   Exhaustive configuration oracle

   Enumerates I5 sources and port assignments that keep each member within
   its own inputs, and picks A(p), B(p) per pin minterm among all four bit
   combinations. Frame variables: shared6 uses x0..x5 for both tables;
   the shared5 types put the unique input at position 5.
   ------------------------------------------------------------------------- */

struct Semantics
{
  int i5_owner;  /* -1 constant, 0 split of F, 1 split of G, 2 shared split (shared6) */
  bool inverted;
  OutputPort f_port;
  OutputPort g_port;
};

inline uint32_t semantics_cost( MergeType type, const TruthTable& f, const TruthTable& g, uint32_t split, const Semantics& s )
{
  /* pins are the frame variables other than the split one; shared5 splits on variable 5 */
  const auto to_frame = [&]( uint32_t p, bool split_value ) {
    const uint32_t low = p & ( ( 1u << split ) - 1u );
    const uint32_t high = ( p >> split ) << ( split + 1u );
    return high | ( static_cast<uint32_t>( split_value ) << split ) | low;
  };
  const auto port_value = [&]( OutputPort port, bool a, bool b, bool split_value, int owner ) {
    if ( port == OutputPort::o5 )
    {
      return b;
    }
    bool i5 = true;
    if ( s.i5_owner != -1 )
    {
      /* the I5 net is visible to this member only if it owns the split */
      i5 = ( s.i5_owner == 2 || s.i5_owner == owner ) ? split_value : false;
      i5 = s.inverted ? !i5 : i5;
    }
    return i5 ? a : b;
  };

  uint32_t total = 0u;
  for ( uint32_t p = 0u; p < 32u; ++p )
  {
    uint32_t best = std::numeric_limits<uint32_t>::max();
    for ( uint32_t ab = 0u; ab < 4u; ++ab )
    {
      const bool a = ab & 1u;
      const bool b = ab & 2u;
      uint32_t e = 0u;
      for ( bool v : { false, true } )
      {
        e += port_value( s.f_port, a, b, v, 0 ) != f.get_bit( to_frame( p, v ) );
      }
      if ( type == MergeType::shared5_65 )
      {
        e += port_value( s.g_port, a, b, false, 1 ) != g.get_bit( p );
      }
      else
      {
        for ( bool v : { false, true } )
        {
          e += port_value( s.g_port, a, b, v, 1 ) != g.get_bit( to_frame( p, v ) );
        }
      }
      best = std::min( best, e );
    }
    total += best;
  }
  return total;
}

inline std::vector<Semantics> legal_semantics( MergeType type )
{
  constexpr auto o5 = OutputPort::o5;
  constexpr auto o6 = OutputPort::o6;
  const std::array<OutputPort, 2> ports{ o5, o6 };
  std::vector<Semantics> out;
  for ( auto fp : ports )
  {
    for ( auto gp : ports )
    {
      out.push_back( { -1, false, fp, gp } );
      for ( bool inv : { false, true } )
      {
        if ( type == MergeType::shared6 )
        {
          out.push_back( { 2, inv, fp, gp } );
          continue;
        }
        /* a member on O6 under a foreign I5 would depend on the other's unique input */
        if ( gp == o5 )
        {
          out.push_back( { 0, inv, fp, gp } );
        }
        if ( type == MergeType::shared5_66 && fp == o5 )
        {
          out.push_back( { 1, inv, fp, gp } );
        }
      }
    }
  }
  return out;
}

inline uint32_t min_hd( MergeType type, const TruthTable& f0, const TruthTable& g0, const std::vector<uint32_t>& variants )
{
  uint32_t best = std::numeric_limits<uint32_t>::max();
  for ( auto v : variants )
  {
    const auto f = v == 1u ? ~f0 : f0;
    const auto g = v == 2u ? ~g0 : g0;
    const uint32_t splits = type == MergeType::shared6 ? 6u : 1u;
    for ( uint32_t x = 0u; x < splits; ++x )
    {
      const uint32_t split = type == MergeType::shared6 ? x : 5u;
      for ( const auto& s : legal_semantics( type ) )
      {
        best = std::min( best, semantics_cost( type, f, g, split, s ) );
      }
    }
  }
  return best;
}

/* ---------------------------------------------------------------------------
   Matching by exhaustive search over edge subsets
   ------------------------------------------------------------------------- */

inline std::size_t brute_force_matching( std::size_t n, const std::vector<Edge>& edges )
{
  std::size_t best = 0u;
  const auto recurse = [&]( auto&& self, std::size_t i, uint32_t used, std::size_t size ) -> void {
    const auto free_vertices = n - static_cast<std::size_t>( std::popcount( used ) );
    if ( size + std::min( edges.size() - i, free_vertices / 2u ) <= best )
    {
      return;
    }
    if ( i == edges.size() )
    {
      best = std::max( best, size );
      return;
    }
    const auto [u, v] = edges[i];
    if ( !( used & ( 1u << u ) ) && !( used & ( 1u << v ) ) )
    {
      self( self, i + 1u, used | ( 1u << u ) | ( 1u << v ), size + 1u );
    }
    self( self, i + 1u, used, size );
  };
  recurse( recurse, 0u, 0u, 0u );
  return best;
}

/* ---------------------------------------------------------------------------
   Per-vector scalar metrics
   ------------------------------------------------------------------------- */

/* output values of every input vector, by evaluating node tables one vector at a time */
inline std::vector<std::vector<bool>> scalar_outputs( const LutNetwork& net )
{
  const auto order = topological_order( net );
  const auto num_pis = net.pis().size();
  std::vector<std::vector<bool>> rows;
  std::vector<char> value( net.num_signals(), 0 );
  for ( uint64_t j = 0u; j < ( uint64_t{ 1 } << num_pis ); ++j )
  {
    for ( std::size_t i = 0u; i < num_pis; ++i )
    {
      value[net.pis()[i].value] = ( j >> i ) & 1u;
    }
    for ( auto s : order )
    {
      const auto& n = net.node( s );
      uint32_t index = 0u;
      for ( std::size_t k = 0u; k < n.fanins.size(); ++k )
      {
        index |= static_cast<uint32_t>( value[n.fanins[k].value] ) << k;
      }
      value[s.value] = n.function.get_bit( index );
    }
    std::vector<bool> row;
    for ( auto po : net.pos() )
    {
      row.push_back( value[po.value] );
    }
    rows.push_back( std::move( row ) );
  }
  return rows;
}

inline uint64_t word_of( const std::vector<bool>& row, bool msb_first )
{
  uint64_t y = 0u;
  for ( std::size_t p = 0u; p < row.size(); ++p )
  {
    if ( row[p] )
    {
      y |= uint64_t{ 1 } << ( msb_first ? row.size() - 1u - p : p );
    }
  }
  return y;
}

inline double scalar_er( const std::vector<std::vector<bool>>& exact, const std::vector<std::vector<bool>>& approx )
{
  uint64_t wrong = 0u;
  for ( std::size_t j = 0u; j < exact.size(); ++j )
  {
    wrong += exact[j] != approx[j];
  }
  return static_cast<double>( wrong ) / static_cast<double>( exact.size() );
}

inline double scalar_mred( const std::vector<std::vector<bool>>& exact, const std::vector<std::vector<bool>>& approx, bool msb_first )
{
  double sum = 0.0;
  for ( std::size_t j = 0u; j < exact.size(); ++j )
  {
    const auto y = word_of( exact[j], msb_first );
    const auto y_hat = word_of( approx[j], msb_first );
    const auto d = y > y_hat ? y - y_hat : y_hat - y;
    sum += static_cast<double>( d ) / static_cast<double>( std::max<uint64_t>( y, 1u ) );
  }
  return sum / static_cast<double>( exact.size() );
}

/* every PO of `a` equals the same-position PO of `b` on every input vector */
inline bool equivalent( const LutNetwork& a, const LutNetwork& b )
{
  const auto stim = StimulusSet::exhaustive( a.pis().size() );
  return simulate( a, stim ) == simulate( b, stim );
}

} // namespace oracle
