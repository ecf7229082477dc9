/*!
  \file truth_table.cpp
  \brief Truth table algebra
*/

#include <quadol/truth_table.hpp>

#include <fmt/format.h>

#include <bit>
#include <stdexcept>

namespace quadol
{

namespace
{

void check_var_count( uint32_t num_vars )
{
  if ( num_vars > TruthTable::max_vars )
  {
    throw std::invalid_argument( fmt::format( "truth table with {} variables exceeds the limit of {}", num_vars, TruthTable::max_vars ) );
  }
}

void check_same_arity( const TruthTable& a, const TruthTable& b )
{
  if ( a.num_vars() != b.num_vars() )
  {
    throw std::invalid_argument( fmt::format( "truth tables have different input counts ({} vs {})", a.num_vars(), b.num_vars() ) );
  }
}

void check_var( const TruthTable& t, uint32_t var )
{
  if ( var >= t.num_vars() )
  {
    throw std::out_of_range( fmt::format( "variable index {} out of range for a {}-input table", var, t.num_vars() ) );
  }
}

/* index of the full assignment obtained by inserting `bit` at position `var` into `reduced` */
inline uint32_t insert_bit( uint32_t reduced, uint32_t var, bool bit )
{
  const uint32_t low = reduced & ( ( 1u << var ) - 1u );
  const uint32_t high = ( reduced >> var ) << ( var + 1u );
  return high | ( static_cast<uint32_t>( bit ) << var ) | low;
}

} // namespace

TruthTable::TruthTable( uint32_t num_vars, uint64_t bits )
    : num_vars_( num_vars )
{
  check_var_count( num_vars );
  bits_ = bits & mask();
}

TruthTable TruthTable::constant( bool value, uint32_t num_vars )
{
  return TruthTable( num_vars, value ? ~uint64_t{ 0 } : 0u );
}

TruthTable TruthTable::nth_var( uint32_t num_vars, uint32_t var )
{
  TruthTable t( num_vars );
  check_var( t, var );
  for ( uint32_t i = 0u; i < t.num_bits(); ++i )
  {
    t.set_bit( i, ( i >> var ) & 1u );
  }
  return t;
}

TruthTable TruthTable::from_binary( std::string_view msb_first )
{
  const auto len = msb_first.size();
  if ( len == 0u || !std::has_single_bit( len ) )
  {
    throw std::invalid_argument( fmt::format( "binary string length {} is not a power of two", len ) );
  }
  TruthTable t( static_cast<uint32_t>( std::countr_zero( len ) ) );
  for ( std::size_t i = 0u; i < len; ++i )
  {
    const char c = msb_first[len - 1u - i];
    if ( c != '0' && c != '1' )
    {
      throw std::invalid_argument( fmt::format( "invalid character '{}' in binary truth table", c ) );
    }
    t.set_bit( static_cast<uint32_t>( i ), c == '1' );
  }
  return t;
}

bool TruthTable::get_bit( uint32_t index ) const
{
  if ( index >= num_bits() )
  {
    throw std::out_of_range( fmt::format( "truth table index {} out of range", index ) );
  }
  return ( bits_ >> index ) & 1u;
}

void TruthTable::set_bit( uint32_t index, bool value )
{
  if ( index >= num_bits() )
  {
    throw std::out_of_range( fmt::format( "truth table index {} out of range", index ) );
  }
  const uint64_t bit = uint64_t{ 1 } << index;
  bits_ = value ? ( bits_ | bit ) : ( bits_ & ~bit );
}

std::string TruthTable::to_binary() const
{
  std::string s( num_bits(), '0' );
  for ( uint32_t i = 0u; i < num_bits(); ++i )
  {
    if ( ( bits_ >> i ) & 1u )
    {
      s[num_bits() - 1u - i] = '1';
    }
  }
  return s;
}

std::string TruthTable::to_hex() const
{
  const uint32_t digits = num_vars_ <= 2u ? 1u : ( 1u << ( num_vars_ - 2u ) );
  return fmt::format( "{:0{}x}", bits_, digits );
}

TruthTable TruthTable::operator&( const TruthTable& other ) const
{
  check_same_arity( *this, other );
  return TruthTable( num_vars_, bits_ & other.bits_ );
}

TruthTable TruthTable::operator|( const TruthTable& other ) const
{
  check_same_arity( *this, other );
  return TruthTable( num_vars_, bits_ | other.bits_ );
}

TruthTable TruthTable::operator^( const TruthTable& other ) const
{
  check_same_arity( *this, other );
  return TruthTable( num_vars_, bits_ ^ other.bits_ );
}

TruthTable cofactor( const TruthTable& t, uint32_t var, bool phase )
{
  check_var( t, var );
  TruthTable r( t.num_vars() - 1u );
  for ( uint32_t j = 0u; j < r.num_bits(); ++j )
  {
    r.set_bit( j, ( t.bits() >> insert_bit( j, var, phase ) ) & 1u );
  }
  return r;
}

uint32_t hamming_distance( const TruthTable& a, const TruthTable& b )
{
  check_same_arity( a, b );
  return static_cast<uint32_t>( std::popcount( a.bits() ^ b.bits() ) );
}

TruthTable majority3( const TruthTable& a, const TruthTable& b, const TruthTable& c )
{
  check_same_arity( a, b );
  check_same_arity( a, c );
  return ( a & b ) | ( a & c ) | ( b & c );
}

TruthTable negate_output( const TruthTable& t )
{
  return ~t;
}

TruthTable negate_input( const TruthTable& t, uint32_t var )
{
  check_var( t, var );
  TruthTable r( t.num_vars() );
  for ( uint32_t i = 0u; i < t.num_bits(); ++i )
  {
    r.set_bit( i, ( t.bits() >> ( i ^ ( 1u << var ) ) ) & 1u );
  }
  return r;
}

bool depends_on( const TruthTable& t, uint32_t var )
{
  return cofactor( t, var, true ) != cofactor( t, var, false );
}

std::vector<uint32_t> support( const TruthTable& t )
{
  std::vector<uint32_t> vars;
  for ( uint32_t v = 0u; v < t.num_vars(); ++v )
  {
    if ( depends_on( t, v ) )
    {
      vars.push_back( v );
    }
  }
  return vars;
}

TruthTable remap( const TruthTable& t, uint32_t num_vars, const std::vector<uint32_t>& var_map )
{
  if ( var_map.size() != t.num_vars() )
  {
    throw std::invalid_argument( "variable map size does not match the table's input count" );
  }
  TruthTable r( num_vars );
  uint32_t used = 0u;
  for ( auto v : var_map )
  {
    if ( v >= num_vars || ( ( used >> v ) & 1u ) )
    {
      throw std::invalid_argument( "variable map is not injective into the target range" );
    }
    used |= 1u << v;
  }
  for ( uint32_t j = 0u; j < r.num_bits(); ++j )
  {
    uint32_t src = 0u;
    for ( uint32_t i = 0u; i < var_map.size(); ++i )
    {
      src |= ( ( j >> var_map[i] ) & 1u ) << i;
    }
    r.set_bit( j, ( t.bits() >> src ) & 1u );
  }
  return r;
}

TruthTable shrink_to( const TruthTable& t, const std::vector<uint32_t>& kept )
{
  uint32_t kept_mask = 0u;
  for ( auto v : kept )
  {
    check_var( t, v );
    kept_mask |= 1u << v;
  }
  for ( uint32_t v = 0u; v < t.num_vars(); ++v )
  {
    if ( !( ( kept_mask >> v ) & 1u ) && depends_on( t, v ) )
    {
      throw std::invalid_argument( fmt::format( "cannot drop variable {}: it is in the support", v ) );
    }
  }
  TruthTable r( static_cast<uint32_t>( kept.size() ) );
  for ( uint32_t j = 0u; j < r.num_bits(); ++j )
  {
    uint32_t src = 0u;
    for ( uint32_t i = 0u; i < kept.size(); ++i )
    {
      src |= ( ( j >> i ) & 1u ) << kept[i];
    }
    r.set_bit( j, ( t.bits() >> src ) & 1u );
  }
  return r;
}

TruthTable shannon_join( const TruthTable& hi, const TruthTable& lo, uint32_t var )
{
  check_same_arity( hi, lo );
  if ( var > hi.num_vars() )
  {
    throw std::out_of_range( fmt::format( "cannot insert variable at position {}", var ) );
  }
  TruthTable r( hi.num_vars() + 1u );
  for ( uint32_t j = 0u; j < hi.num_bits(); ++j )
  {
    r.set_bit( insert_bit( j, var, true ), ( hi.bits() >> j ) & 1u );
    r.set_bit( insert_bit( j, var, false ), ( lo.bits() >> j ) & 1u );
  }
  return r;
}

} // namespace quadol
