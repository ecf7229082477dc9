/*!
  \file truth_table.hpp
  \brief Truth tables of Boolean functions with up to six inputs

  Bit `i` of a table holds the function value for the input assignment
  whose variable `j` equals bit `j` of `i` (first variable is the least
  significant one).
*/

#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace quadol
{

class TruthTable
{
public:
  static constexpr uint32_t max_vars = 6u;

  /*! \brief Constant-0 function of zero variables. */
  TruthTable() = default;

  /*! \brief Table over `num_vars` variables; bits above 2^num_vars are ignored. */
  explicit TruthTable( uint32_t num_vars, uint64_t bits = 0u );

  static TruthTable constant( bool value, uint32_t num_vars = 0u );

  /*! \brief Projection function x_var over `num_vars` variables. */
  static TruthTable nth_var( uint32_t num_vars, uint32_t var );

  /*! \brief Parses a binary string, most significant index first ("1000" is AND). */
  static TruthTable from_binary( std::string_view msb_first );

  uint32_t num_vars() const noexcept { return num_vars_; }
  uint32_t num_bits() const noexcept { return 1u << num_vars_; }
  uint64_t bits() const noexcept { return bits_; }

  bool get_bit( uint32_t index ) const;
  void set_bit( uint32_t index, bool value );

  bool is_const0() const noexcept { return bits_ == 0u; }
  bool is_const1() const noexcept { return bits_ == mask(); }

  std::string to_binary() const;
  std::string to_hex() const;

  TruthTable operator~() const noexcept { return TruthTable( num_vars_, ~bits_ ); }
  TruthTable operator&( const TruthTable& other ) const;
  TruthTable operator|( const TruthTable& other ) const;
  TruthTable operator^( const TruthTable& other ) const;

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;
  friend auto operator<=>( const TruthTable&, const TruthTable& ) = default;

  uint64_t mask() const noexcept
  {
    return num_vars_ == 6u ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << ( 1u << num_vars_ ) ) - 1u );
  }

private:
  uint32_t num_vars_{ 0u };
  uint64_t bits_{ 0u };
};

/*! \brief Fixes variable `var` to `phase` and removes it; the remaining variables keep their order. */
TruthTable cofactor( const TruthTable& t, uint32_t var, bool phase );

/*! \brief Number of assignments on which the two tables differ. */
uint32_t hamming_distance( const TruthTable& a, const TruthTable& b );

/*! \brief Bitwise three-way majority.

  The result minimizes HD(r, a) + HD(r, b) + HD(r, c), since every
  minterm is decided independently by two votes out of three.
*/
TruthTable majority3( const TruthTable& a, const TruthTable& b, const TruthTable& c );

TruthTable negate_output( const TruthTable& t );

/*! \brief Function t with variable `var` complemented. */
TruthTable negate_input( const TruthTable& t, uint32_t var );

bool depends_on( const TruthTable& t, uint32_t var );

/*! \brief Variables in the functional support, ascending. */
std::vector<uint32_t> support( const TruthTable& t );

/*! \brief Re-expresses `t` over `num_vars` variables, variable i of `t` becoming variable `var_map[i]`.

  `var_map` must be injective; the result does not depend on unmapped variables.
*/
TruthTable remap( const TruthTable& t, uint32_t num_vars, const std::vector<uint32_t>& var_map );

/*! \brief Keeps only the listed variables, variable `kept[i]` becoming variable i.

  Every dropped variable must be outside the support of `t`.
*/
TruthTable shrink_to( const TruthTable& t, const std::vector<uint32_t>& kept );

/*! \brief Builds x_var ? hi : lo, inserting a fresh variable at position `var`. */
TruthTable shannon_join( const TruthTable& hi, const TruthTable& lo, uint32_t var );

} // namespace quadol
