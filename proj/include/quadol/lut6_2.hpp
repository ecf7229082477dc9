/*!
  \file lut6_2.hpp
  \brief Programming of a fracturable dual-output LUT-6 (LUT6_2)

  Two LUT-5s A and B share the pins I0..I4. O5 is B; O6 is A when I5 is
  high and B otherwise. Tying I5 to constant 1 turns the cell into two
  independent LUT-5s (O6 = A, O5 = B).
*/

#pragma once

#include <quadol/signal.hpp>
#include <quadol/truth_table.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace quadol
{

/*! \brief Shape of a mergable LUT pair. */
enum class MergeType : uint8_t
{
  shared6,    /*!< two LUT-6s with six identical inputs */
  shared5_66, /*!< two LUT-6s with five identical inputs */
  shared5_65  /*!< a LUT-6 and a LUT-5 with five identical inputs */
};

std::string_view to_string( MergeType type );

enum class OutputPort : uint8_t
{
  o5,
  o6
};

std::string_view to_string( OutputPort port );

/*! \brief Source of the I5 pin. */
struct I5Input
{
  bool constant_one{ true };
  SignalId signal{};
  /*! the pin receives the complement of `signal` */
  bool inverted{ false };

  friend bool operator==( const I5Input&, const I5Input& ) = default;
};

/*! \brief Complete LUT6_2 programming for one merged pair (F, G).

  `f_negated` means the port assigned to F realizes an approximation of
  NOT F; the fanouts of F are then rewritten to consume the complement.
*/
struct DualOutputConfig
{
  MergeType type{ MergeType::shared6 };
  std::array<SignalId, 5> pins{};
  I5Input i5{};
  OutputPort f_port{ OutputPort::o6 };
  OutputPort g_port{ OutputPort::o5 };
  TruthTable lut_a{ 5u };
  TruthTable lut_b{ 5u };
  bool f_negated{ false };
  bool g_negated{ false };
  uint32_t structural_hd{ 0u };

  /* provenance, used for reporting and deterministic tie-breaking */
  uint32_t table_row{ 0u };  /*!< 1-based row of the configuration table */
  uint32_t split_var{ 0u };  /*!< position of x_i among F's fanins (shared6 only) */
  uint32_t variant{ 0u };    /*!< 0: (F, G), 1: (NOT F, G), 2: (F, NOT G) */
  uint32_t choice{ 0u };     /*!< alternative picked in rows with candidate sets */

  friend bool operator==( const DualOutputConfig&, const DualOutputConfig& ) = default;
};

/*! \brief Port function over the pin frame: variables 0..4 are I0..I4, variable 5 is the I5 net. */
TruthTable port_function_on_pins( const DualOutputConfig& config, OutputPort port );

/*! \brief Port function re-expressed over `signals`.

  Throws std::invalid_argument if the port depends on a net not listed.
*/
TruthTable port_function( const DualOutputConfig& config, OutputPort port, std::span<const SignalId> signals );

/*! \brief Approximation of F (in F's own polarity) over F's fanins. */
TruthTable realized_f( const DualOutputConfig& config, std::span<const SignalId> f_fanins );

/*! \brief Approximation of G (in G's own polarity) over G's fanins. */
TruthTable realized_g( const DualOutputConfig& config, std::span<const SignalId> g_fanins );

/*! \brief HD(F, F~) + HD(G, G~) by exhaustive evaluation of the configured cell. */
uint32_t evaluate_structural_hd( const DualOutputConfig& config,
                                 const TruthTable& f, std::span<const SignalId> f_fanins,
                                 const TruthTable& g, std::span<const SignalId> g_fanins );

/*! \brief Keeps the cell's behaviour when net `signal` is replaced by its complement. */
void complement_pin_signal( DualOutputConfig& config, SignalId signal );

} // namespace quadol
