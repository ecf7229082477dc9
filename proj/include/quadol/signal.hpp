/*!
  \file signal.hpp
  \brief Net identifiers
*/

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace quadol
{

/*! \brief Opaque identifier of a net, unique within one network. */
struct SignalId
{
  uint32_t value{ std::numeric_limits<uint32_t>::max() };

  constexpr bool valid() const noexcept { return value != std::numeric_limits<uint32_t>::max(); }

  friend constexpr auto operator<=>( SignalId, SignalId ) = default;
};

} // namespace quadol

template<>
struct std::hash<quadol::SignalId>
{
  std::size_t operator()( quadol::SignalId s ) const noexcept { return std::hash<uint32_t>{}( s.value ); }
};
