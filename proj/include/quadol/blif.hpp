/*!
  \file blif.hpp
  \brief Reader and writer for combinational, LUT-mapped BLIF

  Supported: .model, .inputs, .outputs, .names (cubes over 0/1/- with an
  on-set or off-set output column), .end, '#' comments and '\' line
  continuation. A file holds a single model.
*/

#pragma once

#include <quadol/netlist.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadol
{

class BlifError : public std::runtime_error
{
public:
  BlifError( std::size_t line, const std::string& message );

  /*! \brief 1-based line number, 0 when the error is not tied to a line. */
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/*! \brief A file could not be opened, read or written. */
class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

LutNetwork parse_blif( std::istream& in );
LutNetwork parse_blif( std::string_view text );
LutNetwork read_blif( const std::filesystem::path& path );

void write_blif( const LutNetwork& net, std::ostream& out );
std::string write_blif( const LutNetwork& net );
void write_blif( const LutNetwork& net, const std::filesystem::path& path );

} // namespace quadol
