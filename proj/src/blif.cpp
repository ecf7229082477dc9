/*!
  \file blif.cpp
  \brief BLIF subset reader and writer
*/

#include <quadol/blif.hpp>

#include <fmt/format.h>

#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

namespace quadol
{

BlifError::BlifError( std::size_t line, const std::string& message )
    : std::runtime_error( line == 0u ? message : fmt::format( "line {}: {}", line, message ) ),
      line_( line )
{
}

namespace
{

struct LogicalLine
{
  std::size_t line;
  std::vector<std::string> tokens;
};

struct PendingNode
{
  std::size_t line;
  std::vector<std::string> inputs;
  std::string output;
  std::vector<std::pair<std::string, char>> cubes;
};

std::vector<std::string> tokenize( const std::string& text )
{
  std::istringstream ss( text );
  std::vector<std::string> tokens;
  std::string tok;
  while ( ss >> tok )
  {
    tokens.push_back( std::move( tok ) );
  }
  return tokens;
}

std::vector<LogicalLine> read_logical_lines( std::istream& in )
{
  std::vector<LogicalLine> lines;
  std::string physical;
  std::string pending;
  std::size_t number = 0u;
  std::size_t start = 0u;
  while ( std::getline( in, physical ) )
  {
    ++number;
    if ( const auto hash = physical.find( '#' ); hash != std::string::npos )
    {
      physical.erase( hash );
    }
    while ( !physical.empty() && std::isspace( static_cast<unsigned char>( physical.back() ) ) )
    {
      physical.pop_back();
    }
    if ( pending.empty() )
    {
      start = number;
    }
    const bool continued = !physical.empty() && physical.back() == '\\';
    if ( continued )
    {
      physical.pop_back();
    }
    pending += physical;
    pending += ' ';
    if ( continued )
    {
      continue;
    }
    auto tokens = tokenize( pending );
    pending.clear();
    if ( !tokens.empty() )
    {
      lines.push_back( { start, std::move( tokens ) } );
    }
  }
  if ( auto tokens = tokenize( pending ); !tokens.empty() )
  {
    lines.push_back( { start, std::move( tokens ) } );
  }
  return lines;
}

TruthTable compile_cover( const PendingNode& node )
{
  const auto k = static_cast<uint32_t>( node.inputs.size() );
  TruthTable table( k );
  if ( node.cubes.empty() )
  {
    return table;
  }
  const char out_value = node.cubes.front().second;
  for ( const auto& [cube, value] : node.cubes )
  {
    if ( value != out_value )
    {
      throw BlifError( node.line, fmt::format( "cover of '{}' mixes on-set and off-set rows", node.output ) );
    }
    for ( uint32_t m = 0u; m < table.num_bits(); ++m )
    {
      bool hit = true;
      for ( uint32_t i = 0u; i < k && hit; ++i )
      {
        const bool bit = ( m >> i ) & 1u;
        hit = cube[i] == '-' || ( cube[i] == '1' ) == bit;
      }
      if ( hit )
      {
        table.set_bit( m, true );
      }
    }
  }
  return out_value == '1' ? table : ~table;
}

} // namespace

LutNetwork parse_blif( std::istream& in )
{
  const auto lines = read_logical_lines( in );

  std::string model = "top";
  bool model_seen = false;
  bool ended = false;
  std::vector<std::pair<std::size_t, std::string>> inputs;
  std::vector<std::pair<std::size_t, std::string>> outputs;
  std::vector<PendingNode> nodes;
  PendingNode* current = nullptr;

  for ( const auto& [line, tokens] : lines )
  {
    const auto& head = tokens.front();
    if ( head.front() == '.' )
    {
      current = nullptr;
      if ( ended )
      {
        throw BlifError( line, head == ".model" ? "multiple models are not supported" : fmt::format( "'{}' after .end", head ) );
      }
      if ( head == ".model" )
      {
        if ( model_seen )
        {
          throw BlifError( line, "multiple models are not supported" );
        }
        model_seen = true;
        if ( tokens.size() > 1u )
        {
          model = tokens[1];
        }
      }
      else if ( head == ".inputs" || head == ".outputs" )
      {
        auto& target = head == ".inputs" ? inputs : outputs;
        for ( std::size_t i = 1u; i < tokens.size(); ++i )
        {
          target.emplace_back( line, tokens[i] );
        }
      }
      else if ( head == ".names" )
      {
        if ( tokens.size() < 2u )
        {
          throw BlifError( line, ".names without an output" );
        }
        PendingNode node{ line, { tokens.begin() + 1, tokens.end() - 1 }, tokens.back(), {} };
        if ( node.inputs.size() > TruthTable::max_vars )
        {
          throw BlifError( line, fmt::format( "node '{}' has {} inputs: not LUT-6 mapped", node.output, node.inputs.size() ) );
        }
        nodes.push_back( std::move( node ) );
        current = &nodes.back();
      }
      else if ( head == ".end" )
      {
        ended = true;
      }
      else if ( head == ".latch" || head == ".mlatch" )
      {
        throw BlifError( line, fmt::format( "sequential unsupported: '{}' (only combinational netlists are accepted)", head ) );
      }
      else if ( head == ".subckt" || head == ".gate" || head == ".search" || head == ".exdc" )
      {
        throw BlifError( line, fmt::format( "'{}' is not supported: expected a flat LUT netlist", head ) );
      }
      else
      {
        throw BlifError( line, fmt::format( "unknown directive '{}'", head ) );
      }
      continue;
    }

    if ( current == nullptr )
    {
      throw BlifError( line, fmt::format( "unexpected token '{}' outside a .names cover", head ) );
    }
    const auto k = current->inputs.size();
    std::string cube;
    std::string out;
    if ( k == 0u && tokens.size() == 1u )
    {
      out = tokens[0];
    }
    else if ( tokens.size() == 2u )
    {
      cube = tokens[0];
      out = tokens[1];
    }
    else
    {
      throw BlifError( line, "malformed cover row" );
    }
    if ( cube.size() != k )
    {
      throw BlifError( line, fmt::format( "cube '{}' has {} literals, expected {}", cube, cube.size(), k ) );
    }
    if ( cube.find_first_not_of( "01-" ) != std::string::npos )
    {
      throw BlifError( line, fmt::format( "invalid character in cube '{}'", cube ) );
    }
    if ( out != "0" && out != "1" )
    {
      throw BlifError( line, fmt::format( "invalid output value '{}'", out ) );
    }
    current->cubes.emplace_back( std::move( cube ), out[0] );
  }

  LutNetwork net( model );
  try
  {
    for ( const auto& [line, name] : inputs )
    {
      try
      {
        net.add_pi( name );
      }
      catch ( const NetworkError& e )
      {
        throw BlifError( line, e.what() );
      }
    }
    for ( const auto& node : nodes )
    {
      std::vector<SignalId> fanins;
      fanins.reserve( node.inputs.size() );
      for ( const auto& in_name : node.inputs )
      {
        fanins.push_back( net.signal( in_name ) );
      }
      auto function = compile_cover( node );
      try
      {
        net.set_node( net.signal( node.output ), std::move( fanins ), std::move( function ) );
      }
      catch ( const NetworkError& e )
      {
        throw BlifError( node.line, e.what() );
      }
    }
    for ( const auto& [line, name] : outputs )
    {
      net.add_po( net.signal( name ) );
    }
    net.validate();
  }
  catch ( const NetworkError& e )
  {
    throw BlifError( 0u, e.what() );
  }
  return net;
}

LutNetwork parse_blif( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  return parse_blif( in );
}

LutNetwork read_blif( const std::filesystem::path& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw IoError( fmt::format( "cannot open '{}' for reading", path.string() ) );
  }
  return parse_blif( in );
}

namespace
{

void write_name_list( std::ostream& out, std::string_view directive, const LutNetwork& net, std::span<const SignalId> signals )
{
  constexpr std::size_t per_line = 8u;
  out << directive;
  for ( std::size_t i = 0u; i < signals.size(); ++i )
  {
    if ( i > 0u && i % per_line == 0u )
    {
      out << " \\\n";
    }
    out << ' ' << net.name( signals[i] );
  }
  out << '\n';
}

} // namespace

void write_blif( const LutNetwork& net, std::ostream& out )
{
  out << ".model " << net.model_name() << '\n';
  write_name_list( out, ".inputs", net, net.pis() );
  write_name_list( out, ".outputs", net, net.pos() );

  for ( auto s : topological_order( net ) )
  {
    const auto& n = net.node( s );
    out << ".names";
    for ( auto f : n.fanins )
    {
      out << ' ' << net.name( f );
    }
    out << ' ' << net.name( s ) << '\n';

    const auto& t = n.function;
    const auto k = t.num_vars();
    if ( k == 0u )
    {
      if ( t.is_const1() )
      {
        out << "1\n";
      }
      continue;
    }
    if ( t.is_const1() )
    {
      out << std::string( k, '-' ) << " 1\n";
      continue;
    }
    /* list whichever of on-set and off-set is smaller */
    const auto ones = static_cast<uint32_t>( std::popcount( t.bits() ) );
    const bool offset = ones * 2u > t.num_bits();
    for ( uint32_t m = 0u; m < t.num_bits(); ++m )
    {
      if ( t.get_bit( m ) == offset )
      {
        continue;
      }
      std::string cube( k, '0' );
      for ( uint32_t i = 0u; i < k; ++i )
      {
        if ( ( m >> i ) & 1u )
        {
          cube[i] = '1';
        }
      }
      out << cube << ( offset ? " 0\n" : " 1\n" );
    }
  }
  out << ".end\n";
}

std::string write_blif( const LutNetwork& net )
{
  std::ostringstream out;
  write_blif( net, out );
  return out.str();
}

void write_blif( const LutNetwork& net, const std::filesystem::path& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw IoError( fmt::format( "cannot open '{}' for writing", path.string() ) );
  }
  write_blif( net, out );
  if ( !out )
  {
    throw IoError( fmt::format( "failed writing '{}'", path.string() ) );
  }
}

} // namespace quadol
