#include <doctest.h>

#include "../common/oracles.hpp"

#include <quadol/blif.hpp>
#include <quadol/cli.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace quadol;
namespace fs = std::filesystem;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run cli( std::vector<std::string> args )
{
  std::ostringstream out;
  std::ostringstream err;
  const auto code = run_cli( args, out, err );
  return { code, out.str(), err.str() };
}

std::string slurp( const fs::path& p )
{
  std::ifstream in( p, std::ios::binary );
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json json_file( const fs::path& p )
{
  return nlohmann::json::parse( slurp( p ) );
}

struct TempDir
{
  fs::path path;
  explicit TempDir( const std::string& tag )
      : path( fs::temp_directory_path() / ( "quadol_cli_" + tag + "_" + std::to_string( ::getpid() ) ) )
  {
    fs::remove_all( path );
    fs::create_directories( path );
  }
  ~TempDir() { fs::remove_all( path ); }
  std::string operator/( const std::string& name ) const { return ( path / name ).string(); }
};

const auto data = []( const std::string& name ) { return oracle::data_path( name ); };

} // namespace

TEST_CASE( "usage errors" )
{
  CHECK( cli( {} ).code == exit_code::usage );
  CHECK( cli( { "frobnicate" } ).code == exit_code::usage );
  CHECK( cli( { "quadol", data( "adder4.blif" ) } ).code == exit_code::usage );
  CHECK( cli( { "quadol", data( "adder4.blif" ), "--bound", "0.1", "--what" } ).code == exit_code::usage );
  CHECK( cli( { "quadol", data( "adder4.blif" ), "--bound", "2" } ).code == exit_code::usage );
  CHECK( cli( { "quadol", data( "adder4.blif" ), "--bound", "0.1", "--metric", "mse" } ).code == exit_code::usage );
  CHECK( cli( { "quadol", data( "adder4.blif" ), "--bound", "0.1", "--k", "0" } ).code == exit_code::usage );
  CHECK( cli( { "--help" } ).code == exit_code::ok );
}

TEST_CASE( "input errors" )
{
  const auto missing = cli( { "quadol", "/nonexistent/in.blif", "--bound", "0" } );
  CHECK( missing.code == exit_code::io );
  CHECK( !missing.err.empty() );

  TempDir dir( "parse" );
  std::ofstream( dir / "bad.blif" ) << ".model bad\n.inputs a\n.outputs q\n.latch a q\n.end\n";
  const auto bad = cli( { "quadol", dir / "bad.blif", "--bound", "0" } );
  CHECK( bad.code == exit_code::parse );
  CHECK( bad.err.find( "sequential" ) != std::string::npos );

  CHECK( cli( { "evaluate", data( "adder4.blif" ), data( "mult4.blif" ) } ).code == exit_code::parse );
  CHECK( cli( { "quadol", data( "adder4.blif" ), "--base", data( "mult4.blif" ), "--bound", "0" } ).code == exit_code::parse );
  CHECK( cli( { "quadol", data( "mult4.blif" ), "--bound", "0", "--output", "/nonexistent/dir/out.blif" } ).code == exit_code::io );
  CHECK( cli( { "quadol-plus", data( "mult4.blif" ), "--intermediates", "/nonexistent/dir", "--bound", "0" } ).code == exit_code::io );
}

TEST_CASE( "quadol on the adder" )
{
  TempDir dir( "adder" );
  const auto r = cli( { "quadol", data( "adder8.blif" ), "--metric", "er", "--bound", "0.02", "--k", "16", "--seed", "42",
                        "--jobs", "2", "--output", dir / "out.blif", "--report", dir / "report.json" } );
  REQUIRE( r.code == exit_code::ok );
  const auto j = json_file( dir / "report.json" );
  CHECK( j["schema"] == 1 );
  CHECK( j["command"] == "quadol" );
  CHECK( j["params"]["seed"] == 42 );
  CHECK( j["result"]["error"]["er"].get<double>() <= 0.02 );
  CHECK( j["result"]["feasible"] == true );
  CHECK( j["result"]["merged_pair_count"] == j["result"]["merged_pairs"].size() );

  /* the emitted netlist re-measures to the stated error */
  const auto e = cli( { "evaluate", data( "adder8.blif" ), dir / "out.blif", "--report", dir / "report.json", "--json", "--seed", "42" } );
  REQUIRE( e.code == exit_code::ok );
  const auto ej = nlohmann::json::parse( e.out );
  CHECK( ej["error"]["er"] == j["result"]["error"]["er"] );
  CHECK( ej["luts"] == j["result"]["luts"] );
  CHECK( ej["area_ratio"] == j["result"]["area_ratio"] );
}

TEST_CASE( "zero bound with an exact pair" )
{
  TempDir dir( "exactpair" );
  const auto r = cli( { "quadol", data( "adder8_exactpair.blif" ), "--bound", "0", "--exhaustive-limit", "17", "--report", dir / "r.json" } );
  REQUIRE( r.code == exit_code::ok );
  const auto j = json_file( dir / "r.json" );
  CHECK( j["result"]["area_ratio"].get<double>() < 1.0 );
  CHECK( j["result"]["error"]["er"] == 0.0 );
  CHECK( j["result"]["error"]["mode"] == "exhaustive" );
  for ( const auto& p : j["result"]["merged_pairs"] )
  {
    CHECK( p["structural_hd"] == 0 );
  }
}

TEST_CASE( "reports are reproducible" )
{
  TempDir dir( "repro" );
  for ( const auto* tag : { "a", "b" } )
  {
    const auto t = std::string( tag );
    REQUIRE( cli( { "quadol", data( "mult4.blif" ), "--metric", "mred", "--bound", "0.1", "--seed", "42",
                    "--output", dir / ( t + ".blif" ), "--report", dir / ( t + ".json" ) } )
                 .code == exit_code::ok );
  }
  CHECK( slurp( dir.path / "a.json" ) == slurp( dir.path / "b.json" ) );
  CHECK( slurp( dir.path / "a.blif" ) == slurp( dir.path / "b.blif" ) );

  const auto j = json_file( dir.path / "a.json" );
  const auto e = cli( { "evaluate", data( "mult4.blif" ), dir / "a.blif", "--json" } );
  const auto ej = nlohmann::json::parse( e.out );
  CHECK( ej["error"]["mred"] == j["result"]["error"]["mred"] );
  CHECK( ej["error"]["er"] == j["result"]["error"]["er"] );
}

TEST_CASE( "infeasible input" )
{
  const auto r = cli( { "quadol", data( "qplus/exact.blif" ), "--base", data( "qplus/inter_b.blif" ), "--bound", "0.05" } );
  CHECK( r.code == exit_code::infeasible );
  CHECK( !r.err.empty() );
}

TEST_CASE( "evaluate" )
{
  const auto same = nlohmann::json::parse( cli( { "evaluate", data( "mult4.blif" ), data( "mult4.blif" ), "--json" } ).out );
  CHECK( same["error"]["er"] == 0.0 );
  CHECK( same["error"]["mred"] == 0.0 );
  CHECK( same["area_ratio"] == 1.0 );

  const auto flip = nlohmann::json::parse(
      cli( { "evaluate", data( "adder8.blif" ), data( "adder8_flip.blif" ), "--exhaustive-limit", "17", "--json" } ).out );
  CHECK( flip["error"]["er"] == 0.125 );
  CHECK( flip["error"]["differing_vectors"] == 16384 );

  const auto exact = read_blif( data( "adder4.blif" ) );
  const auto stuck = read_blif( data( "adder4_s0_stuck0.blif" ) );
  const auto se = oracle::scalar_outputs( exact );
  const auto ss = oracle::scalar_outputs( stuck );
  const auto lsb = nlohmann::json::parse( cli( { "evaluate", data( "adder4.blif" ), data( "adder4_s0_stuck0.blif" ), "--json" } ).out );
  const auto msb = nlohmann::json::parse( cli( { "evaluate", data( "adder4.blif" ), data( "adder4_s0_stuck0.blif" ), "--json", "--msb-first" } ).out );
  CHECK( lsb["error"]["mred"].get<double>() == doctest::Approx( oracle::scalar_mred( se, ss, false ) ).epsilon( 1e-9 ) );
  CHECK( msb["error"]["mred"].get<double>() == doctest::Approx( oracle::scalar_mred( se, ss, true ) ).epsilon( 1e-9 ) );
  CHECK( lsb["error"]["mred"] != msb["error"]["mred"] );
  CHECK( lsb["error"]["er"] == msb["error"]["er"] );

  const auto text = cli( { "evaluate", data( "mult4.blif" ), data( "qplus/inter_a.blif" ) } );
  CHECK( text.code == exit_code::ok );
  CHECK( text.out.find( "er: 0.04296875" ) != std::string::npos );
}

TEST_CASE( "quadol-plus" )
{
  TempDir dir( "plus" );
  const auto inter = dir.path / "inter";
  fs::create_directories( inter );
  fs::copy_file( data( "qplus/inter_a.blif" ), inter / "inter_a.blif" );
  fs::copy_file( data( "qplus/inter_b.blif" ), inter / "inter_b.blif" );

  const std::vector<std::string> args{ "quadol-plus", data( "qplus/exact.blif" ), "--intermediates", inter.string(),
                                       "--bound", "0.05", "--seed", "42", "--report", dir / "plus.json", "--output", dir / "best.blif" };
  REQUIRE( cli( args ).code == exit_code::ok );
  auto j = json_file( dir.path / "plus.json" );
  CHECK( j["command"] == "quadol-plus" );
  REQUIRE( j["runs"].size() == 3u );
  int winners = 0;
  for ( const auto& run : j["runs"] )
  {
    winners += run["winner"].get<bool>();
  }
  CHECK( winners == 1 );
  CHECK( j["runs"][2]["result"]["feasible"] == false );
  const auto first = slurp( dir.path / "plus.json" );
  REQUIRE( cli( args ).code == exit_code::ok );
  CHECK( slurp( dir.path / "plus.json" ) == first );

  fs::copy_file( data( "adder4.blif" ), inter / "odd.blif" );
  const auto warned = cli( args );
  CHECK( warned.code == exit_code::ok );
  CHECK( warned.err.find( "warning" ) != std::string::npos );
  j = json_file( dir.path / "plus.json" );
  REQUIRE( j["runs"].size() == 4u );
  CHECK( j["runs"][3]["skipped"] == true );

  const auto empty = dir.path / "empty";
  fs::create_directories( empty );
  REQUIRE( cli( { "quadol-plus", data( "qplus/exact.blif" ), "--intermediates", empty.string(), "--bound", "0.05",
                  "--seed", "42", "--report", dir / "e.json" } )
               .code == exit_code::ok );
  REQUIRE( cli( { "quadol", data( "qplus/exact.blif" ), "--bound", "0.05", "--seed", "42", "--report", dir / "q.json" } ).code == exit_code::ok );
  CHECK( json_file( dir.path / "e.json" )["runs"][0]["result"] == json_file( dir.path / "q.json" )["result"] );
}

TEST_CASE( "pairs" )
{
  const auto text = cli( { "pairs", data( "mult4.blif" ) } );
  CHECK( text.code == exit_code::ok );
  CHECK( text.out.find( "12 mergable pairs" ) != std::string::npos );
  const auto j = nlohmann::json::parse( cli( { "pairs", data( "mult4.blif" ), "--json" } ).out );
  CHECK( j["pairs"].size() == 12u );
  CHECK( cli( { "pairs", data( "adder4.blif" ) } ).out.find( "0 mergable pairs" ) != std::string::npos );
}
