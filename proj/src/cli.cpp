/*!
  \file cli.cpp
  \brief Subcommands quadol, quadol-plus, evaluate and pairs
*/

#include <quadol/blif.hpp>
#include <quadol/cli.hpp>
#include <quadol/dual_output.hpp>
#include <quadol/flow.hpp>
#include <quadol/report.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

namespace quadol
{

namespace
{

namespace fs = std::filesystem;

class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Options
{
  std::string exact;
  std::string base;
  std::string approx;
  std::string intermediates;
  std::string output;
  std::string report;
  std::string sidecar;
  std::string metric{ "er" };
  std::optional<double> bound;
  uint32_t k{ 16u };
  uint64_t seed{ 0u };
  uint64_t samples{ 100000u };
  uint32_t exhaustive_limit{ 16u };
  bool msb_first{ false };
  bool json{ false };
  unsigned jobs{ std::max( 1u, std::thread::hardware_concurrency() ) };
};

void add_sampling_flags( CLI::App* cmd, Options& o )
{
  cmd->add_option( "--seed", o.seed, "Random seed" )->capture_default_str();
  cmd->add_option( "--samples", o.samples, "Monte-carlo sample count" )->capture_default_str()->check( CLI::PositiveNumber );
  cmd->add_option( "--exhaustive-limit", o.exhaustive_limit, "Largest input count simulated exhaustively" )->capture_default_str();
  cmd->add_flag( "--msb-first", o.msb_first, "Read the first output as the most significant bit" );
}

void add_flow_flags( CLI::App* cmd, Options& o )
{
  cmd->add_option( "--metric", o.metric, "Error metric" )->check( CLI::IsMember( { "er", "mred" } ) )->capture_default_str();
  cmd->add_option( "--bound", o.bound, "Error bound" )->required();
  cmd->add_option( "--k", o.k, "Matchings per iteration" )->capture_default_str()->check( CLI::PositiveNumber );
  add_sampling_flags( cmd, o );
  cmd->add_option( "--jobs", o.jobs, "Worker threads" )->capture_default_str()->check( CLI::PositiveNumber );
  cmd->add_option( "--output", o.output, "Approximate BLIF netlist to write" );
  cmd->add_option( "--report", o.report, "JSON report to write" );
}

FlowParams flow_params( const Options& o )
{
  FlowParams p;
  p.metric = o.metric == "mred" ? Metric::mred : Metric::er;
  p.bound = o.bound.value_or( 0.0 );
  p.k = o.k;
  p.seed = o.seed;
  p.sampling.exhaustive_limit = o.exhaustive_limit;
  p.sampling.samples = o.samples;
  p.word.msb_first = o.msb_first;
  p.jobs = o.jobs;
  try
  {
    validate( p );
  }
  catch ( const std::invalid_argument& e )
  {
    throw UsageError( e.what() );
  }
  return p;
}

void write_text( const std::string& path, const std::string& text )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << text ) )
  {
    throw IoError( fmt::format( "cannot write '{}'", path ) );
  }
}

void print_summary( std::ostream& out, const FlowResult& r, const FlowParams& p )
{
  fmt::print( out, "model: {}\n", r.network.model_name() );
  fmt::print( out, "luts: {} -> {} (exact {}, area ratio {:.9g})\n", r.base_luts, r.luts, r.exact_luts, r.area_ratio );
  fmt::print( out, "merged pairs: {} of {} candidates\n", r.merged_pairs(), r.candidates.size() );
  fmt::print( out, "er: {:.9g}\nmred: {:.9g}\n", r.error.er, r.error.mred );
  fmt::print( out, "{}: {:.9g} (bound {:.9g}, {})\n", to_string( p.metric ), r.error.value( p.metric ), p.bound,
              r.feasible ? "met" : "violated" );
}

int cmd_quadol( const Options& o, std::ostream& out, std::ostream& err )
{
  const auto params = flow_params( o );
  const auto exact = read_blif( o.exact );
  const auto base = o.base.empty() ? exact : read_blif( o.base );
  const auto result = run_quadol( exact, base, params );
  if ( !o.output.empty() )
  {
    write_blif( result.network, fs::path( o.output ) );
  }
  if ( !o.report.empty() )
  {
    write_text( o.report, dump_report( flow_report( result, params ) ) );
  }
  print_summary( out, result, params );
  if ( !result.base_feasible )
  {
    fmt::print( err, "error: the input netlist already exceeds the bound ({} = {:.9g})\n",
                to_string( params.metric ), result.base_error.value( params.metric ) );
    return exit_code::infeasible;
  }
  return exit_code::ok;
}

int cmd_quadol_plus( const Options& o, std::ostream& out, std::ostream& err )
{
  const auto params = flow_params( o );
  const auto exact = read_blif( o.exact );

  std::error_code ec;
  if ( !fs::is_directory( o.intermediates, ec ) )
  {
    throw IoError( fmt::format( "'{}' is not a readable directory", o.intermediates ) );
  }
  std::vector<fs::path> files;
  for ( const auto& entry : fs::directory_iterator( o.intermediates ) )
  {
    if ( entry.is_regular_file() && entry.path().extension() == ".blif" )
    {
      files.push_back( entry.path() );
    }
  }
  std::sort( files.begin(), files.end() );
  std::vector<NamedNetwork> intermediates;
  for ( const auto& f : files )
  {
    intermediates.push_back( NamedNetwork{ f.filename().string(), read_blif( f ) } );
  }

  const auto plus = run_quadol_plus( exact, intermediates, params );
  for ( const auto& run : plus.runs )
  {
    if ( run.skipped )
    {
      fmt::print( err, "warning: {}\n", run.warning );
    }
    else
    {
      fmt::print( out, "{}: {} luts, {} {:.9g}{}\n", run.name, run.result->luts, to_string( params.metric ),
                  run.result->error.value( params.metric ), run.result->feasible ? "" : " (infeasible)" );
    }
  }
  if ( !o.report.empty() )
  {
    write_text( o.report, dump_report( plus_report( plus, params ) ) );
  }
  if ( !plus.winner )
  {
    fmt::print( err, "error: no run meets the bound\n" );
    return exit_code::infeasible;
  }
  const auto& best = plus.best();
  if ( !o.output.empty() )
  {
    write_blif( best.network, fs::path( o.output ) );
  }
  fmt::print( out, "winner: {}\n", plus.runs[*plus.winner].name );
  print_summary( out, best, params );
  return exit_code::ok;
}

int cmd_evaluate( const Options& o, std::ostream& out )
{
  const auto exact = read_blif( o.exact );
  const auto approx = read_blif( o.approx );
  if ( !same_interface( exact, approx ) )
  {
    throw NetworkError( "the two netlists have different primary inputs or outputs" );
  }
  const SamplePolicy policy{ o.exhaustive_limit, o.samples, o.seed };
  const auto stim = StimulusSet::for_inputs( exact.pis().size(), policy );
  const auto report = compare_outputs( simulate( exact, stim ), simulate( approx, stim ), stim, WordSpec{ o.msb_first } );

  auto approx_luts = lut_count( approx );
  if ( !o.sidecar.empty() )
  {
    std::ifstream in( o.sidecar );
    if ( !in )
    {
      throw IoError( fmt::format( "cannot open '{}'", o.sidecar ) );
    }
    nlohmann::json j;
    try
    {
      in >> j;
      const auto& r = j.contains( "result" ) ? j.at( "result" ) : j.at( "runs" ).at( 0 ).at( "result" );
      approx_luts -= r.at( "merged_pairs" ).size();
    }
    catch ( const nlohmann::json::exception& e )
    {
      throw BlifError( 0u, fmt::format( "malformed report '{}': {}", o.sidecar, e.what() ) );
    }
  }
  const auto exact_luts = lut_count( exact );
  const double ratio = exact_luts == 0u ? 1.0 : static_cast<double>( approx_luts ) / static_cast<double>( exact_luts );

  if ( o.json )
  {
    nlohmann::json j{ { "schema", 1 },
                      { "command", "evaluate" },
                      { "error", to_json( report ) },
                      { "word", o.msb_first ? "msb-first" : "lsb-first" },
                      { "exact_luts", exact_luts },
                      { "luts", approx_luts },
                      { "area_ratio", round9( ratio ) } };
    out << dump_report( j );
    return exit_code::ok;
  }
  fmt::print( out, "er: {:.9g}\nmred: {:.9g}\n", report.er, report.mred );
  fmt::print( out, "vectors: {} ({})\n", report.sample_count, to_string( report.mode ) );
  fmt::print( out, "luts: {} -> {}\narea ratio: {:.9g}\n", exact_luts, approx_luts, ratio );
  return exit_code::ok;
}

int cmd_pairs( const Options& o, std::ostream& out )
{
  const auto net = normalize_support( read_blif( o.exact ) );
  auto pairs = enumerate_pairs( net );
  nlohmann::json list = nlohmann::json::array();
  for ( auto& p : pairs )
  {
    p.config = optimize_pair( net, p );
    if ( o.json )
    {
      list.push_back( merged_pair_json( net, MergedPair{ p.f, p.g, *p.config }, std::nullopt ) );
    }
    else
    {
      fmt::print( out, "{} {} {} hd={} row={}\n", net.name( p.f ), net.name( p.g ), to_string( p.type ),
                  p.config->structural_hd, p.config->table_row );
    }
  }
  if ( o.json )
  {
    out << dump_report( nlohmann::json{ { "schema", 1 }, { "command", "pairs" }, { "pairs", std::move( list ) } } );
  }
  else
  {
    fmt::print( out, "{} mergable pairs\n", pairs.size() );
  }
  return exit_code::ok;
}

} // namespace

int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
  Options o;
  CLI::App app{ "Approximate merging of LUT pairs into dual-output LUTs", "quadol" };
  app.require_subcommand( 1 );

  auto* quadol = app.add_subcommand( "quadol", "Merge LUT pairs of a netlist under an error bound" );
  quadol->add_option( "exact", o.exact, "Exact BLIF netlist" )->required();
  quadol->add_option( "--base", o.base, "Starting netlist (default: the exact one)" );
  add_flow_flags( quadol, o );

  auto* plus = app.add_subcommand( "quadol-plus", "Run the flow on the exact netlist and on intermediate approximations" );
  plus->add_option( "exact", o.exact, "Exact BLIF netlist" )->required();
  plus->add_option( "--intermediates", o.intermediates, "Directory of intermediate BLIF netlists" )->required();
  add_flow_flags( plus, o );

  auto* evaluate = app.add_subcommand( "evaluate", "Measure ER and MRED of an approximate netlist" );
  evaluate->add_option( "exact", o.exact, "Exact BLIF netlist" )->required();
  evaluate->add_option( "approx", o.approx, "Approximate BLIF netlist" )->required();
  evaluate->add_option( "--report", o.sidecar, "Flow report listing the merged pairs of the approximate netlist" );
  evaluate->add_flag( "--json", o.json, "Print JSON" );
  add_sampling_flags( evaluate, o );

  auto* pairs = app.add_subcommand( "pairs", "List mergable LUT pairs with their best configuration" );
  pairs->add_option( "netlist", o.exact, "BLIF netlist" )->required();
  pairs->add_flag( "--json", o.json, "Print JSON" );

  try
  {
    std::vector<std::string> reversed( args.rbegin(), args.rend() );
    app.parse( reversed );
  }
  catch ( const CLI::ParseError& e )
  {
    const auto code = app.exit( e, out, err );
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  try
  {
    if ( *quadol )
    {
      return cmd_quadol( o, out, err );
    }
    if ( *plus )
    {
      return cmd_quadol_plus( o, out, err );
    }
    if ( *evaluate )
    {
      return cmd_evaluate( o, out );
    }
    return cmd_pairs( o, out );
  }
  catch ( const UsageError& e )
  {
    fmt::print( err, "error: {}\n", e.what() );
    return exit_code::usage;
  }
  catch ( const IoError& e )
  {
    fmt::print( err, "error: {}\n", e.what() );
    return exit_code::io;
  }
  catch ( const BlifError& e )
  {
    fmt::print( err, "error: {}\n", e.what() );
    return exit_code::parse;
  }
  catch ( const NetworkError& e )
  {
    fmt::print( err, "error: {}\n", e.what() );
    return exit_code::parse;
  }
}

} // namespace quadol
