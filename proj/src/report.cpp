/*!
  \file report.cpp
  \brief JSON run reports
*/

#include <quadol/report.hpp>

#include <fmt/format.h>

#include <string>

namespace quadol
{

using nlohmann::json;

double round9( double value )
{
  return std::stod( fmt::format( "{:.9g}", value ) );
}

json to_json( const ErrorReport& report )
{
  return json{ { "er", round9( report.er ) },
               { "mred", round9( report.mred ) },
               { "differing_vectors", report.differing },
               { "samples", report.sample_count },
               { "mode", to_string( report.mode ) } };
}

json to_json( const FlowParams& params )
{
  return json{ { "metric", to_string( params.metric ) },
               { "bound", params.bound },
               { "k", params.k },
               { "seed", params.seed },
               { "exhaustive_limit", params.sampling.exhaustive_limit },
               { "samples", params.sampling.samples },
               { "word", params.word.msb_first ? "msb-first" : "lsb-first" } };
}

json merged_pair_json( const LutNetwork& net, const MergedPair& pair, std::optional<double> estimated_error )
{
  const auto& c = pair.config;
  json pins = json::array();
  for ( auto s : c.pins )
  {
    pins.push_back( net.name( s ) );
  }
  json i5;
  if ( c.i5.constant_one )
  {
    i5 = json{ { "const1", true } };
  }
  else
  {
    i5 = json{ { "signal", net.name( c.i5.signal ) }, { "phase", c.i5.inverted ? "negative" : "positive" } };
  }
  json entry{ { "f", net.name( pair.f ) },
              { "g", net.name( pair.g ) },
              { "type", to_string( c.type ) },
              { "pins", std::move( pins ) },
              { "i5", std::move( i5 ) },
              { "f_port", to_string( c.f_port ) },
              { "g_port", to_string( c.g_port ) },
              { "f_polarity", c.f_negated ? "negative" : "positive" },
              { "g_polarity", c.g_negated ? "negative" : "positive" },
              { "lut_a", c.lut_a.to_hex() },
              { "lut_b", c.lut_b.to_hex() },
              { "table_row", c.table_row },
              { "structural_hd", c.structural_hd } };
  if ( estimated_error )
  {
    entry["estimated_error"] = round9( *estimated_error );
  }
  return entry;
}

namespace
{

json trace_json( const std::vector<ProbeTrace>& trace )
{
  json out = json::array();
  for ( const auto& p : trace )
  {
    json errors = json::array();
    for ( auto e : p.matching_errors )
    {
      errors.push_back( round9( e ) );
    }
    out.push_back( json{ { "iteration", p.iteration },
                         { "prefix", p.prefix },
                         { "lo", p.lo },
                         { "hi", p.hi },
                         { "seed", p.seed },
                         { "graph_vertices", p.graph_vertices },
                         { "graph_edges", p.graph_edges },
                         { "matching_sizes", p.matching_sizes },
                         { "matching_errors", std::move( errors ) },
                         { "distinct_matchings", p.distinct_matchings },
                         { "feasible", p.feasible } } );
  }
  return out;
}

json result_json( const FlowResult& r, const FlowParams& params )
{
  json pairs = json::array();
  for ( const auto& m : r.network.merges() )
  {
    std::optional<double> estimate;
    for ( const auto& c : r.candidates )
    {
      if ( c.f == m.f && c.g == m.g )
      {
        estimate = c.estimated_error;
        break;
      }
    }
    pairs.push_back( merged_pair_json( r.network, m, estimate ) );
  }
  return json{ { "model", r.network.model_name() },
               { "primary_inputs", r.network.pis().size() },
               { "primary_outputs", r.network.pos().size() },
               { "base_feasible", r.base_feasible },
               { "feasible", r.feasible },
               { "base_error", to_json( r.base_error ) },
               { "error", to_json( r.error ) },
               { "metric_value", round9( r.error.value( params.metric ) ) },
               { "exact_luts", r.exact_luts },
               { "base_luts", r.base_luts },
               { "luts", r.luts },
               { "area_ratio", round9( r.area_ratio ) },
               { "candidate_pairs", r.candidates.size() },
               { "merged_pair_count", r.merged_pairs() },
               { "trace", trace_json( r.trace ) },
               { "merged_pairs", std::move( pairs ) } };
}

} // namespace

json flow_report( const FlowResult& result, const FlowParams& params )
{
  return json{ { "schema", 1 }, { "command", "quadol" }, { "params", to_json( params ) }, { "result", result_json( result, params ) } };
}

json plus_report( const PlusResult& result, const FlowParams& params )
{
  json runs = json::array();
  for ( std::size_t i = 0u; i < result.runs.size(); ++i )
  {
    const auto& run = result.runs[i];
    json entry{ { "name", run.name }, { "skipped", run.skipped }, { "winner", result.winner == i } };
    if ( !run.warning.empty() )
    {
      entry["warning"] = run.warning;
    }
    if ( run.result )
    {
      entry["result"] = result_json( *run.result, params );
    }
    runs.push_back( std::move( entry ) );
  }
  json report{ { "schema", 1 }, { "command", "quadol-plus" }, { "params", to_json( params ) }, { "runs", std::move( runs ) } };
  report["winner"] = result.winner ? json( result.runs[*result.winner].name ) : json( nullptr );
  return report;
}

std::string dump_report( const json& report )
{
  return report.dump( 2 ) + "\n";
}

} // namespace quadol
