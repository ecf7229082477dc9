#include <quadol/blif.hpp>
#include <quadol/dual_output.hpp>
#include <quadol/flow.hpp>
#include <quadol/matching.hpp>
#include <quadol/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace quadol;

namespace
{

std::vector<std::string> names( const LutNetwork& net, std::span<const SignalId> signals )
{
  std::vector<std::string> out;
  for ( auto s : signals )
  {
    out.push_back( net.name( s ) );
  }
  return out;
}

FlowParams make_params( const std::string& metric, double bound, uint32_t k, uint64_t seed, uint32_t exhaustive_limit,
                        uint64_t samples, bool msb_first, unsigned jobs )
{
  if ( metric != "er" && metric != "mred" )
  {
    throw py::value_error( "metric must be 'er' or 'mred'" );
  }
  FlowParams p;
  p.metric = metric == "er" ? Metric::er : Metric::mred;
  p.bound = bound;
  p.k = k;
  p.seed = seed;
  p.sampling.exhaustive_limit = exhaustive_limit;
  p.sampling.samples = samples;
  p.word.msb_first = msb_first;
  p.jobs = jobs;
  return p;
}

} // namespace

PYBIND11_MODULE( _quadol, m )
{
  m.doc() = "Approximate LUT merging for dual-output LUTs";

  py::register_exception<BlifError>( m, "BlifError", PyExc_ValueError );
  py::register_exception<NetworkError>( m, "NetworkError", PyExc_ValueError );
  py::register_exception<IoError>( m, "IoError", PyExc_OSError );

  py::class_<LutNetwork>( m, "Network" )
      .def_property_readonly( "model_name", &LutNetwork::model_name )
      .def_property_readonly( "inputs", []( const LutNetwork& n ) { return names( n, n.pis() ); } )
      .def_property_readonly( "outputs", []( const LutNetwork& n ) { return names( n, n.pos() ); } )
      .def_property_readonly( "num_nodes", &LutNetwork::num_nodes )
      .def_property_readonly( "num_merges", []( const LutNetwork& n ) { return n.merges().size(); } )
      .def( "lut_count", []( const LutNetwork& n ) { return lut_count( n ); } )
      .def( "__repr__", []( const LutNetwork& n ) {
        return "<Network " + n.model_name() + ": " + std::to_string( n.pis().size() ) + " inputs, " +
               std::to_string( n.pos().size() ) + " outputs, " + std::to_string( n.num_nodes() ) + " nodes>";
      } );

  m.def( "parse_blif", []( const std::string& text ) { return parse_blif( std::string_view( text ) ); }, py::arg( "text" ) );
  m.def( "read_blif", []( const std::string& path ) { return read_blif( path ); }, py::arg( "path" ) );
  m.def( "write_blif", []( const LutNetwork& net ) { return write_blif( net ); }, py::arg( "net" ) );
  m.def( "normalize_support", &normalize_support, py::arg( "net" ) );

  m.def(
      "evaluate",
      []( const LutNetwork& exact, const LutNetwork& approx, uint32_t exhaustive_limit, uint64_t samples, uint64_t seed, bool msb_first ) {
        if ( !same_interface( exact, approx ) )
        {
          throw NetworkError( "networks have different interfaces" );
        }
        const auto stim = StimulusSet::for_inputs( exact.pis().size(), SamplePolicy{ exhaustive_limit, samples, seed } );
        const auto r = compare_outputs( simulate( exact, stim ), simulate( approx, stim ), stim, WordSpec{ msb_first } );
        return to_json( r ).dump();
      },
      py::arg( "exact" ), py::arg( "approx" ), py::arg( "exhaustive_limit" ) = 16u, py::arg( "samples" ) = 100000u,
      py::arg( "seed" ) = 0u, py::arg( "msb_first" ) = false );

  m.def(
      "pairs",
      []( const LutNetwork& net ) {
        const auto normalized = normalize_support( net );
        nlohmann::json list = nlohmann::json::array();
        for ( auto& p : enumerate_pairs( normalized ) )
        {
          const auto config = optimize_pair( normalized, p );
          list.push_back( merged_pair_json( normalized, MergedPair{ p.f, p.g, config }, std::nullopt ) );
        }
        return list.dump();
      },
      py::arg( "net" ) );

  m.def(
      "run_quadol",
      []( const LutNetwork& exact, const LutNetwork* base, const std::string& metric, double bound, uint32_t k, uint64_t seed,
          uint32_t exhaustive_limit, uint64_t samples, bool msb_first, unsigned jobs ) {
        const auto params = make_params( metric, bound, k, seed, exhaustive_limit, samples, msb_first, jobs );
        FlowResult r = [&] {
          py::gil_scoped_release release;
          return run_quadol( exact, base ? *base : exact, params );
        }();
        auto report = dump_report( flow_report( r, params ) );
        return py::make_tuple( std::move( r.network ), report );
      },
      py::arg( "exact" ), py::arg( "base" ) = nullptr, py::arg( "metric" ) = "er", py::arg( "bound" ) = 0.0,
      py::arg( "k" ) = 16u, py::arg( "seed" ) = 0u, py::arg( "exhaustive_limit" ) = 16u, py::arg( "samples" ) = 100000u,
      py::arg( "msb_first" ) = false, py::arg( "jobs" ) = 1u );

  m.def(
      "run_quadol_plus",
      []( const LutNetwork& exact, const std::vector<std::pair<std::string, LutNetwork>>& intermediates, const std::string& metric,
          double bound, uint32_t k, uint64_t seed, uint32_t exhaustive_limit, uint64_t samples, bool msb_first, unsigned jobs ) {
        const auto params = make_params( metric, bound, k, seed, exhaustive_limit, samples, msb_first, jobs );
        std::vector<NamedNetwork> named;
        for ( const auto& [name, net] : intermediates )
        {
          named.push_back( NamedNetwork{ name, net } );
        }
        PlusResult r = [&] {
          py::gil_scoped_release release;
          return run_quadol_plus( exact, named, params );
        }();
        auto report = dump_report( plus_report( r, params ) );
        py::object best = py::none();
        if ( r.winner )
        {
          best = py::cast( r.best().network );
        }
        return py::make_tuple( best, report );
      },
      py::arg( "exact" ), py::arg( "intermediates" ), py::arg( "metric" ) = "er", py::arg( "bound" ) = 0.0,
      py::arg( "k" ) = 16u, py::arg( "seed" ) = 0u, py::arg( "exhaustive_limit" ) = 16u, py::arg( "samples" ) = 100000u,
      py::arg( "msb_first" ) = false, py::arg( "jobs" ) = 1u );

  m.def(
      "maximum_matching",
      []( std::size_t num_vertices, const std::vector<std::pair<uint32_t, uint32_t>>& edges ) {
        return maximum_matching( num_vertices, edges );
      },
      py::arg( "num_vertices" ), py::arg( "edges" ) );

  m.def(
      "shared6_hd",
      []( uint64_t f, uint64_t g ) {
        std::array<SignalId, 6> inputs{};
        for ( uint32_t i = 0u; i < 6u; ++i )
        {
          inputs[i] = SignalId{ i };
        }
        return optimize_shared6( TruthTable( 6u, f ), TruthTable( 6u, g ), inputs ).structural_hd;
      },
      py::arg( "f" ), py::arg( "g" ),
      "Least error of merging two 6-input functions over the same inputs (truth tables as 64-bit integers)." );
}
