/*!
  \file flow.cpp
  \brief Binary search over the error-sorted candidate prefix
*/

#include <quadol/flow.hpp>

#include <quadol/dual_output.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace quadol
{

void validate( const FlowParams& params )
{
  if ( !( params.bound >= 0.0 ) )
  {
    throw std::invalid_argument( "error bound must be non-negative" );
  }
  if ( params.metric == Metric::er && params.bound > 1.0 )
  {
    throw std::invalid_argument( "ER bound must lie in [0, 1]" );
  }
  if ( params.k == 0u )
  {
    throw std::invalid_argument( "k must be at least 1" );
  }
  if ( params.sampling.samples == 0u )
  {
    throw std::invalid_argument( "sample count must be positive" );
  }
}

uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

void parallel_for( std::size_t count, unsigned jobs, const std::function<void( std::size_t )>& body )
{
  if ( jobs == 0u )
  {
    jobs = std::max( 1u, std::thread::hardware_concurrency() );
  }
  const auto workers = static_cast<std::size_t>( std::min<std::size_t>( jobs, count ) );
  if ( workers <= 1u )
  {
    for ( std::size_t i = 0u; i < count; ++i )
    {
      body( i );
    }
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve( workers );
  for ( std::size_t t = 0u; t < workers; ++t )
  {
    threads.emplace_back( [&, t] {
      try
      {
        for ( std::size_t i = t; i < count; i += workers )
        {
          body( i );
        }
      }
      catch ( ... )
      {
        std::lock_guard lock( error_mutex );
        if ( !error )
        {
          error = std::current_exception();
        }
      }
    } );
  }
  for ( auto& th : threads )
  {
    th.join();
  }
  if ( error )
  {
    std::rethrow_exception( error );
  }
}

void optimize_candidates( const LutNetwork& base, std::vector<PairCandidate>& candidates,
                          const ErrorEvaluator& sim, Metric metric, unsigned jobs )
{
  parallel_for( candidates.size(), jobs, [&]( std::size_t i ) {
    candidates[i].config = optimize_pair( base, candidates[i], &sim, metric );
  } );
}

void estimate_pair_errors( const LutNetwork& base, std::vector<PairCandidate>& candidates,
                           const ErrorEvaluator& sim, Metric metric, unsigned jobs )
{
  parallel_for( candidates.size(), jobs, [&]( std::size_t i ) {
    auto& c = candidates[i];
    if ( !c.config )
    {
      throw std::invalid_argument( "candidate has no configuration" );
    }
    const std::array<MergeRequest, 1> request{ MergeRequest{ c.f, c.g, *c.config } };
    const auto merged = apply_merges( base, request );
    c.estimated_error = sim.evaluate_incremental( merged, merge_touched_nodes( base, request ) ).value( metric );
  } );
}

std::vector<PairCandidate> estimate_all_pair_errors( const LutNetwork& exact_ref, const LutNetwork& base_net,
                                                     std::vector<PairCandidate> candidates, const FlowParams& params )
{
  const SamplePolicy policy{ params.sampling.exhaustive_limit, params.sampling.samples, params.seed };
  const ErrorEvaluator sim( exact_ref, base_net, policy, params.word );
  estimate_pair_errors( base_net, candidates, sim, params.metric, params.jobs );
  return candidates;
}

namespace
{

struct Evaluated
{
  std::size_t size{ 0u };
  double error{ 0.0 };
  bool feasible{ false };
};

/* more merges first, then less error */
bool improves( std::size_t size, double error, std::size_t best_size, double best_error )
{
  return size > best_size || ( size == best_size && error < best_error );
}

std::vector<MergeRequest> requests_of( const ConflictGraph& graph, const Matching& m )
{
  std::vector<MergeRequest> requests;
  requests.reserve( m.size() );
  for ( auto e : m.edges )
  {
    const auto& c = graph.edges[e];
    requests.push_back( MergeRequest{ c.f, c.g, *c.config } );
  }
  return requests;
}

} // namespace

FlowResult run_quadol( const LutNetwork& exact_ref, const LutNetwork& base_net, const FlowParams& params )
{
  validate( params );
  if ( !same_interface( exact_ref, base_net ) )
  {
    throw NetworkError( fmt::format( "'{}' and '{}' have different interfaces", exact_ref.model_name(), base_net.model_name() ) );
  }
  const auto base = normalize_support( base_net );
  const SamplePolicy policy{ params.sampling.exhaustive_limit, params.sampling.samples, params.seed };
  const ErrorEvaluator sim( exact_ref, base, policy, params.word );

  FlowResult result;
  result.network = base;
  result.exact_luts = lut_count( exact_ref );
  result.base_luts = lut_count( base );
  result.base_error = sim.evaluate_base();
  result.error = result.base_error;
  result.base_feasible = result.base_error.value( params.metric ) <= params.bound;
  result.feasible = result.base_feasible;
  const auto finish = [&]( FlowResult& r ) {
    r.luts = lut_count( r.network );
    r.area_ratio = r.exact_luts == 0u ? 1.0 : static_cast<double>( r.luts ) / static_cast<double>( r.exact_luts );
    return std::move( r );
  };
  if ( !result.base_feasible )
  {
    return finish( result );
  }

  auto candidates = enumerate_pairs( base );
  optimize_candidates( base, candidates, sim, params.metric, params.jobs );
  estimate_pair_errors( base, candidates, sim, params.metric, params.jobs );
  std::stable_sort( candidates.begin(), candidates.end(), []( const PairCandidate& x, const PairCandidate& y ) {
    return *x.estimated_error < *y.estimated_error;
  } );

  std::optional<std::vector<MergeRequest>> best_requests;
  std::size_t best_size = 0u;
  double best_error = result.base_error.value( params.metric );

  const std::size_t m = candidates.size();
  std::size_t lo = 0u;
  std::size_t hi = m + 1u;
  std::size_t n = ( m + 1u ) / 2u;
  for ( std::size_t iteration = 0u; m > 0u && lo < n && n < hi; ++iteration )
  {
    ProbeTrace probe;
    probe.iteration = iteration;
    probe.prefix = n;
    probe.lo = lo;
    probe.hi = hi;
    probe.seed = splitmix64( params.seed + iteration );

    const auto graph = build_conflict_graph( { candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>( n ) } );
    probe.graph_vertices = graph.vertices.size();
    probe.graph_edges = graph.edges.size();
    const auto matchings = k_random_matchings( graph, params.k, probe.seed );

    /* identical matchings are simulated once */
    std::vector<std::size_t> first_of( matchings.size() );
    std::vector<std::size_t> distinct;
    for ( std::size_t i = 0u; i < matchings.size(); ++i )
    {
      const auto it = std::find_if( distinct.begin(), distinct.end(), [&]( std::size_t j ) { return matchings[j] == matchings[i]; } );
      if ( it == distinct.end() )
      {
        first_of[i] = i;
        distinct.push_back( i );
      }
      else
      {
        first_of[i] = *it;
      }
    }
    probe.distinct_matchings = distinct.size();

    std::vector<Evaluated> evaluated( matchings.size() );
    parallel_for( distinct.size(), params.jobs, [&]( std::size_t d ) {
      const auto i = distinct[d];
      const auto requests = requests_of( graph, matchings[i] );
      const auto merged = apply_merges( base, requests );
      const auto error = sim.evaluate_incremental( merged, merge_touched_nodes( base, requests ) ).value( params.metric );
      evaluated[i] = { matchings[i].size(), error, error <= params.bound };
    } );

    std::optional<std::size_t> probe_best;
    for ( std::size_t i = 0u; i < matchings.size(); ++i )
    {
      const auto& e = evaluated[first_of[i]];
      probe.matching_sizes.push_back( e.size );
      probe.matching_errors.push_back( e.error );
      if ( e.feasible && ( !probe_best || improves( e.size, e.error, evaluated[*probe_best].size, evaluated[*probe_best].error ) ) )
      {
        probe_best = first_of[i];
      }
    }
    probe.feasible = probe_best.has_value();
    if ( probe_best && improves( evaluated[*probe_best].size, evaluated[*probe_best].error, best_size, best_error ) )
    {
      best_size = evaluated[*probe_best].size;
      best_error = evaluated[*probe_best].error;
      best_requests = requests_of( graph, matchings[*probe_best] );
    }
    result.trace.push_back( std::move( probe ) );

    if ( result.trace.back().feasible )
    {
      lo = n;
      n = ( lo + hi + 1u ) / 2u;
    }
    else
    {
      hi = n;
      n = ( lo + hi ) / 2u;
    }
  }

  if ( best_requests )
  {
    result.network = apply_merges( base, *best_requests );
    result.error = sim.evaluate( result.network );
    result.feasible = result.error.value( params.metric ) <= params.bound;
  }
  result.candidates = std::move( candidates );
  return finish( result );
}

const FlowResult& PlusResult::best() const
{
  if ( !winner )
  {
    throw std::logic_error( "no feasible run" );
  }
  return *runs[*winner].result;
}

PlusResult run_quadol_plus( const LutNetwork& exact_ref, std::span<const NamedNetwork> intermediates, const FlowParams& params )
{
  PlusResult plus;
  plus.runs.push_back( PlusRun{ "exact", false, {}, run_quadol( exact_ref, exact_ref, params ) } );
  for ( const auto& [name, net] : intermediates )
  {
    PlusRun run{ name, false, {}, std::nullopt };
    if ( !same_interface( exact_ref, net ) )
    {
      run.skipped = true;
      run.warning = fmt::format( "'{}' does not match the interface of the exact netlist", name );
    }
    else
    {
      run.result = run_quadol( exact_ref, net, params );
    }
    plus.runs.push_back( std::move( run ) );
  }

  for ( std::size_t i = 0u; i < plus.runs.size(); ++i )
  {
    const auto& r = plus.runs[i].result;
    if ( !r || !r->feasible )
    {
      continue;
    }
    if ( !plus.winner )
    {
      plus.winner = i;
      continue;
    }
    const auto& w = *plus.runs[*plus.winner].result;
    if ( r->luts < w.luts || ( r->luts == w.luts && r->error.value( params.metric ) < w.error.value( params.metric ) ) )
    {
      plus.winner = i;
    }
  }
  return plus;
}

} // namespace quadol
