/*!
  \file report.hpp
  \brief JSON run reports (schema 1)
*/

#pragma once

#include <quadol/flow.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace quadol
{

/*! \brief Value rounded to nine significant digits. */
double round9( double value );

nlohmann::json to_json( const ErrorReport& report );
nlohmann::json to_json( const FlowParams& params );

/*! \brief Sidecar entry with the LUT6_2 programming of one merged pair. */
nlohmann::json merged_pair_json( const LutNetwork& net, const MergedPair& pair, std::optional<double> estimated_error );

nlohmann::json flow_report( const FlowResult& result, const FlowParams& params );
nlohmann::json plus_report( const PlusResult& result, const FlowParams& params );

/*! \brief Serialized report, two-space indent, trailing newline. */
std::string dump_report( const nlohmann::json& report );

} // namespace quadol
