/*!
  \file cli.hpp
  \brief Command-line front end
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadol
{

namespace exit_code
{
constexpr int ok = 0;
constexpr int usage = 2;
constexpr int parse = 3;
constexpr int infeasible = 4;
constexpr int io = 5;
} // namespace exit_code

/*! \brief Runs the tool; `args` excludes the program name. */
int run_cli( const std::vector<std::string>& args, std::ostream& out, std::ostream& err );

} // namespace quadol
