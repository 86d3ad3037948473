#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gis::cli {

  // Exit codes.
  inline constexpr int success       = 0;
  inline constexpr int invalid_input = 1;
  inline constexpr int inconclusive  = 2;

  // Runs the command line tool; args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace gis::cli
