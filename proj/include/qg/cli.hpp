#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qg::cli {

  // Exit codes.
  inline constexpr int ok        = 0;
  inline constexpr int usage     = 1;
  inline constexpr int violation = 2;

  // args excludes the program name. Results go to out, diagnostics to err.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace qg::cli
