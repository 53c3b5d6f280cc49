#pragma once

// Named instances with published properties, each re-derived from its
// Cayley table and the closed forms and compared with the published claims.

#include <string>
#include <utility>
#include <vector>

namespace qg {

  struct ExampleVerdict {
    std::string                               name;
    std::string                               claim;
    std::vector<std::pair<std::string, bool>> checks;

    bool pass() const;
  };

  std::vector<ExampleVerdict> report_named_examples();

}  // namespace qg
