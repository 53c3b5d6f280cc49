#pragma once

// Serialisation of Cayley tables.
//
//   JSON: {"n": <int>, "rows": [[<int>, ...], ...]}   (0-based entries)
//   CSV:  one table row per line, entries separated by commas.
//
// Both formats round-trip bit-exactly through from_rows.

#include <string>
#include <string_view>

#include "qg/cayley_table.hpp"

namespace qg {

  std::string table_to_json(CayleyTable const& t);
  // Throws ShapeError on malformed JSON or when "n" disagrees with "rows".
  CayleyTable table_from_json(std::string_view text);

  std::string table_to_csv(CayleyTable const& t);
  CayleyTable table_from_csv(std::string_view text);

  // Human-readable grid; one_based adds 1 to every label for display.
  std::string format_table(CayleyTable const& t, bool one_based = false);

}  // namespace qg
