#pragma once

// Brute-force enumeration of idempotent k-translatable quasigroups and
// isomorphism testing, independent of the closed forms in linear.hpp.

#include <cstddef>
#include <optional>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/linear.hpp"

namespace qg {

  inline constexpr std::size_t default_search_bound = 9;
  inline constexpr std::size_t hard_search_bound    = 11;

  struct EnumerationResult {
    Int                                      n;
    Int                                      k;
    std::vector<CayleyTable>                 tables;
    // recover_linear of each table, index-aligned with tables.
    std::vector<std::optional<Coefficients>> linear_matches;
  };

  // Tries every first row that is a permutation with 0 in position 0,
  // extends it k-translatably and keeps the idempotent Latin squares.
  // Throws OrderTooLarge when n exceeds max_order (itself capped at 11),
  // RangeError unless 1 <= k < n.
  EnumerationResult enumerate(Int         n,
                              Int         k,
                              std::size_t max_order = default_search_bound);

  // A bijection phi with phi(x.y) = phi(x) o phi(y), found by backtracking
  // over partial assignments. Throws OrderTooLarge beyond max_order.
  std::optional<Permutation> are_isomorphic(CayleyTable const& lhs,
                                            CayleyTable const& rhs,
                                            std::size_t max_order
                                            = default_search_bound);

  struct OracleRow {
    Int                         n;
    Int                         k;
    std::size_t                 survivors;
    std::optional<Coefficients> closed_form;
    bool                        closed_form_is_quasigroup;
    bool                        pairwise_isomorphic;
    bool                        matches;
  };

  struct OracleReport {
    Int                    max_n;
    std::vector<OracleRow> rows;
  };

  // For every 1 <= n <= max_n and 1 <= k < n compares enumerate(n, k) with
  // { build(solve_from_k(n, k)) if it is a quasigroup }. Throws
  // DiscrepancyFound on the first mismatch.
  OracleReport oracle_vs_closed_form(Int         max_n,
                                     std::size_t max_order = default_search_bound);

}  // namespace qg
