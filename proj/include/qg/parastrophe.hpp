#pragma once

// The five parastrophes (conjugates) of a quasigroup (Q, .):
//
//   P1: x o y = z  <=>  x.z = y        P4: x o y = z  <=>  y.z = x
//   P2: x o y = z  <=>  z.y = x        P5: x o y = z  <=>  y.x = z
//   P3: x o y = z  <=>  z.x = y
//
// For an idempotent linear quasigroup Q_a: x.y = ax + by (a + b = 1) each
// parastrophe is again idempotent, linear and translatable, with
// coefficients and translatability given in closed form below.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/linear.hpp"
#include "qg/qclass.hpp"

namespace qg {

  enum class ParastropheKind { P1, P2, P3, P4, P5 };

  inline constexpr std::array<ParastropheKind, 5> all_parastrophes
      = {ParastropheKind::P1,
         ParastropheKind::P2,
         ParastropheKind::P3,
         ParastropheKind::P4,
         ParastropheKind::P5};

  // 1-based index of the kind.
  int                            index(ParastropheKind kind) noexcept;
  std::string_view               to_string(ParastropheKind kind) noexcept;
  std::optional<ParastropheKind> parastrophe_from_index(int i);

  // Throws NotAQuasigroup unless t is a Latin square.
  CayleyTable parastrophe_table(CayleyTable const& t, ParastropheKind kind);

  struct ParastropheCoeffs {
    ParastropheKind kind;
    Int             a;
    Int             b;
    Int             kstar;
  };

  // With a' = a^(-1), b' = b^(-1) and k = 1 - b':
  //   P1 (1 - b', b')  k* = a        P4 (b', 1 - b')  k* = a'
  //   P2 (a', 1 - a')  k* = 1 - k    P5 (b, a)        k* = 1 - a'
  //   P3 (1 - a', a')  k* = 1 - a
  // Throws NotInvertible if a or b is not a unit mod n, and
  // CriterionViolated if a + b != 1.
  ParastropheCoeffs parastrophe_coeffs(Int n, Int a, Int b, ParastropheKind kind);

  ////////////////////////////////////////////////////////////////////////
  // Equalities among Q_a and its parastrophes
  ////////////////////////////////////////////////////////////////////////

  enum class EqualityCase {
    AllEqual,     // Q_a = Q1 = Q2 = Q3 = Q4 = Q5
    Q3Q4Split,    // Q_a = Q3 = Q4 != Q1 = Q2 = Q5
    Q1Chain,      // Q_a = Q1 != Q2 = Q3 != Q4 = Q5
    Q2Chain,      // Q_a = Q2 != Q1 = Q4 != Q3 = Q5
    Q5Split,      // Q_a = Q5 != Q1 = Q3 != Q2 = Q4
    AllDistinct,  // all six distinct
  };

  std::string_view to_string(EqualityCase c) noexcept;

  // Predicted from the coefficients alone. Same preconditions as
  // parastrophe_coeffs.
  EqualityCase equality_case(Int n, Int a, Int b);

  // Block labels of the partition of [Q_a, Q1, ..., Q5] into equal tables,
  // numbered by first occurrence (so AllDistinct is {0, 1, 2, 3, 4, 5}).
  using EqualityPattern = std::array<int, 6>;

  EqualityPattern expected_pattern(EqualityCase c) noexcept;
  // Observed on the actual tables.
  EqualityPattern observed_pattern(CayleyTable const& t);

  ////////////////////////////////////////////////////////////////////////
  // Translatability tables
  ////////////////////////////////////////////////////////////////////////

  // Translatability of [Q_a, Q1, ..., Q5] as polynomials in a, per class.
  // LeftModular uses the Stein column. C3 has no column of its own and gets
  // the general values [k, a, 1 - k, 1 - a, a', 1 - a'].
  // Throws CriterionViolated unless cls holds at (n, a).
  std::array<Int, 6> table1_row(Int n, Int a, QClass cls);

  // Translatability of [Q1, ..., Q5] expressed through k = k_for_class.
  // Throws CriterionViolated unless cls holds and k matches.
  std::array<Int, 5> table2_row(Int k, Int a, Int n, QClass cls);

  struct TableRowMismatch {
    QClass             cls;
    Witness            at;
    std::array<Int, 6> formula;
    std::array<Int, 6> observed;
  };

  struct TranslatabilitySweep {
    int                           table;
    Int                           max_n;
    std::size_t                   rows_checked;
    std::size_t                   tables_scanned;
    std::vector<TableRowMismatch> mismatches;
  };

  // Evaluates table1_row (table = 1) or [k, table2_row] (table = 2) for
  // every class and every (n, a) of that class with n <= max_n, against the
  // closed-form k* of Q_a and its parastrophes. For n <= scan_limit the
  // observed values instead come from scanning the actual tables, and a
  // table with no or several translatability values counts as -1.
  // Throws RangeError unless table is 1 or 2.
  TranslatabilitySweep verify_translatability_table(int table,
                                                    Int max_n,
                                                    Int scan_limit = 0);

  ////////////////////////////////////////////////////////////////////////
  // Same-type parastrophes
  ////////////////////////////////////////////////////////////////////////

  enum class CellClaim { Always, Never, Instance };

  struct Table3Cell {
    CellClaim              claim;
    std::optional<Witness> instance;
  };

  // The classes with a column in the same-type table.
  inline constexpr std::array<QClass, 6> table3_classes
      = {QClass::Quadratical, QClass::GS,           QClass::ARO,
         QClass::Stein,       QClass::RightModular, QClass::C3};

  // Published claim: when does parastrophe `kind` of a Q_a of type cls
  // again have type cls. Throws CriterionViolated for a class without a
  // column.
  Table3Cell table3_expected(QClass cls, ParastropheKind kind);

  // Every (n, a), n <= max_n, where Q_a has type cls and so does its
  // parastrophe `kind` (classified from the closed-form coefficients).
  std::vector<Witness> table3_check(QClass cls, ParastropheKind kind, Int max_n);

  struct Table3Verdict {
    QClass               cls;
    ParastropheKind      kind;
    Table3Cell           expected;
    std::size_t          instances;
    std::vector<Witness> witnesses;

    bool consistent() const;
  };

  Table3Verdict verify_table3_cell(QClass cls, ParastropheKind kind, Int max_n);

  // Every parastrophe of every hexagonal Q_a with n <= max_n is hexagonal.
  // Returns the offending instances (expected empty).
  std::vector<Witness> hexagonal_closure_violations(Int max_n);

}  // namespace qg
