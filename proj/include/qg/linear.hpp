#pragma once

// Groupoids on Z_n with multiplication x.y = (a x + b y) mod n.
//
// An idempotent k-translatable quasigroup on the naturally ordered set
// {0, ..., n-1} is always of this form with a + b = 1, a + b k = 0 and
// gcd(k, n) = 1; each quasigroup type reduces to a polynomial congruence in a.

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/qclass.hpp"

namespace qg {

  struct Coefficients {
    Int a;
    Int b;

    auto operator<=>(Coefficients const&) const = default;
  };

  // One idempotent linear quasigroup, named by its order and left coefficient.
  struct Witness {
    Int n;
    Int a;

    auto operator<=>(Witness const&) const = default;
  };

  struct LinearGroupoid {
    Int n;
    Int a;
    Int b;

    // b = 1 - a, which makes the groupoid idempotent.
    static LinearGroupoid idempotent(Int n, Int a);

    bool        is_idempotent() const noexcept;
    CayleyTable table() const;
  };

  // entries[i][j] = (a i + b j) mod n. Throws RangeError unless n >= 1 and
  // a, b lie in [0, n).
  CayleyTable build(Int n, Int a, Int b);

  // The idempotent k-translatable linear groupoid of order n: solves
  // a + b = 1, a + b k = 0. Present iff gcd(k - 1, n) = 1. The result need
  // not be a quasigroup (gcd(k, n) decides that).
  std::optional<Coefficients> solve_from_k(Int n, Int k);

  // k = -a b^(-1) for an idempotent (a + b = 1) linear groupoid, absent when
  // b is not a unit or k would be 0. Requires a + b = 1 (CriterionViolated).
  std::optional<Int> translatable_k(Int n, Int a, Int b);

  // gcd(a, n) = gcd(1 - a, n) = 1: (n, a, 1 - a) is a quasigroup. Forces n odd.
  bool is_valid_quasigroup(Int n, Int a);
  // All a in [0, n) with is_valid_quasigroup(n, a).
  std::vector<Int> valid_coefficients(Int n);

  // The polynomial criterion of cls evaluated at a (mod n).
  bool satisfies_criterion(Int n, Int a, QClass cls);

  // Every class whose criterion holds, in QClass order. Throws
  // NotAQuasigroup for even n or when the gcd premise fails.
  std::vector<QClass> classify(Int n, Int a);

  // The translatability value implied by cls. C3 uses (1 - a^2) k = 1 and is
  // absent if 1 - a^2 is not a unit. Throws CriterionViolated if cls does
  // not hold at (n, a).
  std::optional<Int> k_for_class(Int n, Int a, QClass cls);

  // Reads a = t(1, 0), b = t(0, 1) and returns them iff build(n, a, b)
  // reproduces t exactly.
  std::optional<Coefficients> recover_linear(CayleyTable const& t);

  // n <= limit, n > 1, every prime factor = 1 (mod 4): the orders of
  // k-translatable quadratical quasigroups.
  std::vector<Int> quadratical_orders(Int limit);

  struct ClassificationReport {
    Int                 n;
    Int                 a;
    Int                 b;
    std::optional<Int>  k;
    std::vector<QClass> classes;
    bool                commutative;
    bool                quasigroup;
  };

  // Report for an idempotent linear groupoid (a + b = 1, else
  // CriterionViolated). Classes are computed only for quasigroups; even
  // orders are allowed and simply carry no classes.
  ClassificationReport classification_report(Int n, Int a, Int b);

  ////////////////////////////////////////////////////////////////////////
  // Sweeps over idempotent linear quasigroups
  ////////////////////////////////////////////////////////////////////////

  // Every (n, a) with 3 <= n <= max_n, is_valid_quasigroup(n, a) and
  // pred(n, a), ordered by n then a. Partitioned over n across threads.
  std::vector<Witness> sweep(Int                                  max_n,
                             std::function<bool(Int, Int)> const& pred);

  enum class PairClaim { Unstated, Empty, Unique };

  struct PairSurvey {
    QClass                 first;
    QClass                 second;
    std::vector<Witness>   witnesses;
    PairClaim              claim;
    std::optional<Witness> claimed_witness;

    // Empty claim: no witnesses. Unique claim: exactly the claimed one.
    bool consistent() const;
  };

  // The published statement about which types can coexist.
  PairClaim              pair_claim(QClass first, QClass second);
  std::optional<Witness> pair_claimed_witness(QClass first, QClass second);

  // All 28 unordered pairs of distinct classes, in QClass order.
  std::vector<PairSurvey> class_pair_survey(Int max_n);

  // Cheban: x(xy.z) = (y.zx)x. For b = 1 - a this is the three congruences
  //   2a^3 - 3a^2 - a + 1 = 0,  a^3 - 3a^2 + a = 0,  a^3 - 2a + 1 = 0.
  bool linear_is_cheban(Int n, Int a);
  // Schroeder: xy.yx = x, i.e. 2a(1 - a) = 0 (mod n).
  bool linear_is_schroeder(Int n, Int a);

  struct NonexistenceReport {
    Int max_n;
    Int orders_scanned;
    Int instances_scanned;
    Int cheban_witnesses;
    Int schroeder_witnesses;
  };

  // Scans every odd n <= max_n and valid a, checking both laws by the
  // congruences above and on the built table. Throws CounterexampleFound on
  // any witness.
  NonexistenceReport cheban_schroeder_check(Int max_n);

}  // namespace qg
