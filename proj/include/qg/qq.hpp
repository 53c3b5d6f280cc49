#pragma once

// The correspondence between
//   A:  (Z_n, +) with automorphisms x -> l x, x -> r x such that
//       r x + l x = x  and  2 l r x = x,
//   QQ: a quadratical quasigroup with commuting automorphisms lam, rho
//       satisfying
//         exchange:  xy . lam z = rho x . yz
//         diagonal:  lam x . rho x = x
//         symmetric: rho^-1 x . lam^-1 y = rho^-1 y . lam^-1 x
//         solvable:  forall x, y exists w with rho^-1 x . lam^-1 w = y
// psi builds x (+) y = r x + l y; phi builds x (.) y = rho^-1 x . lam^-1 y.

#include <optional>
#include <utility>
#include <vector>

#include "qg/cayley_table.hpp"

namespace qg {

  struct AStructure {
    Int n;
    Int l;  // lam x = l x
    Int r;  // rho x = r x

    bool operator==(AStructure const&) const = default;
  };

  // n odd, l and r units, r + l = 1 and 2 l r = 1 (mod n).
  bool validate_astructure(Int n, Int l, Int r);
  // Every valid (n, l, r) for fixed n, ordered by l.
  std::vector<AStructure> astructures(Int n);

  // x -> m x mod n as a permutation of {0, ..., n-1}.
  Permutation multiplier_map(Int n, Int m);

  // x (+) y = r x + l y. Throws InvalidAStructure.
  CayleyTable psi(AStructure const& a);

  struct QQStructure {
    CayleyTable table;
    Permutation lam;
    Permutation rho;
  };

  struct QQAxioms {
    bool exchange;
    bool diagonal;
    bool symmetric;
    bool solvable;
    // lam and rho are automorphisms of the table and commute.
    bool automorphisms;
    bool commute;

    bool all() const noexcept {
      return exchange && diagonal && symmetric && solvable && automorphisms
             && commute;
    }
  };

  // Exhaustive check; throws ShapeError unless lam and rho are permutations
  // of the carrier.
  QQAxioms check_qq_axioms(CayleyTable const& table,
                           Permutation const& lam,
                           Permutation const& rho);

  // L_s(x) = s.x and R_s(x) = x.s. Throws NotAQuasigroup.
  std::pair<Permutation, Permutation> translation_maps(CayleyTable const& t,
                                                       Element            s);

  // The commutative group (Q, (.)) with its automorphism pair.
  struct QQGroup {
    CayleyTable group;
    Permutation lam;
    Permutation rho;
    Element     identity;
  };

  // Throws QQAxiomViolation naming the first axiom that fails, and
  // CounterexampleFound if the result is not a commutative group satisfying
  // r x (.) l x = x, 2 l r x = x with lam, rho automorphisms.
  QQGroup phi(QQStructure const& q);

  // Relabels the group so the identity is 0 and a generator g is 1
  // (g^i -> i), and reads off the multipliers of lam and rho. Absent if the
  // group is not cyclic or lam, rho are not multiplications afterwards.
  std::optional<AStructure> as_cyclic(QQGroup const& g);

  // x (+) y = z (+) w  <=>  x + (w (+) y) = z + (y (+) w)
  //                         and y + (x (+) z) = w + (z (+) x)
  // over all quadruples. Throws OrderTooLarge for n > max_order.
  bool check_equivalence_law(AStructure const& a, Int max_order = 31);

  // (x (+) y) + (z (+) w) = (x + z) (+) (y + w) on the group side and
  // (x.y) (.) (z.w) = (x (.) z).(y (.) w) on the quasigroup side.
  bool check_medial_transfer(AStructure const& a);

  // (x (+) y) (+) z = (z (+) x) (+) (y (+) z).
  bool check_rotation_identity(AStructure const& a);

  // lam rho x + lam rho x = x for every x.
  bool check_halving(AStructure const& a);

  struct CompanionReport {
    // rho x . lam x takes the same value c for every x ...
    bool    constant;
    Element companion;
    // ... and lam = L_c, rho = R_c.
    bool lam_is_left_translation;
    bool rho_is_right_translation;

    bool holds() const noexcept {
      return constant && lam_is_left_translation && rho_is_right_translation;
    }
  };

  CompanionReport check_companion(QQStructure const& q);

  // Throws NotQuadratical unless t is a k-translatable quadratical
  // quasigroup. True iff some cyclic relabelling x -> x + s of t equals
  // build(n, a, 1 - a) with 2a^2 - 2a + 1 = 0 (mod n).
  bool z_n_induction_check(CayleyTable const& t, Int k);

}  // namespace qg
