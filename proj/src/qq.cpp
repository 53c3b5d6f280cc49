#include "qg/qq.hpp"

#include <array>
#include <string>
#include <tuple>

#include "qg/identities.hpp"
#include "qg/linear.hpp"

namespace qg {

  bool validate_astructure(Int n, Int l, Int r) {
    return n >= 1 && n % 2 == 1 && l >= 0 && l < n && r >= 0 && r < n
           && is_unit(l, n) && is_unit(r, n) && mod(r + l - 1, n) == 0
           && mod(2 * l * r - 1, n) == 0;
  }

  std::vector<AStructure> astructures(Int n) {
    std::vector<AStructure> out;
    for (Int l = 0; l < n; ++l) {
      Int const r = mod(1 - l, n);
      if (validate_astructure(n, l, r)) {
        out.push_back({n, l, r});
      }
    }
    return out;
  }

  Permutation multiplier_map(Int n, Int m) {
    Permutation out(static_cast<std::size_t>(n));
    for (Int x = 0; x < n; ++x) {
      out[static_cast<std::size_t>(x)] = static_cast<Element>(mod(m * x, n));
    }
    return out;
  }

  CayleyTable psi(AStructure const& a) {
    if (!validate_astructure(a.n, a.l, a.r)) {
      throw InvalidAStructure("(n, l, r) = (" + std::to_string(a.n) + ", "
                              + std::to_string(a.l) + ", "
                              + std::to_string(a.r)
                              + ") does not satisfy the A axioms");
    }
    return build(a.n, a.r, a.l);
  }

  QQAxioms check_qq_axioms(CayleyTable const& t,
                           Permutation const& lam,
                           Permutation const& rho) {
    Element const n = static_cast<Element>(t.order());
    if (!is_permutation(lam, n) || !is_permutation(rho, n)) {
      throw ShapeError("lam and rho must be permutations of the carrier");
    }
    Permutation const lam_inv = inverse(lam);
    Permutation const rho_inv = inverse(rho);

    QQAxioms out{true, true, true, true, true, true};
    for (Element x = 0; x < n && out.exchange; ++x) {
      for (Element y = 0; y < n && out.exchange; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (t(t(x, y), lam[z]) != t(rho[x], t(y, z))) {
            out.exchange = false;
            break;
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (t(lam[x], rho[x]) != x) {
        out.diagonal = false;
        break;
      }
    }
    for (Element x = 0; x < n && out.symmetric; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (t(rho_inv[x], lam_inv[y]) != t(rho_inv[y], lam_inv[x])) {
          out.symmetric = false;
          break;
        }
      }
    }
    std::vector<std::uint8_t> reached(n);
    for (Element x = 0; x < n && out.solvable; ++x) {
      std::fill(reached.begin(), reached.end(), 0);
      for (Element w = 0; w < n; ++w) {
        reached[t(rho_inv[x], lam_inv[w])] = 1;
      }
      for (Element y = 0; y < n; ++y) {
        if (!reached[y]) {
          out.solvable = false;
          break;
        }
      }
    }
    for (Element x = 0; x < n && out.automorphisms; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (lam[t(x, y)] != t(lam[x], lam[y])
            || rho[t(x, y)] != t(rho[x], rho[y])) {
          out.automorphisms = false;
          break;
        }
      }
    }
    out.commute = compose(lam, rho) == compose(rho, lam);
    return out;
  }

  std::pair<Permutation, Permutation> translation_maps(CayleyTable const& t,
                                                       Element            s) {
    if (!is_quasigroup(t)) {
      throw NotAQuasigroup("translations are permutations only in a quasigroup");
    }
    if (s >= t.order()) {
      throw RangeError("element out of range");
    }
    Permutation left(t.order()), right(t.order());
    for (Element x = 0; x < t.order(); ++x) {
      left[x]  = t(s, x);
      right[x] = t(x, s);
    }
    return {left, right};
  }

  QQGroup phi(QQStructure const& q) {
    auto const ax = check_qq_axioms(q.table, q.lam, q.rho);
    std::array<std::tuple<QQAxiom, bool, char const*>, 4> const checks
        = {{{QQAxiom::Exchange, ax.exchange, "exchange"},
            {QQAxiom::Diagonal, ax.diagonal, "diagonal"},
            {QQAxiom::Symmetric, ax.symmetric, "symmetric"},
            {QQAxiom::Solvable, ax.solvable, "solvable"}}};
    for (auto const& [axiom, ok, name] : checks) {
      if (!ok) {
        throw QQAxiomViolation(axiom,
                               std::string(name)
                                   + " axiom fails for the given table and maps");
      }
    }

    Element const     n       = static_cast<Element>(q.table.order());
    Permutation const lam_inv = inverse(q.lam);
    Permutation const rho_inv = inverse(q.rho);
    CayleyTable const g = CayleyTable::generate(n, [&](Element x, Element y) {
      return q.table(rho_inv[x], lam_inv[y]);
    });

    auto fail = [](std::string const& what) {
      throw CounterexampleFound("QQ -> A: " + what);
    };
    if (!is_commutative(g)) {
      fail("(.) is not commutative");
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (g(g(x, y), z) != g(x, g(y, z))) {
            fail("(.) is not associative");
          }
        }
      }
    }
    std::optional<Element> identity;
    for (Element e = 0; e < n && !identity; ++e) {
      bool neutral = true;
      for (Element x = 0; x < n && neutral; ++x) {
        neutral = g(e, x) == x;
      }
      if (neutral) {
        identity = e;
      }
    }
    if (!identity || !is_quasigroup(g)) {
      fail("(.) has no identity or lacks inverses");
    }
    for (Element x = 0; x < n; ++x) {
      Element const lr = q.lam[q.rho[x]];
      if (g(q.rho[x], q.lam[x]) != x || g(lr, lr) != x) {
        fail("r x (.) l x = x or lr x (.) lr x = x fails");
      }
      for (Element y = 0; y < n; ++y) {
        if (q.lam[g(x, y)] != g(q.lam[x], q.lam[y])
            || q.rho[g(x, y)] != g(q.rho[x], q.rho[y])) {
          fail("lam or rho is not an automorphism of (.)");
        }
      }
    }
    return {g, q.lam, q.rho, *identity};
  }

  std::optional<AStructure> as_cyclic(QQGroup const& grp) {
    CayleyTable const& g = grp.group;
    Element const      n = static_cast<Element>(g.order());

    // Find a generator: an element whose powers visit all n elements.
    std::optional<Permutation> walk;  // walk[i] = g^i
    for (Element cand = 0; cand < n && !walk; ++cand) {
      Permutation powers{grp.identity};
      Element     cur = grp.identity;
      for (Element i = 1; i < n; ++i) {
        cur = g(cur, cand);
        if (cur == grp.identity) {
          break;
        }
        powers.push_back(cur);
      }
      if (powers.size() == n) {
        walk = std::move(powers);
      }
    }
    if (!walk) {
      return std::nullopt;
    }
    Permutation const relabelling = inverse(*walk);  // g^i -> i
    if (relabel(g, relabelling) != build(n, 1, 1)) {
      return std::nullopt;
    }
    Permutation const lam = compose(relabelling, compose(grp.lam, *walk));
    Permutation const rho = compose(relabelling, compose(grp.rho, *walk));
    Int const         l   = n > 1 ? lam[1] : 0;
    Int const         r   = n > 1 ? rho[1] : 0;
    if (lam != multiplier_map(n, l) || rho != multiplier_map(n, r)) {
      return std::nullopt;
    }
    return AStructure{n, l, r};
  }

  namespace {
    void require_valid(AStructure const& a) {
      if (!validate_astructure(a.n, a.l, a.r)) {
        throw InvalidAStructure("invalid A structure");
      }
    }
  }  // namespace

  bool check_equivalence_law(AStructure const& a, Int max_order) {
    require_valid(a);
    if (a.n > max_order) {
      throw OrderTooLarge("quadruple check capped at n = "
                          + std::to_string(max_order));
    }
    CayleyTable const op  = psi(a);
    Element const     n   = static_cast<Element>(a.n);
    auto const        add = [n](Element x, Element y) { return (x + y) % n; };
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          for (Element w = 0; w < n; ++w) {
            bool const lhs = op(x, y) == op(z, w);
            bool const rhs = add(x, op(w, y)) == add(z, op(y, w))
                             && add(y, op(x, z)) == add(w, op(z, x));
            if (lhs != rhs) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool check_medial_transfer(AStructure const& a) {
    require_valid(a);
    CayleyTable const op  = psi(a);
    Element const     n   = static_cast<Element>(a.n);
    auto const        add = [n](Element x, Element y) { return (x + y) % n; };
    QQGroup const     grp = phi(QQStructure{op,
                                        multiplier_map(a.n, a.l),
                                        multiplier_map(a.n, a.r)});
    CayleyTable const& dot = grp.group;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          for (Element w = 0; w < n; ++w) {
            if (add(op(x, y), op(z, w)) != op(add(x, z), add(y, w))) {
              return false;
            }
            if (dot(op(x, y), op(z, w)) != op(dot(x, z), dot(y, w))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool check_rotation_identity(AStructure const& a) {
    CayleyTable const op = psi(a);
    Element const     n  = static_cast<Element>(a.n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (op(op(x, y), z) != op(op(z, x), op(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool check_halving(AStructure const& a) {
    require_valid(a);
    for (Int x = 0; x < a.n; ++x) {
      Int const lr = mul_mod(a.l, mul_mod(a.r, x, a.n), a.n);
      if (mod(lr + lr, a.n) != x) {
        return false;
      }
    }
    return true;
  }

  CompanionReport check_companion(QQStructure const& q) {
    CayleyTable const& t = q.table;
    Element const      n = static_cast<Element>(t.order());
    CompanionReport    out{true, t(q.rho[0], q.lam[0]), true, true};
    for (Element x = 0; x < n; ++x) {
      out.constant = out.constant && t(q.rho[x], q.lam[x]) == out.companion;
      out.lam_is_left_translation
          = out.lam_is_left_translation && q.lam[x] == t(out.companion, x);
      out.rho_is_right_translation
          = out.rho_is_right_translation && q.rho[x] == t(x, out.companion);
    }
    return out;
  }

  bool z_n_induction_check(CayleyTable const& t, Int k) {
    if (!is_quasigroup(t) || !is_k_translatable(t, k)
        || !check_identity(t, IdentityId::PropertyA)) {
      throw NotQuadratical("not a " + std::to_string(k)
                           + "-translatable quadratical quasigroup");
    }
    Int const   n       = static_cast<Int>(t.order());
    CayleyTable current = t;
    for (Int s = 0; s < n; ++s) {
      if (auto c = recover_linear(current);
          c && mod(c->a + c->b - 1, n) == 0
          && satisfies_criterion(n, c->a, QClass::Quadratical)) {
        return true;
      }
      current = cyclic_reorder(current);
    }
    return false;
  }

}  // namespace qg
