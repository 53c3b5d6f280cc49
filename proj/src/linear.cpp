#include "qg/linear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qg/detail/parallel.hpp"
#include "qg/identities.hpp"

namespace qg {

  namespace {
    void require_range(Int n, Int a, Int b) {
      if (n < 1) {
        throw RangeError("order must be at least 1");
      }
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw RangeError("coefficients must lie in [0, " + std::to_string(n)
                         + ")");
      }
    }

    std::string describe(Int n, Int a) {
      return "(n, a) = (" + std::to_string(n) + ", " + std::to_string(a) + ")";
    }
  }  // namespace

  LinearGroupoid LinearGroupoid::idempotent(Int n, Int a) {
    require_range(n, a, 0);
    return {n, a, mod(1 - a, n)};
  }

  bool LinearGroupoid::is_idempotent() const noexcept {
    return mod(a + b - 1, n) == 0;
  }

  CayleyTable LinearGroupoid::table() const {
    return build(n, a, b);
  }

  CayleyTable build(Int n, Int a, Int b) {
    require_range(n, a, b);
    return CayleyTable::generate(static_cast<std::size_t>(n),
                                 [=](Element x, Element y) {
                                   return mod(a * x + b * y, n);
                                 });
  }

  std::optional<Coefficients> solve_from_k(Int n, Int k) {
    if (n < 1) {
      throw RangeError("order must be at least 1");
    }
    auto const inv = inverse_mod(k - 1, n);
    if (!inv) {
      return std::nullopt;
    }
    Int const b = mod(-*inv, n);
    return Coefficients{mod(1 - b, n), b};
  }

  std::optional<Int> translatable_k(Int n, Int a, Int b) {
    require_range(n, a, b);
    if (mod(a + b - 1, n) != 0) {
      throw CriterionViolated("translatable_k needs a + b = 1 (mod n)");
    }
    auto const b_inv = inverse_mod(b, n);
    if (!b_inv) {
      return std::nullopt;
    }
    Int const k = mod(-a * *b_inv, n);
    if (k == 0) {
      return std::nullopt;
    }
    return k;
  }

  bool is_valid_quasigroup(Int n, Int a) {
    return n >= 1 && n % 2 == 1 && a >= 0 && a < n && is_unit(a, n)
           && is_unit(1 - a, n);
  }

  std::vector<Int> valid_coefficients(Int n) {
    std::vector<Int> out;
    for (Int a = 0; a < n; ++a) {
      if (is_valid_quasigroup(n, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool satisfies_criterion(Int n, Int a, QClass cls) {
    Int const a2 = mul_mod(a, a, n);
    switch (cls) {
      case QClass::Quadratical:
        return mod(2 * a2 - 2 * a + 1, n) == 0;
      case QClass::Hexagonal:
        return mod(a2 - a + 1, n) == 0;
      case QClass::GS:
        return mod(a2 - a - 1, n) == 0;
      case QClass::RightModular:
        return mod(a2 + a - 1, n) == 0;
      case QClass::LeftModular:
      case QClass::Stein:
        return mod(a2 - 3 * a + 1, n) == 0;
      case QClass::ARO:
        return mod(2 * a2 - 1, n) == 0;
      case QClass::C3:
        return mod(mul_mod(a2, a, n) - 1, n) == 0;
    }
    return false;
  }

  std::vector<QClass> classify(Int n, Int a) {
    if (n < 1 || a < 0 || a >= n) {
      throw RangeError("classify needs n >= 1 and a in [0, n)");
    }
    if (n % 2 == 0) {
      throw NotAQuasigroup("even order " + std::to_string(n)
                           + ": idempotent translatable quasigroups have odd "
                             "order");
    }
    if (!is_valid_quasigroup(n, a)) {
      throw NotAQuasigroup(describe(n, a)
                           + " is not a quasigroup: a and 1 - a must be units");
    }
    std::vector<QClass> out;
    for (QClass cls : all_classes) {
      if (satisfies_criterion(n, a, cls)) {
        out.push_back(cls);
      }
    }
    return out;
  }

  std::optional<Int> k_for_class(Int n, Int a, QClass cls) {
    if (!satisfies_criterion(n, a, cls)) {
      throw CriterionViolated(describe(n, a) + " is not "
                              + std::string(to_string(cls)));
    }
    switch (cls) {
      case QClass::Quadratical:
        return mod(1 - 2 * a, n);
      case QClass::Hexagonal:
        return mod(1 - a, n);
      case QClass::GS:
        return mod(a + 1, n);
      case QClass::RightModular:
        return mod(-1 - a, n);
      case QClass::LeftModular:
      case QClass::Stein:
        return mod(a - 1, n);
      case QClass::ARO:
        return mod(-1 - 2 * a, n);
      case QClass::C3:
        return inverse_mod(1 - mul_mod(a, a, n), n);
    }
    return std::nullopt;
  }

  std::optional<Coefficients> recover_linear(CayleyTable const& t) {
    Int const n = static_cast<Int>(t.order());
    if (n == 1) {
      return Coefficients{0, 0};
    }
    Coefficients const c{t(1, 0), t(0, 1)};
    if (build(n, c.a, c.b) != t) {
      return std::nullopt;
    }
    return c;
  }

  std::vector<Int> quadratical_orders(Int limit) {
    std::vector<Int> out;
    for (Int n = 2; n <= limit; ++n) {
      Int  rest = n;
      bool ok   = true;
      for (Int p = 2; p * p <= rest && ok; ++p) {
        if (rest % p == 0) {
          ok = p % 4 == 1;
          while (rest % p == 0) {
            rest /= p;
          }
        }
      }
      if (ok && rest > 1) {
        ok = rest % 4 == 1;
      }
      if (ok) {
        out.push_back(n);
      }
    }
    return out;
  }

  ClassificationReport classification_report(Int n, Int a, Int b) {
    require_range(n, a, b);
    if (mod(a + b - 1, n) != 0) {
      throw CriterionViolated("b must equal 1 - a (mod n) for an idempotent "
                              "groupoid");
    }
    ClassificationReport report{};
    report.n           = n;
    report.a           = a;
    report.b           = b;
    report.k           = translatable_k(n, a, b);
    report.commutative = a == b;
    report.quasigroup  = is_unit(a, n) && is_unit(b, n);
    if (report.quasigroup && n % 2 == 1) {
      report.classes = classify(n, a);
    }
    return report;
  }

  std::vector<Witness> sweep(Int                                  max_n,
                             std::function<bool(Int, Int)> const& pred) {
    return detail::parallel_concat<Witness>(3, max_n, [&pred](Int n) {
      std::vector<Witness> found;
      if (n % 2 == 0) {
        return found;
      }
      for (Int a : valid_coefficients(n)) {
        if (pred(n, a)) {
          found.push_back({n, a});
        }
      }
      return found;
    });
  }

  namespace {
    using Pair = std::pair<QClass, QClass>;

    constexpr std::array<Pair, 17> claimed_empty
        = {{{QClass::ARO, QClass::RightModular},
            {QClass::Stein, QClass::C3},
            {QClass::Stein, QClass::RightModular},
            {QClass::RightModular, QClass::GS},
            {QClass::ARO, QClass::Stein},
            {QClass::GS, QClass::ARO},
            {QClass::Stein, QClass::GS},
            {QClass::GS, QClass::C3},
            {QClass::Hexagonal, QClass::Stein},
            {QClass::Hexagonal, QClass::C3},
            {QClass::Hexagonal, QClass::RightModular},
            {QClass::Hexagonal, QClass::GS},
            {QClass::Quadratical, QClass::Hexagonal},
            {QClass::Quadratical, QClass::ARO},
            {QClass::Quadratical, QClass::GS},
            {QClass::C3, QClass::RightModular},
            {QClass::Quadratical, QClass::Stein}}};

    struct UniqueClaim {
      Pair    pair;
      Witness witness;
    };

    constexpr std::array<UniqueClaim, 4> claimed_unique
        = {{{{QClass::C3, QClass::Quadratical}, {13, 3}},
            {{QClass::C3, QClass::ARO}, {7, 2}},
            {{QClass::RightModular, QClass::Quadratical}, {5, 2}},
            {{QClass::Hexagonal, QClass::ARO}, {7, 5}}}};

    bool same_pair(Pair p, QClass x, QClass y) {
      return (p.first == x && p.second == y) || (p.first == y && p.second == x);
    }
  }  // namespace

  PairClaim pair_claim(QClass first, QClass second) {
    for (auto const& p : claimed_empty) {
      if (same_pair(p, first, second)) {
        return PairClaim::Empty;
      }
    }
    for (auto const& u : claimed_unique) {
      if (same_pair(u.pair, first, second)) {
        return PairClaim::Unique;
      }
    }
    return PairClaim::Unstated;
  }

  std::optional<Witness> pair_claimed_witness(QClass first, QClass second) {
    for (auto const& u : claimed_unique) {
      if (same_pair(u.pair, first, second)) {
        return u.witness;
      }
    }
    return std::nullopt;
  }

  bool PairSurvey::consistent() const {
    switch (claim) {
      case PairClaim::Empty:
        return witnesses.empty();
      case PairClaim::Unique:
        return witnesses.size() == 1 && witnesses.front() == claimed_witness;
      case PairClaim::Unstated:
        return true;
    }
    return false;
  }

  std::vector<PairSurvey> class_pair_survey(Int max_n) {
    // One sweep collecting each instance's class set, then split per pair.
    struct Classified {
      Witness             at;
      std::vector<QClass> classes;
    };
    auto const all = detail::parallel_concat<Classified>(3, max_n, [](Int n) {
      std::vector<Classified> found;
      if (n % 2 == 1) {
        for (Int a : valid_coefficients(n)) {
          auto classes = classify(n, a);
          if (classes.size() >= 2) {
            found.push_back({{n, a}, std::move(classes)});
          }
        }
      }
      return found;
    });

    std::vector<PairSurvey> out;
    for (std::size_t i = 0; i < all_classes.size(); ++i) {
      for (std::size_t j = i + 1; j < all_classes.size(); ++j) {
        QClass const x = all_classes[i];
        QClass const y = all_classes[j];
        PairSurvey   survey{x, y, {}, pair_claim(x, y), pair_claimed_witness(x, y)};
        for (auto const& c : all) {
          auto const has = [&c](QClass q) {
            return std::find(c.classes.begin(), c.classes.end(), q)
                   != c.classes.end();
          };
          if (has(x) && has(y)) {
            survey.witnesses.push_back(c.at);
          }
        }
        out.push_back(std::move(survey));
      }
    }
    return out;
  }

  bool linear_is_cheban(Int n, Int a) {
    Int const a2 = mul_mod(a, a, n);
    Int const a3 = mul_mod(a2, a, n);
    return mod(2 * a3 - 3 * a2 - a + 1, n) == 0 && mod(a3 - 3 * a2 + a, n) == 0
           && mod(a3 - 2 * a + 1, n) == 0;
  }

  bool linear_is_schroeder(Int n, Int a) {
    return mod(2 * a * (1 - a), n) == 0;
  }

  NonexistenceReport cheban_schroeder_check(Int max_n) {
    struct Hit {
      Witness at;
      bool    cheban;
      bool    schroeder;
    };
    Int orders = 0, instances = 0;
    for (Int n = 3; n <= max_n; n += 2) {
      ++orders;
      instances += static_cast<Int>(valid_coefficients(n).size());
    }
    auto const hits = detail::parallel_concat<Hit>(3, max_n, [](Int n) {
      std::vector<Hit> found;
      if (n % 2 == 0) {
        return found;
      }
      for (Int a : valid_coefficients(n)) {
        CayleyTable const t = build(n, a, mod(1 - a, n));
        bool const cheban   = linear_is_cheban(n, a)
                            || check_identity(t, IdentityId::Cheban);
        bool const schroeder = linear_is_schroeder(n, a)
                               || check_identity(t, IdentityId::Schroeder);
        if (cheban || schroeder) {
          found.push_back({{n, a}, cheban, schroeder});
        }
      }
      return found;
    });

    NonexistenceReport report{max_n, orders, instances, 0, 0};
    for (auto const& h : hits) {
      report.cheban_witnesses += h.cheban ? 1 : 0;
      report.schroeder_witnesses += h.schroeder ? 1 : 0;
    }
    if (!hits.empty()) {
      auto const& h = hits.front();
      throw CounterexampleFound(
          describe(h.at.n, h.at.a) + " is an idempotent translatable "
          + (h.cheban ? "Cheban" : "Schroeder") + " quasigroup");
    }
    return report;
  }

}  // namespace qg
