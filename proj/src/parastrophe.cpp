#include "qg/parastrophe.hpp"

#include <algorithm>
#include <string>

#include "qg/detail/parallel.hpp"

namespace qg {

  int index(ParastropheKind kind) noexcept {
    return static_cast<int>(kind) + 1;
  }

  std::string_view to_string(ParastropheKind kind) noexcept {
    constexpr std::array<std::string_view, 5> names
        = {"p1", "p2", "p3", "p4", "p5"};
    return names[static_cast<std::size_t>(kind)];
  }

  std::optional<ParastropheKind> parastrophe_from_index(int i) {
    if (i < 1 || i > 5) {
      return std::nullopt;
    }
    return all_parastrophes[static_cast<std::size_t>(i - 1)];
  }

  CayleyTable parastrophe_table(CayleyTable const& t, ParastropheKind kind) {
    if (!is_quasigroup(t)) {
      throw NotAQuasigroup("parastrophes are defined for quasigroups only");
    }
    std::size_t const               n = t.order();
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
    // Every cell (x, y, z = x.y) of t yields one cell of the parastrophe.
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const z = t(x, y);
        switch (kind) {
          case ParastropheKind::P1:  // x o z = y
            out[x][z] = y;
            break;
          case ParastropheKind::P2:  // z o y = x
            out[z][y] = x;
            break;
          case ParastropheKind::P3:  // y o z = x
            out[y][z] = x;
            break;
          case ParastropheKind::P4:  // z o x = y
            out[z][x] = y;
            break;
          case ParastropheKind::P5:  // y o x = z
            out[y][x] = z;
            break;
        }
      }
    }
    return CayleyTable::from_rows(out);
  }

  namespace {
    struct Inverses {
      Int a_inv;
      Int b_inv;
    };

    Inverses require_idempotent_quasigroup(Int n, Int a, Int b) {
      if (n < 1 || a < 0 || a >= n || b < 0 || b >= n) {
        throw RangeError("coefficients must lie in [0, n)");
      }
      auto const a_inv = inverse_mod(a, n);
      auto const b_inv = inverse_mod(b, n);
      if (!a_inv || !b_inv) {
        throw NotInvertible("a = " + std::to_string(a) + " and b = "
                            + std::to_string(b) + " must be units mod "
                            + std::to_string(n));
      }
      if (mod(a + b - 1, n) != 0) {
        throw CriterionViolated("parastrophe closed forms need a + b = 1");
      }
      return {*a_inv, *b_inv};
    }
  }  // namespace

  ParastropheCoeffs parastrophe_coeffs(Int n, Int a, Int b, ParastropheKind kind) {
    auto const [ai, bi] = require_idempotent_quasigroup(n, a, b);
    Int const k         = mod(1 - bi, n);
    switch (kind) {
      case ParastropheKind::P1:
        return {kind, mod(1 - bi, n), bi, a};
      case ParastropheKind::P2:
        return {kind, ai, mod(1 - ai, n), mod(1 - k, n)};
      case ParastropheKind::P3:
        return {kind, mod(1 - ai, n), ai, mod(1 - a, n)};
      case ParastropheKind::P4:
        return {kind, bi, mod(1 - bi, n), ai};
      case ParastropheKind::P5:
        return {kind, b, a, mod(1 - ai, n)};
    }
    return {kind, 0, 0, 0};
  }

  std::string_view to_string(EqualityCase c) noexcept {
    switch (c) {
      case EqualityCase::AllEqual:
        return "all_equal";
      case EqualityCase::Q3Q4Split:
        return "q3_q4_split";
      case EqualityCase::Q1Chain:
        return "q1_chain";
      case EqualityCase::Q2Chain:
        return "q2_chain";
      case EqualityCase::Q5Split:
        return "q5_split";
      case EqualityCase::AllDistinct:
        return "all_distinct";
    }
    return "?";
  }

  EqualityCase equality_case(Int n, Int a, Int b) {
    require_idempotent_quasigroup(n, a, b);
    if (n <= 3) {
      // n = 1, or n = 3 where (2, 2) is the only idempotent quasigroup.
      return EqualityCase::AllEqual;
    }
    if (mul_mod(a, b, n) == 1 && a != b) {
      return EqualityCase::Q3Q4Split;
    }
    if (a == 2 && b == n - 1) {
      return EqualityCase::Q1Chain;
    }
    if (a == n - 1 && b == 2) {
      return EqualityCase::Q2Chain;
    }
    if (a == b) {
      return EqualityCase::Q5Split;
    }
    return EqualityCase::AllDistinct;
  }

  EqualityPattern expected_pattern(EqualityCase c) noexcept {
    switch (c) {
      case EqualityCase::AllEqual:
        return {0, 0, 0, 0, 0, 0};
      case EqualityCase::Q3Q4Split:
        return {0, 1, 1, 0, 0, 1};
      case EqualityCase::Q1Chain:
        return {0, 0, 1, 1, 2, 2};
      case EqualityCase::Q2Chain:
        return {0, 1, 0, 2, 1, 2};
      case EqualityCase::Q5Split:
        return {0, 1, 2, 1, 2, 0};
      case EqualityCase::AllDistinct:
        return {0, 1, 2, 3, 4, 5};
    }
    return {};
  }

  EqualityPattern observed_pattern(CayleyTable const& t) {
    std::array<CayleyTable, 6> const tables
        = {t,
           parastrophe_table(t, ParastropheKind::P1),
           parastrophe_table(t, ParastropheKind::P2),
           parastrophe_table(t, ParastropheKind::P3),
           parastrophe_table(t, ParastropheKind::P4),
           parastrophe_table(t, ParastropheKind::P5)};
    EqualityPattern pattern{};
    int             next = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      pattern[i] = -1;
      for (std::size_t j = 0; j < i; ++j) {
        if (tables[j] == tables[i]) {
          pattern[i] = pattern[j];
          break;
        }
      }
      if (pattern[i] < 0) {
        pattern[i] = next++;
      }
    }
    return pattern;
  }

  namespace {
    void require_class(Int n, Int a, QClass cls) {
      if (!is_valid_quasigroup(n, a) || !satisfies_criterion(n, a, cls)) {
        throw CriterionViolated("(n, a) = (" + std::to_string(n) + ", "
                                + std::to_string(a) + ") is not a "
                                + std::string(to_string(cls))
                                + " quasigroup");
      }
    }
  }  // namespace

  std::array<Int, 6> table1_row(Int n, Int a, QClass cls) {
    require_class(n, a, cls);
    auto const m = [n](Int v) { return mod(v, n); };
    switch (cls) {
      case QClass::Quadratical:
        return {m(1 - 2 * a), a, m(2 * a), m(1 - a), m(2 - 2 * a), m(2 * a - 1)};
      case QClass::Hexagonal:
        return {m(1 - a), a, a, m(1 - a), m(1 - a), a};
      case QClass::GS:
        return {m(a + 1), a, m(-a), m(1 - a), m(a - 1), m(2 - a)};
      case QClass::ARO:
        return {m(-1 - 2 * a), a, m(2 + 2 * a), m(1 - a), m(2 * a), m(1 - 2 * a)};
      case QClass::LeftModular:
      case QClass::Stein:
        return {m(a - 1), a, m(2 - a), m(1 - a), m(3 - a), m(a - 2)};
      case QClass::RightModular:
        return {m(-1 - a), a, m(a + 2), m(1 - a), m(a + 1), m(-a)};
      case QClass::C3: {
        Int const k  = *k_for_class(n, a, cls);
        Int const ai = *inverse_mod(a, n);
        return {k, a, m(1 - k), m(1 - a), ai, m(1 - ai)};
      }
    }
    return {};
  }

  std::array<Int, 5> table2_row(Int k, Int a, Int n, QClass cls) {
    require_class(n, a, cls);
    if (k_for_class(n, a, cls) != mod(k, n)) {
      throw CriterionViolated("k = " + std::to_string(k)
                              + " is not the translatability of this instance");
    }
    auto const m = [n](Int v) { return mod(v, n); };
    switch (cls) {
      case QClass::Quadratical:
        return {m(1 - k - a), m(1 - k), m(k + a), m(k + 1), m(-k)};
      case QClass::Hexagonal:
        return {m(1 - k), m(1 - k), m(k), m(k), m(1 - k)};
      case QClass::GS:
        return {m(k - 1), m(1 - k), m(k - 2 * a), m(k - 2), m(3 - k)};
      case QClass::ARO:
        return {m(-1 - k - a), m(1 - k), m(k + a + 2), m(-1 - k), m(k + 2)};
      case QClass::LeftModular:
      case QClass::Stein:
        return {m(k + 1), m(1 - k), m(-k), m(2 - k), m(k - 1)};
      case QClass::RightModular:
        return {m(-1 - k), m(1 - k), m(k + 2), m(-k), m(k + 1)};
      case QClass::C3: {
        Int const ai = *inverse_mod(a, n);
        return {a, m(1 - k), m(1 - a), ai, m(1 - ai)};
      }
    }
    return {};
  }

  Table3Cell table3_expected(QClass cls, ParastropheKind kind) {
    using K                = ParastropheKind;
    constexpr auto always  = Table3Cell{CellClaim::Always, std::nullopt};
    constexpr auto never   = Table3Cell{CellClaim::Never, std::nullopt};
    auto const     at      = [](Int n, Int a) {
      return Table3Cell{CellClaim::Instance, Witness{n, a}};
    };
    switch (cls) {
      case QClass::Quadratical:
        switch (kind) {
          case K::P1:
          case K::P4:
            return at(5, 2);
          case K::P2:
          case K::P3:
            return at(5, 4);
          case K::P5:
            return always;
        }
        break;
      case QClass::GS:
        return kind == K::P5 ? always : never;
      case QClass::ARO:
        switch (kind) {
          case K::P1:
            return at(7, 2);
          case K::P3:
          case K::P4:
            return at(7, 5);
          case K::P2:
          case K::P5:
            return never;
        }
        break;
      case QClass::Stein:
        return kind == K::P2 ? always : never;
      case QClass::RightModular:
        return kind == K::P1 ? always : never;
      case QClass::C3:
        switch (kind) {
          case K::P1:
          case K::P3:
            return at(7, 2);
          case K::P2:
            return always;
          case K::P4:
          case K::P5:
            return at(7, 4);
        }
        break;
      default:
        break;
    }
    throw CriterionViolated(std::string(to_string(cls))
                            + " has no column in the same-type table");
  }

  std::vector<Witness> table3_check(QClass cls, ParastropheKind kind, Int max_n) {
    return sweep(max_n, [cls, kind](Int n, Int a) {
      if (!satisfies_criterion(n, a, cls)) {
        return false;
      }
      auto const p = parastrophe_coeffs(n, a, mod(1 - a, n), kind);
      return satisfies_criterion(n, p.a, cls);
    });
  }

  bool Table3Verdict::consistent() const {
    switch (expected.claim) {
      case CellClaim::Always:
        return witnesses.size() == instances;
      case CellClaim::Never:
        return witnesses.empty();
      case CellClaim::Instance:
        return witnesses.size() == 1 && witnesses.front() == expected.instance;
    }
    return false;
  }

  Table3Verdict verify_table3_cell(QClass cls, ParastropheKind kind, Int max_n) {
    Table3Verdict v{cls, kind, table3_expected(cls, kind), 0, {}};
    v.instances = sweep(max_n, [cls](Int n, Int a) {
                    return satisfies_criterion(n, a, cls);
                  }).size();
    v.witnesses = table3_check(cls, kind, max_n);
    return v;
  }

  namespace {
    struct RowOutcome {
      TableRowMismatch row;
      std::size_t      scanned;
      bool             ok;
    };

    Int single_translatability(CayleyTable const& t) {
      auto const r = translatability(t);
      return r.ks.size() == 1 ? r.ks.front() : -1;
    }
  }  // namespace

  TranslatabilitySweep verify_translatability_table(int table,
                                                    Int max_n,
                                                    Int scan_limit) {
    if (table != 1 && table != 2) {
      throw RangeError("translatability tables are numbered 1 and 2");
    }
    auto rows = detail::parallel_concat<RowOutcome>(3, max_n, [&](Int n) {
      std::vector<RowOutcome> out;
      if (n % 2 == 0) {
        return out;
      }
      for (Int a : valid_coefficients(n)) {
        Int const b = mod(1 - a, n);
        for (QClass cls : all_classes) {
          if (!satisfies_criterion(n, a, cls)) {
            continue;
          }
          RowOutcome o{{cls, {n, a}, {}, {}}, 0, true};
          if (table == 1) {
            o.row.formula = table1_row(n, a, cls);
          } else {
            Int const  k    = *k_for_class(n, a, cls);
            auto const rest = table2_row(k, a, n, cls);
            o.row.formula[0] = k;
            std::copy(rest.begin(), rest.end(), o.row.formula.begin() + 1);
          }
          if (n <= scan_limit) {
            CayleyTable const t = build(n, a, b);
            o.row.observed[0]   = single_translatability(t);
            for (auto kind : all_parastrophes) {
              o.row.observed[static_cast<std::size_t>(index(kind))]
                  = single_translatability(parastrophe_table(t, kind));
            }
            o.scanned = 6;
          } else {
            o.row.observed[0] = translatable_k(n, a, b).value_or(-1);
            for (auto kind : all_parastrophes) {
              o.row.observed[static_cast<std::size_t>(index(kind))]
                  = parastrophe_coeffs(n, a, b, kind).kstar;
            }
          }
          o.ok = o.row.formula == o.row.observed;
          out.push_back(o);
        }
      }
      return out;
    });

    TranslatabilitySweep s{table, max_n, rows.size(), 0, {}};
    for (auto const& o : rows) {
      s.tables_scanned += o.scanned;
      if (!o.ok) {
        s.mismatches.push_back(o.row);
      }
    }
    return s;
  }

  std::vector<Witness> hexagonal_closure_violations(Int max_n) {
    return sweep(max_n, [](Int n, Int a) {
      if (!satisfies_criterion(n, a, QClass::Hexagonal)) {
        return false;
      }
      for (auto kind : all_parastrophes) {
        auto const p = parastrophe_coeffs(n, a, mod(1 - a, n), kind);
        if (!satisfies_criterion(n, p.a, QClass::Hexagonal)) {
          return true;
        }
      }
      return false;
    });
  }

}  // namespace qg
