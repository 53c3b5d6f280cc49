#include "qg/search.hpp"

#include <algorithm>
#include <future>
#include <string>

namespace qg {

  namespace {
    void check_order(std::size_t n, std::size_t max_order) {
      std::size_t const cap = std::min(max_order, hard_search_bound);
      if (n > cap) {
        throw OrderTooLarge("order " + std::to_string(n)
                            + " exceeds the search bound "
                            + std::to_string(cap));
      }
    }

    // All survivors whose first row starts 0, second.
    std::vector<CayleyTable> enumerate_branch(Int n, Int k, Element second) {
      std::vector<CayleyTable> found;
      std::vector<Element>     row(static_cast<std::size_t>(n));
      row[0] = 0;
      row[1] = second;
      std::vector<Element> rest;
      for (Element v = 1; v < n; ++v) {
        if (v != second) {
          rest.push_back(v);
        }
      }
      do {
        std::copy(rest.begin(), rest.end(), row.begin() + 2);
        // Diagonal of the extension: (i, i) -> row[(1 - k) i mod n].
        bool idempotent = true;
        for (Int i = 1; i < n && idempotent; ++i) {
          idempotent = row[static_cast<std::size_t>(mod((1 - k) * i, n))]
                       == static_cast<Element>(i);
        }
        if (!idempotent) {
          continue;
        }
        CayleyTable t = from_translatable_row(row, k);
        if (is_idempotent(t) && is_quasigroup(t)) {
          found.push_back(std::move(t));
        }
      } while (std::next_permutation(rest.begin(), rest.end()));
      return found;
    }
  }  // namespace

  EnumerationResult enumerate(Int n, Int k, std::size_t max_order) {
    if (n < 1 || k < 1 || k >= n) {
      throw RangeError("enumerate needs n >= 1 and 1 <= k < n");
    }
    check_order(static_cast<std::size_t>(n), max_order);

    EnumerationResult result{n, k, {}, {}};
    if (n == 1) {
      return result;
    }
    // Partition the search space by the second entry of the first row.
    std::vector<std::future<std::vector<CayleyTable>>> jobs;
    for (Element second = 1; second < n; ++second) {
      jobs.push_back(std::async(std::launch::async, enumerate_branch, n, k, second));
    }
    for (auto& job : jobs) {
      for (auto& t : job.get()) {
        result.tables.push_back(std::move(t));
      }
    }
    for (auto const& t : result.tables) {
      result.linear_matches.push_back(recover_linear(t));
    }
    return result;
  }

  namespace {
    class IsomorphismSearch {
     public:
      IsomorphismSearch(CayleyTable const& lhs, CayleyTable const& rhs)
          : _lhs(lhs),
            _rhs(rhs),
            _n(static_cast<Element>(lhs.order())),
            _map(_n, unassigned),
            _used(_n, 0) {}

      std::optional<Permutation> run() {
        if (extend(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      static constexpr Element unassigned = static_cast<Element>(-1);

      // Every product of assigned elements whose value is assigned must be
      // respected; products landing on unassigned elements must not collide
      // with an image already taken by another element.
      bool consistent(Element upto) const {
        for (Element x = 0; x <= upto; ++x) {
          for (Element y = 0; y <= upto; ++y) {
            Element const prod = _lhs(x, y);
            if (x != upto && y != upto && prod != upto) {
              continue;
            }
            Element const image = _rhs(_map[x], _map[y]);
            if (_map[prod] != unassigned) {
              if (_map[prod] != image) {
                return false;
              }
            } else if (_used[image]) {
              return false;
            }
          }
        }
        return true;
      }

      bool extend(Element x) {
        if (x == _n) {
          return true;
        }
        for (Element v = 0; v < _n; ++v) {
          if (_used[v]) {
            continue;
          }
          _map[x]  = v;
          _used[v] = 1;
          if (consistent(x) && extend(x + 1)) {
            return true;
          }
          _used[v] = 0;
          _map[x]  = unassigned;
        }
        return false;
      }

      CayleyTable const&        _lhs;
      CayleyTable const&        _rhs;
      Element                   _n;
      Permutation               _map;
      std::vector<std::uint8_t> _used;
    };
  }  // namespace

  std::optional<Permutation> are_isomorphic(CayleyTable const& lhs,
                                            CayleyTable const& rhs,
                                            std::size_t        max_order) {
    if (lhs.order() != rhs.order()) {
      return std::nullopt;
    }
    check_order(lhs.order(), max_order);
    auto phi = IsomorphismSearch(lhs, rhs).run();
    if (phi && relabel(lhs, *phi) != rhs) {
      throw DiscrepancyFound("isomorphism search returned a non-isomorphism");
    }
    return phi;
  }

  OracleReport oracle_vs_closed_form(Int max_n, std::size_t max_order) {
    OracleReport report{max_n, {}};
    for (Int n = 1; n <= max_n; ++n) {
      for (Int k = 1; k < n; ++k) {
        auto const found = enumerate(n, k, max_order);
        OracleRow  row{n, k, found.tables.size(), solve_from_k(n, k), false,
                      true, false};

        std::vector<CayleyTable> expected;
        if (row.closed_form) {
          CayleyTable t = build(n, row.closed_form->a, row.closed_form->b);
          row.closed_form_is_quasigroup = is_quasigroup(t);
          if (row.closed_form_is_quasigroup) {
            expected.push_back(std::move(t));
          }
        }
        for (std::size_t i = 0; i < found.tables.size(); ++i) {
          for (std::size_t j = i + 1; j < found.tables.size(); ++j) {
            if (!are_isomorphic(found.tables[i], found.tables[j], max_order)) {
              row.pairwise_isomorphic = false;
            }
          }
        }
        row.matches = found.tables == expected;
        report.rows.push_back(row);
        if (!row.matches) {
          throw DiscrepancyFound(
              "n = " + std::to_string(n) + ", k = " + std::to_string(k)
              + ": enumeration found " + std::to_string(found.tables.size())
              + " table(s), closed form predicts "
              + std::to_string(expected.size()));
        }
      }
    }
    return report;
  }

}  // namespace qg
