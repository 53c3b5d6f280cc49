#include "qg/cayley_table.hpp"

#include <algorithm>
#include <string>

namespace qg {

  CayleyTable CayleyTable::from_rows(std::vector<std::vector<Int>> const& rows) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw ShapeError("a Cayley table must have order at least 1");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw ShapeError("row " + std::to_string(i) + " has length "
                         + std::to_string(rows[i].size()) + ", expected "
                         + std::to_string(n));
      }
    }
    return generate(n, [&rows](Element x, Element y) {
      Int v = rows[x][y];
      if (v < 0 || v >= static_cast<Int>(rows.size())) {
        throw RangeError("entry (" + std::to_string(x) + ", "
                         + std::to_string(y) + ") = " + std::to_string(v)
                         + " is outside [0, " + std::to_string(rows.size())
                         + ")");
      }
      return v;
    });
  }

  std::vector<std::vector<Int>> CayleyTable::rows() const {
    std::vector<std::vector<Int>> out(_n, std::vector<Int>(_n));
    for (std::size_t x = 0; x < _n; ++x) {
      for (std::size_t y = 0; y < _n; ++y) {
        out[x][y] = _cells[x * _n + y];
      }
    }
    return out;
  }

  namespace {
    template <typename Get>
    bool lines_are_permutations(std::size_t n, Get&& get) {
      std::vector<std::uint8_t> seen(n);
      for (std::size_t line = 0; line < n; ++line) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t pos = 0; pos < n; ++pos) {
          Element v = get(line, pos);
          if (seen[v]) {
            return false;
          }
          seen[v] = 1;
        }
      }
      return true;
    }
  }  // namespace

  bool is_left_cancellative(CayleyTable const& t) {
    return lines_are_permutations(t.order(), [&t](auto x, auto y) {
      return t(static_cast<Element>(x), static_cast<Element>(y));
    });
  }

  bool is_right_cancellative(CayleyTable const& t) {
    return lines_are_permutations(t.order(), [&t](auto y, auto x) {
      return t(static_cast<Element>(x), static_cast<Element>(y));
    });
  }

  bool is_quasigroup(CayleyTable const& t) {
    return is_left_cancellative(t) && is_right_cancellative(t);
  }

  bool is_idempotent(CayleyTable const& t) {
    for (Element x = 0; x < t.order(); ++x) {
      if (t(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  bool is_commutative(CayleyTable const& t) {
    return t == dual(t);
  }

  CayleyTable dual(CayleyTable const& t) {
    return CayleyTable::generate(t.order(),
                                 [&t](Element x, Element y) { return t(y, x); });
  }

  bool TranslatabilityReport::contains(Int k) const {
    return std::binary_search(ks.begin(), ks.end(), k);
  }

  bool is_k_translatable(CayleyTable const& t, Int k) {
    Int const n = static_cast<Int>(t.order());
    if (k < 1 || k >= n) {
      return false;
    }
    for (Int i = 0; i < n; ++i) {
      Element const next = static_cast<Element>(mod(i + 1, n));
      for (Int j = 0; j < n; ++j) {
        if (t(static_cast<Element>(i), static_cast<Element>(j))
            != t(next, static_cast<Element>(mod(j + k, n)))) {
          return false;
        }
      }
    }
    return true;
  }

  TranslatabilityReport translatability(CayleyTable const& t) {
    TranslatabilityReport report;
    for (Int k = 1; k < static_cast<Int>(t.order()); ++k) {
      if (is_k_translatable(t, k)) {
        report.ks.push_back(k);
      }
    }
    return report;
  }

  CayleyTable from_translatable_row(std::span<Element const> first_row,
                                    Int                      k) {
    Int const n = static_cast<Int>(first_row.size());
    return CayleyTable::generate(first_row.size(), [&](Element i, Element j) {
      return first_row[static_cast<std::size_t>(mod(j - k * i, n))];
    });
  }

  bool is_permutation(std::span<Element const> p, std::size_t n) {
    if (p.size() != n) {
      return false;
    }
    std::vector<std::uint8_t> seen(n);
    for (Element v : p) {
      if (v >= n || seen[v]) {
        return false;
      }
      seen[v] = 1;
    }
    return true;
  }

  Permutation inverse(std::span<Element const> p) {
    Permutation out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) {
      out[p[x]] = static_cast<Element>(x);
    }
    return out;
  }

  Permutation compose(std::span<Element const> p, std::span<Element const> q) {
    Permutation out(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) {
      out[x] = p[q[x]];
    }
    return out;
  }

  Permutation identity_permutation(std::size_t n) {
    Permutation out(n);
    for (std::size_t x = 0; x < n; ++x) {
      out[x] = static_cast<Element>(x);
    }
    return out;
  }

  CayleyTable relabel(CayleyTable const& t, std::span<Element const> phi) {
    if (!is_permutation(phi, t.order())) {
      throw ShapeError("relabelling is not a permutation of the carrier");
    }
    Permutation const phi_inv = inverse(phi);
    return CayleyTable::generate(t.order(), [&](Element x, Element y) {
      return phi[t(phi_inv[x], phi_inv[y])];
    });
  }

  CayleyTable cyclic_reorder(CayleyTable const& t) {
    Int const   n = static_cast<Int>(t.order());
    Permutation shift(t.order());
    for (Int x = 0; x < n; ++x) {
      shift[static_cast<std::size_t>(x)] = static_cast<Element>(mod(x + 1, n));
    }
    return relabel(t, shift);
  }

}  // namespace qg
