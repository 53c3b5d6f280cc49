#pragma once

// Slow, obvious reimplementations used as references in the tests. Nothing
// here calls into the library except to read a table's cells.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "qg/cayley_table.hpp"

namespace oracle {

  using Int   = std::int64_t;
  using Table = std::vector<std::vector<Int>>;

  inline Int md(Int x, Int n) {
    Int r = x % n;
    return r < 0 ? r + n : r;
  }

  inline Table from(qg::CayleyTable const& t) {
    return t.rows();
  }

  inline Table linear(Int n, Int a, Int b) {
    Table t(n, std::vector<Int>(n));
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        t[x][y] = md(a * x + b * y, n);
      }
    }
    return t;
  }

  inline bool latin(Table const& t) {
    Int const n = static_cast<Int>(t.size());
    for (Int i = 0; i < n; ++i) {
      std::set<Int> row, col;
      for (Int j = 0; j < n; ++j) {
        row.insert(t[i][j]);
        col.insert(t[j][i]);
      }
      if (static_cast<Int>(row.size()) != n || static_cast<Int>(col.size()) != n) {
        return false;
      }
    }
    return true;
  }

  inline bool translatable(Table const& t, Int k) {
    Int const n = static_cast<Int>(t.size());
    for (Int i = 0; i < n; ++i) {
      for (Int j = 0; j < n; ++j) {
        if (t[i][j] != t[md(i + 1, n)][md(j + k, n)]) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::vector<Int> translatabilities(Table const& t) {
    std::vector<Int> out;
    for (Int k = 1; k < static_cast<Int>(t.size()); ++k) {
      if (translatable(t, k)) {
        out.push_back(k);
      }
    }
    return out;
  }

  // Parastrophe i (1..5) found by solving x.y = z by search, one cell at a
  // time.
  inline Table parastrophe(Table const& t, int i) {
    Int const n = static_cast<Int>(t.size());
    Table     out(n, std::vector<Int>(n, -1));
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        for (Int z = 0; z < n; ++z) {
          bool hit = false;
          switch (i) {
            case 1: hit = t[x][z] == y; break;
            case 2: hit = t[z][y] == x; break;
            case 3: hit = t[z][x] == y; break;
            case 4: hit = t[y][z] == x; break;
            case 5: hit = t[y][x] == z; break;
          }
          if (hit) {
            out[x][y] = z;
          }
        }
      }
    }
    return out;
  }

  inline bool law3(Table const& t,
                   std::function<bool(Int, Int, Int)> const& holds) {
    Int const n = static_cast<Int>(t.size());
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        for (Int z = 0; z < n; ++z) {
          if (!holds(x, y, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // Type membership from the defining laws, written out directly.
  inline bool quadratical(Table const& t) {
    return latin(t) && law3(t, [&](Int x, Int y, Int z) {
             return t[t[x][y]][x] == t[t[z][x]][t[y][z]];
           });
  }

  inline bool medial(Table const& t) {
    Int const n = static_cast<Int>(t.size());
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        for (Int z = 0; z < n; ++z) {
          for (Int w = 0; w < n; ++w) {
            if (t[t[x][y]][t[z][w]] != t[t[x][z]][t[y][w]]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  inline bool idempotent(Table const& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x][x] != static_cast<Int>(x)) {
        return false;
      }
    }
    return true;
  }

  inline bool commutative(Table const& t) {
    for (std::size_t x = 0; x < t.size(); ++x) {
      for (std::size_t y = 0; y < t.size(); ++y) {
        if (t[x][y] != t[y][x]) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool prime_factors_1_mod_4(Int n) {
    if (n < 2) {
      return false;
    }
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        if (p % 4 != 1) {
          return false;
        }
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    return n == 1 || n % 4 == 1;
  }

  // The multiplicative inverse by scanning.
  inline std::optional<Int> inv(Int x, Int n) {
    for (Int y = 0; y < n; ++y) {
      if (md(x * y, n) == md(1, n)) {
        return y;
      }
    }
    return std::nullopt;
  }

  inline std::vector<Int> random_permutation(Int n, std::mt19937& rng) {
    std::vector<Int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

}  // namespace oracle
