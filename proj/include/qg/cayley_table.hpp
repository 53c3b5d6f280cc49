#pragma once

// Explicit multiplication tables of finite groupoids on {0, ..., n-1}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qg/errors.hpp"
#include "qg/modular.hpp"

namespace qg {

  using Element     = std::uint32_t;
  using Permutation = std::vector<Element>;

  class CayleyTable {
   public:
    // Validates shape and range: throws ShapeError for an empty or
    // non-square input and RangeError for an entry outside [0, n).
    static CayleyTable from_rows(std::vector<std::vector<Int>> const& rows);

    // Table with entries[x][y] = op(x, y); each value must lie in [0, n).
    template <typename Op>
    static CayleyTable generate(std::size_t n, Op&& op) {
      if (n == 0) {
        throw ShapeError("a Cayley table must have order at least 1");
      }
      CayleyTable t(n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          Int v = static_cast<Int>(op(static_cast<Element>(x),
                                      static_cast<Element>(y)));
          if (v < 0 || v >= static_cast<Int>(n)) {
            throw RangeError("table entry out of range");
          }
          t._cells[x * n + y] = static_cast<Element>(v);
        }
      }
      return t;
    }

    std::size_t order() const noexcept {
      return _n;
    }

    Element operator()(Element x, Element y) const noexcept {
      return _cells[x * _n + y];
    }

    std::span<Element const> row(Element x) const noexcept {
      return {_cells.data() + x * _n, _n};
    }

    std::vector<std::vector<Int>> rows() const;

    bool operator==(CayleyTable const&) const = default;

   private:
    explicit CayleyTable(std::size_t n) : _n(n), _cells(n * n, 0) {}

    std::size_t          _n;
    std::vector<Element> _cells;
  };

  bool is_left_cancellative(CayleyTable const& t);
  bool is_right_cancellative(CayleyTable const& t);
  // Latin square: left and right cancellative.
  bool is_quasigroup(CayleyTable const& t);
  bool is_idempotent(CayleyTable const& t);
  bool is_commutative(CayleyTable const& t);

  // x * y = y . x
  CayleyTable dual(CayleyTable const& t);

  ////////////////////////////////////////////////////////////////////////
  // Translatability
  ////////////////////////////////////////////////////////////////////////

  // The values k in {1, ..., n-1}, ascending, for which
  // t(i, j) == t(i + 1, j + k) (indices mod n) for every cell. Only the
  // stored ordering of the elements is considered.
  struct TranslatabilityReport {
    std::vector<Int> ks;

    bool contains(Int k) const;
    bool empty() const noexcept {
      return ks.empty();
    }
  };

  bool                  is_k_translatable(CayleyTable const& t, Int k);
  TranslatabilityReport translatability(CayleyTable const& t);

  // The k-translatable table whose row 0 is first_row:
  // entries[i][j] = first_row[(j - k*i) mod n].
  CayleyTable from_translatable_row(std::span<Element const> first_row, Int k);

  ////////////////////////////////////////////////////////////////////////
  // Relabelling
  ////////////////////////////////////////////////////////////////////////

  bool        is_permutation(std::span<Element const> p, std::size_t n);
  Permutation inverse(std::span<Element const> p);
  // (p o q)(x) = p(q(x))
  Permutation compose(std::span<Element const> p, std::span<Element const> q);
  Permutation identity_permutation(std::size_t n);

  // The isomorphic copy of t under the relabelling phi:
  // result(phi x, phi y) = phi(t(x, y)).
  CayleyTable relabel(CayleyTable const& t, std::span<Element const> phi);

  // Relabel x -> x + 1 (mod n), i.e. read t in the ordering n-1, 0, ..., n-2.
  // Applying it n times is the identity and k-translatability is preserved.
  CayleyTable cyclic_reorder(CayleyTable const& t);

}  // namespace qg
