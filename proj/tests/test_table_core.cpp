#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qg/cayley_table.hpp"
#include "qg/errors.hpp"
#include "qg/linear.hpp"
#include "qg/table_io.hpp"

using qg::CayleyTable;
using qg::Element;
using qg::Int;

namespace {
  CayleyTable random_table(Int n, std::mt19937& rng) {
    std::uniform_int_distribution<Int> cell(0, n - 1);
    std::vector<std::vector<Int>>      rows(n, std::vector<Int>(n));
    for (auto& r : rows) {
      for (auto& v : r) {
        v = cell(rng);
      }
    }
    return CayleyTable::from_rows(rows);
  }

  CayleyTable random_translatable(Int n, Int k, std::mt19937& rng) {
    auto const           p = oracle::random_permutation(n, rng);
    std::vector<Element> row(p.begin(), p.end());
    return qg::from_translatable_row(row, k);
  }

  std::vector<Element> order8_row() {
    return {0, 3, 2, 1, 7, 6, 5, 4};
  }
}  // namespace

TEST_SUITE("table-core") {
  TEST_CASE("from_rows validates shape and range") {
    CHECK_THROWS_AS(CayleyTable::from_rows({}), qg::ShapeError);
    CHECK_THROWS_AS(CayleyTable::from_rows({{0, 1}, {1}}), qg::ShapeError);
    CHECK_THROWS_AS(CayleyTable::from_rows({{0, 2}, {1, 0}}), qg::RangeError);
    CHECK_THROWS_AS(CayleyTable::from_rows({{0, -1}, {1, 0}}), qg::RangeError);
    auto const t = CayleyTable::from_rows({{0, 1}, {1, 0}});
    CHECK(t.order() == 2);
    CHECK(t(1, 0) == 1);
    CHECK(t.rows() == std::vector<std::vector<Int>>{{0, 1}, {1, 0}});
  }

  TEST_CASE("order one") {
    auto const t = CayleyTable::from_rows({{0}});
    CHECK(qg::is_quasigroup(t));
    CHECK(qg::is_idempotent(t));
    CHECK(qg::translatability(t).empty());
  }

  TEST_CASE("latin square iff both cancellation laws, against the oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
      Int const  n = 1 + trial % 5;
      auto const t = random_table(n, rng);
      bool const l = qg::is_left_cancellative(t);
      bool const r = qg::is_right_cancellative(t);
      CHECK(qg::is_quasigroup(t) == (l && r));
      CHECK(qg::is_quasigroup(t) == oracle::latin(oracle::from(t)));
    }
  }

  TEST_CASE("left but not right cancellative") {
    auto const t = qg::build(8, 4, 5);
    CHECK(qg::is_left_cancellative(t));
    CHECK_FALSE(qg::is_right_cancellative(t));
    CHECK_FALSE(qg::is_quasigroup(t));
    CHECK(qg::is_idempotent(t));
  }

  TEST_CASE("translatability matches the definition") {
    std::mt19937 rng(11);
    for (Int n = 2; n <= 9; ++n) {
      for (Int k = 1; k < n; ++k) {
        auto const t = random_translatable(n, k, rng);
        CHECK(qg::is_k_translatable(t, k));
        CHECK(qg::translatability(t).ks
              == oracle::translatabilities(oracle::from(t)));
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      auto const t = random_table(2 + trial % 6, rng);
      CHECK(qg::translatability(t).ks
            == oracle::translatabilities(oracle::from(t)));
    }
  }

  TEST_CASE("translatability of named tables") {
    CHECK(qg::translatability(qg::build(13, 3, 11)).ks == std::vector<Int>{8});
    CHECK(qg::translatability(qg::build(5, 2, 4)).ks == std::vector<Int>{2});
    CHECK(qg::translatability(qg::build(3, 2, 2)).ks == std::vector<Int>{2});
    CHECK(qg::translatability(qg::build(8, 4, 5)).ks == std::vector<Int>{4});
    CHECK(qg::translatability(qg::build(13, 3, 11)).contains(8));
    CHECK_FALSE(qg::translatability(qg::build(13, 3, 11)).contains(5));
    CHECK_FALSE(qg::is_k_translatable(qg::build(13, 3, 11), 0));
    CHECK_FALSE(qg::is_k_translatable(qg::build(13, 3, 11), 13));
  }

  TEST_CASE("order-8 translatable row") {
    auto const t = qg::from_translatable_row(order8_row(), 3);
    CHECK(qg::is_quasigroup(t));
    CHECK_FALSE(qg::is_idempotent(t));
    CHECK(qg::translatability(t).ks == std::vector<Int>{3});
    std::vector<Element> diagonal;
    for (Element x = 0; x < 8; ++x) {
      diagonal.push_back(t(x, x));
    }
    CHECK(diagonal == std::vector<Element>{0, 5, 7, 2, 0, 5, 7, 2});
  }

  TEST_CASE("dual of a k-translatable quasigroup is k^-1 translatable") {
    std::mt19937 rng(3);
    for (Int n = 3; n <= 9; ++n) {
      for (Int k = 1; k < n; ++k) {
        auto const t = random_translatable(n, k, rng);
        auto const d = qg::dual(t);
        CHECK(qg::dual(d) == t);
        auto const kinv = oracle::inv(k, n);
        if (kinv) {
          CHECK(qg::is_k_translatable(d, *kinv));
        } else {
          CHECK(qg::translatability(d).empty());
        }
      }
    }
  }

  TEST_CASE("cyclic reorder has period n and keeps translatability") {
    std::mt19937 rng(5);
    for (Int n = 2; n <= 9; ++n) {
      for (Int k = 1; k < n; ++k) {
        auto const t = random_translatable(n, k, rng);
        auto       s = t;
        for (Int i = 0; i < n; ++i) {
          s = qg::cyclic_reorder(s);
          CHECK(qg::translatability(s).ks == qg::translatability(t).ks);
          CHECK(qg::is_quasigroup(s) == qg::is_quasigroup(t));
        }
        CHECK(s == t);
      }
    }
  }

  TEST_CASE("relabel and permutation helpers") {
    std::mt19937 rng(17);
    auto const   t  = qg::build(7, 2, 6);
    auto const   pv = oracle::random_permutation(7, rng);
    qg::Permutation const p(pv.begin(), pv.end());
    CHECK(qg::is_permutation(p, 7));
    CHECK_FALSE(qg::is_permutation(qg::Permutation{0, 0, 1}, 3));
    CHECK_FALSE(qg::is_permutation(qg::Permutation{0, 1}, 3));
    CHECK(qg::compose(p, qg::inverse(p)) == qg::identity_permutation(7));
    auto const s = qg::relabel(t, p);
    for (Element x = 0; x < 7; ++x) {
      for (Element y = 0; y < 7; ++y) {
        CHECK(s(p[x], p[y]) == p[t(x, y)]);
      }
    }
    CHECK(qg::relabel(s, qg::inverse(p)) == t);
    CHECK(qg::relabel(t, qg::identity_permutation(7)) == t);
  }

  TEST_CASE("commutativity") {
    CHECK(qg::is_commutative(qg::build(5, 3, 3)));
    CHECK_FALSE(qg::is_commutative(qg::build(5, 2, 4)));
  }

  TEST_CASE("JSON and CSV round trip") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
      auto const t = random_table(1 + trial % 7, rng);
      CHECK(qg::table_from_json(qg::table_to_json(t)) == t);
      CHECK(qg::table_from_csv(qg::table_to_csv(t)) == t);
    }
    CHECK(qg::table_to_json(qg::build(3, 2, 2))
          == R"({"n":3,"rows":[[0,2,1],[2,1,0],[1,0,2]]})");
  }

  TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(qg::table_from_json("not json"), qg::ShapeError);
    CHECK_THROWS_AS(qg::table_from_json("[1,2]"), qg::ShapeError);
    CHECK_THROWS_AS(qg::table_from_json(R"({"n":3,"rows":[[0,1],[1,0]]})"),
                    qg::ShapeError);
    CHECK_THROWS_AS(qg::table_from_json(R"({"rows":[["a"]]})"), qg::ShapeError);
    CHECK_THROWS_AS(qg::table_from_csv("0,x\n1,0\n"), qg::ShapeError);
    CHECK_THROWS_AS(qg::table_from_csv("0,1\n1\n"), qg::ShapeError);
  }

  TEST_CASE("formatted table") {
    auto const t = qg::build(3, 2, 2);
    CHECK(qg::format_table(t) != qg::format_table(t, true));
    CHECK(qg::format_table(t, true).find('3') != std::string::npos);
  }
}
