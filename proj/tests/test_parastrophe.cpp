#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "qg/errors.hpp"
#include "qg/parastrophe.hpp"

using qg::EqualityCase;
using qg::Int;
using qg::ParastropheKind;
using qg::QClass;
using qg::Witness;

namespace {
  std::array<Int, 6> observed_ks(Int n, Int a, Int b) {
    auto const         t = qg::build(n, a, b);
    std::array<Int, 6> out{};
    auto const         one = [](qg::CayleyTable const& x) {
      auto const ks = qg::translatability(x).ks;
      return ks.size() == 1 ? ks.front() : -1;
    };
    out[0] = one(t);
    for (auto kind : qg::all_parastrophes) {
      out[qg::index(kind)] = one(qg::parastrophe_table(t, kind));
    }
    return out;
  }
}  // namespace

TEST_SUITE("parastrophe") {
  TEST_CASE("index and names") {
    for (auto kind : qg::all_parastrophes) {
      CHECK(qg::parastrophe_from_index(qg::index(kind)) == kind);
    }
    CHECK(qg::to_string(ParastropheKind::P3) == "p3");
    CHECK_FALSE(qg::parastrophe_from_index(0).has_value());
    CHECK_FALSE(qg::parastrophe_from_index(6).has_value());
  }

  TEST_CASE("parastrophe tables match solving by search") {
    for (Int n = 1; n <= 11; ++n) {
      for (Int a = 0; a < n; ++a) {
        for (Int b = 0; b < n; ++b) {
          auto const t = qg::build(n, a, b);
          if (!qg::is_quasigroup(t)) {
            CHECK_THROWS_AS(qg::parastrophe_table(t, ParastropheKind::P1),
                            qg::NotAQuasigroup);
            continue;
          }
          for (auto kind : qg::all_parastrophes) {
            CHECK(oracle::from(qg::parastrophe_table(t, kind))
                  == oracle::parastrophe(oracle::from(t), qg::index(kind)));
          }
        }
      }
    }
  }

  TEST_CASE("P5 is the dual") {
    auto const t = qg::build(13, 3, 11);
    CHECK(qg::parastrophe_table(t, ParastropheKind::P5) == qg::dual(t));
  }

  TEST_CASE("closed-form coefficients reproduce the tables") {
    for (Int n = 3; n <= 41; n += 2) {
      for (Int a : qg::valid_coefficients(n)) {
        Int const  b = qg::mod(1 - a, n);
        auto const t = qg::build(n, a, b);
        for (auto kind : qg::all_parastrophes) {
          auto const c = qg::parastrophe_coeffs(n, a, b, kind);
          CHECK(c.kind == kind);
          CHECK(qg::parastrophe_table(t, kind) == qg::build(n, c.a, c.b));
          CHECK(qg::mod(c.a + c.b, n) == 1);
        }
      }
    }
  }

  TEST_CASE("named parastrophes") {
    auto const p1 = qg::parastrophe_coeffs(13, 3, 11, ParastropheKind::P1);
    CHECK(p1.a == 8);
    CHECK(p1.b == 6);
    CHECK(p1.kstar == 3);
    CHECK(qg::parastrophe_table(qg::build(13, 3, 11), ParastropheKind::P1)
          == qg::build(13, 8, 6));
    CHECK(observed_ks(13, 3, 11) == std::array<Int, 6>{8, 3, 6, 11, 9, 5});
    CHECK(observed_ks(7, 5, 3) == std::array<Int, 6>{3, 5, 5, 3, 3, 5});
    CHECK(observed_ks(5, 3, 3) == std::array<Int, 6>{4, 3, 2, 3, 2, 4});
  }

  TEST_CASE("closed-form k* matches translatability scans") {
    for (Int n = 3; n <= 31; n += 2) {
      for (Int a : qg::valid_coefficients(n)) {
        Int const  b   = qg::mod(1 - a, n);
        auto const obs = observed_ks(n, a, b);
        CHECK(obs[0] == *qg::translatable_k(n, a, b));
        for (auto kind : qg::all_parastrophes) {
          CHECK(qg::parastrophe_coeffs(n, a, b, kind).kstar == obs[qg::index(kind)]);
        }
      }
    }
  }

  TEST_CASE("coefficient errors") {
    CHECK_THROWS_AS(qg::parastrophe_coeffs(9, 3, 7, ParastropheKind::P1),
                    qg::NotInvertible);
    CHECK_THROWS_AS(qg::parastrophe_coeffs(13, 3, 3, ParastropheKind::P1),
                    qg::CriterionViolated);
    CHECK_THROWS_AS(qg::parastrophe_coeffs(13, 13, 1, ParastropheKind::P1),
                    qg::RangeError);
  }

  TEST_CASE("equality cases") {
    CHECK(qg::equality_case(3, 2, 2) == EqualityCase::AllEqual);
    CHECK(qg::equality_case(11, 3, 9) == EqualityCase::AllDistinct);
    CHECK(qg::equality_case(5, 3, 3) == EqualityCase::Q5Split);
    CHECK(qg::expected_pattern(EqualityCase::AllDistinct)
          == qg::EqualityPattern{0, 1, 2, 3, 4, 5});
    CHECK(qg::expected_pattern(EqualityCase::Q3Q4Split)
          == qg::EqualityPattern{0, 1, 1, 0, 0, 1});
    CHECK(qg::observed_pattern(qg::build(11, 3, 9))
          == qg::EqualityPattern{0, 1, 2, 3, 4, 5});
  }

  TEST_CASE("predicted equality case matches the tables, every case occurs") {
    std::array<int, 6> seen{};
    for (Int n = 3; n <= 51; n += 2) {
      for (Int a : qg::valid_coefficients(n)) {
        Int const  b = qg::mod(1 - a, n);
        auto const c = qg::equality_case(n, a, b);
        CAPTURE(n);
        CAPTURE(a);
        CHECK(qg::observed_pattern(qg::build(n, a, b)) == qg::expected_pattern(c));
        ++seen[static_cast<std::size_t>(c)];
      }
    }
    for (int count : seen) {
      CHECK(count > 0);
    }
  }

  TEST_CASE("table 1 and 2 rows") {
    CHECK(qg::table1_row(13, 3, QClass::Quadratical)
          == std::array<Int, 6>{8, 3, 6, 11, 9, 5});
    CHECK(qg::table1_row(13, 3, QClass::C3) == std::array<Int, 6>{8, 3, 6, 11, 9, 5});
    CHECK(qg::table2_row(8, 3, 13, QClass::Quadratical)
          == std::array<Int, 5>{3, 6, 11, 9, 5});
    CHECK_THROWS_AS(qg::table1_row(13, 3, QClass::Hexagonal), qg::CriterionViolated);
    CHECK_THROWS_AS(qg::table2_row(7, 3, 13, QClass::Quadratical),
                    qg::CriterionViolated);
  }

  TEST_CASE("translatability table sweeps") {
    for (int table : {1, 2}) {
      auto const scanned = qg::verify_translatability_table(table, 61, 61);
      CHECK(scanned.mismatches.empty());
      CHECK(scanned.rows_checked > 0);
      CHECK(scanned.tables_scanned == 6 * scanned.rows_checked);
      auto const closed = qg::verify_translatability_table(table, 200);
      CHECK(closed.mismatches.empty());
      CHECK(closed.tables_scanned == 0);
    }
    CHECK_THROWS_AS(qg::verify_translatability_table(3, 10), qg::RangeError);
  }

  TEST_CASE("same-type parastrophe table") {
    CHECK(qg::table3_check(QClass::Quadratical, ParastropheKind::P1, 200)
          == std::vector<Witness>{{5, 2}});
    CHECK(qg::table3_check(QClass::Quadratical, ParastropheKind::P2, 200)
          == std::vector<Witness>{{5, 4}});
    CHECK(qg::table3_check(QClass::ARO, ParastropheKind::P1, 200)
          == std::vector<Witness>{{7, 2}});
    CHECK(qg::table3_check(QClass::ARO, ParastropheKind::P3, 200)
          == std::vector<Witness>{{7, 5}});
    CHECK(qg::table3_check(QClass::C3, ParastropheKind::P4, 200)
          == std::vector<Witness>{{7, 4}});
    CHECK(qg::table3_check(QClass::GS, ParastropheKind::P1, 200).empty());
    CHECK(qg::table3_check(QClass::Stein, ParastropheKind::P1, 200).empty());
    auto const rm = qg::verify_table3_cell(QClass::RightModular, ParastropheKind::P1, 200);
    CHECK(rm.witnesses.size() == rm.instances);
    CHECK(rm.instances > 0);
    for (auto cls : qg::table3_classes) {
      for (auto kind : qg::all_parastrophes) {
        CAPTURE(qg::to_string(cls));
        CAPTURE(qg::to_string(kind));
        CHECK(qg::verify_table3_cell(cls, kind, 200).consistent());
      }
    }
    CHECK_THROWS_AS(qg::table3_expected(QClass::Hexagonal, ParastropheKind::P1),
                    qg::CriterionViolated);
    CHECK(qg::hexagonal_closure_violations(200).empty());
  }
}
