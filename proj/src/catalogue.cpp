#include "qg/catalogue.hpp"

#include <algorithm>

#include "qg/identities.hpp"
#include "qg/linear.hpp"
#include "qg/parastrophe.hpp"

namespace qg {

  bool ExampleVerdict::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.second;
    });
  }

  namespace {
    bool contains(std::vector<QClass> const& v, QClass c) {
      return std::find(v.begin(), v.end(), c) != v.end();
    }

    class VerdictBuilder {
     public:
      VerdictBuilder(std::string name, std::string claim)
          : _v{std::move(name), std::move(claim), {}} {}

      VerdictBuilder& check(std::string what, bool ok) {
        _v.checks.emplace_back(std::move(what), ok);
        return *this;
      }

      ExampleVerdict done() {
        return std::move(_v);
      }

     private:
      ExampleVerdict _v;
    };

    std::string linear_name(Int n, Int a, Int b) {
      return "[" + std::to_string(a) + "x+" + std::to_string(b) + "y]_"
             + std::to_string(n);
    }

    // Common checks for an idempotent linear quasigroup with a stated pair of
    // classes and translatability.
    ExampleVerdict class_pair_instance(Int         n,
                                       Int         a,
                                       QClass      first,
                                       QClass      second,
                                       Int         k,
                                       std::string claim) {
      Int const         b = mod(1 - a, n);
      CayleyTable const t = build(n, a, b);
      auto const        r = classification_report(n, a, b);
      VerdictBuilder    v(linear_name(n, a, b), std::move(claim));
      v.check("quasigroup", r.quasigroup && is_quasigroup(t))
          .check("idempotent", is_idempotent(t))
          .check(std::string(to_string(first)),
                 contains(r.classes, first) && has_class(t, first))
          .check(std::string(to_string(second)),
                 contains(r.classes, second) && has_class(t, second))
          .check("k = " + std::to_string(k),
                 r.k == k && translatability(t).ks == std::vector<Int>{k})
          .check("not commutative", !r.commutative && !is_commutative(t));
      return v.done();
    }

    ExampleVerdict commutative_instance(Int n, Int a, QClass cls, Int k,
                                        std::string claim) {
      CayleyTable const t = build(n, a, a);
      auto const        r = classification_report(n, a, a);
      VerdictBuilder    v(linear_name(n, a, a), std::move(claim));
      v.check("commutative", r.commutative && is_commutative(t))
          .check("quasigroup", r.quasigroup && is_quasigroup(t))
          .check(std::string(to_string(cls)),
                 contains(r.classes, cls) && has_class(t, cls))
          .check("k = " + std::to_string(k),
                 r.k == k && translatability(t).ks == std::vector<Int>{k});
      return v.done();
    }
  }  // namespace

  std::vector<ExampleVerdict> report_named_examples() {
    std::vector<ExampleVerdict> out;

    out.push_back(class_pair_instance(13, 3, QClass::Quadratical, QClass::C3, 8,
                                      "the only quadratical C3 instance"));
    out.push_back(class_pair_instance(7, 2, QClass::C3, QClass::ARO, 2,
                                      "the only C3 ARO instance"));
    out.push_back(class_pair_instance(5, 2, QClass::Quadratical,
                                      QClass::RightModular, 2,
                                      "the only right modular quadratical "
                                      "instance"));
    out.push_back(class_pair_instance(7, 5, QClass::Hexagonal, QClass::ARO, 3,
                                      "the only hexagonal ARO instance"));

    {
      Int const         n = 31, a = 27, b = 5;
      CayleyTable const t  = build(n, a, b);
      CayleyTable const dt = dual(t);
      auto const        r  = classification_report(n, a, b);
      auto const        dr = classification_report(n, b, a);
      VerdictBuilder    v(linear_name(n, a, b),
                       "the only ARO instance whose dual is C3");
      v.check("quasigroup", r.quasigroup && is_quasigroup(t))
          .check("aro", contains(r.classes, QClass::ARO)
                            && has_class(t, QClass::ARO))
          .check("dual is c3", contains(dr.classes, QClass::C3)
                                   && has_class(dt, QClass::C3))
          .check("k = 7", r.k == 7 && translatability(t).ks == std::vector<Int>{7})
          .check("dual k* = 9 (7 * 9 = 1 mod 31)",
                 translatability(dt).ks == std::vector<Int>{9});
      out.push_back(v.done());
    }

    {
      auto v = commutative_instance(3, 2, QClass::Hexagonal, 2,
                                    "the only commutative hexagonal instance; "
                                    "all parastrophes coincide");
      v.checks.emplace_back("all six parastrophe tables coincide",
                            equality_case(3, 2, 2) == EqualityCase::AllEqual
                                && observed_pattern(build(3, 2, 2))
                                       == expected_pattern(EqualityCase::AllEqual));
      out.push_back(std::move(v));
    }
    out.push_back(commutative_instance(5, 3, QClass::GS, 4,
                                       "the only commutative GS instance, "
                                       "4-translatable"));
    out.push_back(commutative_instance(7, 4, QClass::C3, 6,
                                       "the only commutative C3 instance, "
                                       "6-translatable"));

    {
      CayleyTable const t = build(8, 4, 5);
      VerdictBuilder    v(linear_name(8, 4, 5),
                       "idempotent and 4-translatable but not a quasigroup");
      v.check("idempotent", is_idempotent(t))
          .check("k = 4", translatability(t).ks == std::vector<Int>{4}
                              && translatable_k(8, 4, 5) == 4)
          .check("left cancellative", is_left_cancellative(t))
          .check("not right cancellative", !is_right_cancellative(t))
          .check("not a quasigroup", !is_quasigroup(t));
      out.push_back(v.done());
    }

    {
      CayleyTable const t = build(11, 3, 9);
      VerdictBuilder    v(linear_name(11, 3, 9),
                       "witness that all six parastrophes can be distinct");
      v.check("predicted all distinct",
              equality_case(11, 3, 9) == EqualityCase::AllDistinct)
          .check("six distinct tables",
                 observed_pattern(t)
                     == expected_pattern(EqualityCase::AllDistinct));
      out.push_back(v.done());
    }

    {
      // 1-based row 1, 4, 3, 2, 8, 7, 6, 5 shifted to 0-based labels.
      std::vector<Element> const row{0, 3, 2, 1, 7, 6, 5, 4};
      CayleyTable const          t = from_translatable_row(row, 3);
      VerdictBuilder             v("order-8 first row 1,4,3,2,8,7,6,5",
                       "3-translatable quasigroup with only one translatable "
                                   "parastrophe, its dual");
      v.check("quasigroup", is_quasigroup(t))
          .check("not idempotent", !is_idempotent(t))
          .check("k = 3", translatability(t).ks == std::vector<Int>{3});
      std::vector<ParastropheKind> translatable;
      for (auto kind : all_parastrophes) {
        if (!translatability(parastrophe_table(t, kind)).empty()) {
          translatable.push_back(kind);
        }
      }
      v.check("only P5 translatable",
              translatable == std::vector<ParastropheKind>{ParastropheKind::P5})
          .check("P5 k* = 3 (3 * 3 = 1 mod 8)",
                 translatability(parastrophe_table(t, ParastropheKind::P5)).ks
                     == std::vector<Int>{3});
      out.push_back(v.done());
    }
    return out;
  }

}  // namespace qg
