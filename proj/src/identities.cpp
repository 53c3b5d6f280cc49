#include "qg/identities.hpp"

#include <utility>

namespace qg {

  namespace {
    constexpr std::array<std::pair<QClass, std::string_view>, 8> class_names
        = {{{QClass::Quadratical, "quadratical"},
            {QClass::Hexagonal, "hexagonal"},
            {QClass::GS, "gs"},
            {QClass::RightModular, "right_modular"},
            {QClass::LeftModular, "left_modular"},
            {QClass::Stein, "stein"},
            {QClass::ARO, "aro"},
            {QClass::C3, "c3"}}};

    constexpr std::array<std::pair<IdentityId, std::string_view>, 21>
        identity_names = {{{IdentityId::Idempotent, "idempotent"},
                           {IdentityId::PropertyA, "property_a"},
                           {IdentityId::Elastic, "elastic"},
                           {IdentityId::StrongElastic, "strong_elastic"},
                           {IdentityId::Bookend, "bookend"},
                           {IdentityId::LeftDistributive, "left_distributive"},
                           {IdentityId::RightDistributive, "right_distributive"},
                           {IdentityId::Medial, "medial"},
                           {IdentityId::Alterable, "alterable"},
                           {IdentityId::InnerBalance, "inner_balance"},
                           {IdentityId::OuterBalance, "outer_balance"},
                           {IdentityId::Hexagonal, "hexagonal"},
                           {IdentityId::GS1, "gs1"},
                           {IdentityId::GS2, "gs2"},
                           {IdentityId::Stein, "stein"},
                           {IdentityId::LeftModular, "left_modular"},
                           {IdentityId::RightModular, "right_modular"},
                           {IdentityId::C3, "c3"},
                           {IdentityId::ARO, "aro"},
                           {IdentityId::Cheban, "cheban"},
                           {IdentityId::Schroeder, "schroeder"}}};

    template <typename Law>
    bool for_all_1(Element n, Law&& law) {
      for (Element x = 0; x < n; ++x) {
        if (!law(x)) {
          return false;
        }
      }
      return true;
    }

    template <typename Law>
    bool for_all_2(Element n, Law&& law) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (!law(x, y)) {
            return false;
          }
        }
      }
      return true;
    }

    template <typename Law>
    bool for_all_3(Element n, Law&& law) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            if (!law(x, y, z)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    template <typename Law>
    bool for_all_4(Element n, Law&& law) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            for (Element w = 0; w < n; ++w) {
              if (!law(x, y, z, w)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  std::string_view to_string(QClass cls) noexcept {
    for (auto const& [c, name] : class_names) {
      if (c == cls) {
        return name;
      }
    }
    return "?";
  }

  std::optional<QClass> class_from_string(std::string_view name) {
    for (auto const& [c, s] : class_names) {
      if (s == name) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::string_view to_string(IdentityId id) noexcept {
    for (auto const& [i, name] : identity_names) {
      if (i == id) {
        return name;
      }
    }
    return "?";
  }

  std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (auto const& [i, s] : identity_names) {
      if (s == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  bool check_identity(CayleyTable const& t, IdentityId id) {
    Element const n = static_cast<Element>(t.order());
    auto const    m = [&t](Element x, Element y) { return t(x, y); };

    switch (id) {
      case IdentityId::Idempotent:
        return for_all_1(n, [&](Element x) { return m(x, x) == x; });
      case IdentityId::PropertyA:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(m(x, y), x) == m(m(z, x), m(y, z));
        });
      case IdentityId::Elastic:
        return for_all_2(n, [&](Element x, Element y) {
          return m(x, m(y, x)) == m(m(x, y), x);
        });
      case IdentityId::StrongElastic:
        return for_all_2(n, [&](Element x, Element y) {
          Element const lhs = m(x, m(y, x));
          return lhs == m(m(x, y), x) && lhs == m(m(y, x), y);
        });
      case IdentityId::Bookend:
        return for_all_2(n, [&](Element x, Element y) {
          return m(m(y, x), m(x, y)) == x;
        });
      case IdentityId::LeftDistributive:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(x, m(y, z)) == m(m(x, y), m(x, z));
        });
      case IdentityId::RightDistributive:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(m(x, y), z) == m(m(x, z), m(y, z));
        });
      case IdentityId::Medial:
        return for_all_4(n, [&](Element x, Element y, Element z, Element w) {
          return m(m(x, y), m(z, w)) == m(m(x, z), m(y, w));
        });
      case IdentityId::Alterable:
        return for_all_4(n, [&](Element x, Element y, Element z, Element w) {
          return m(x, y) != m(z, w) || m(y, z) == m(w, x);
        });
      case IdentityId::InnerBalance:
        return for_all_2(n, [&](Element x, Element y) {
          return m(x, m(y, m(y, x))) == m(m(m(x, y), x), y);
        });
      case IdentityId::OuterBalance:
        return for_all_2(n, [&](Element x, Element y) {
          return m(m(m(x, y), y), x) == m(y, m(x, m(y, x)));
        });
      case IdentityId::Hexagonal:
        return for_all_2(n,
                         [&](Element x, Element y) { return m(x, m(y, x)) == y; });
      case IdentityId::GS1:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(m(x, m(m(x, y), z)), z) == y;
        });
      case IdentityId::GS2:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(x, m(m(x, m(y, z)), z)) == y;
        });
      case IdentityId::Stein:
        return for_all_2(
            n, [&](Element x, Element y) { return m(x, m(x, y)) == m(y, x); });
      case IdentityId::LeftModular:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(x, m(y, z)) == m(z, m(y, x));
        });
      case IdentityId::RightModular:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(m(x, y), z) == m(m(z, y), x);
        });
      case IdentityId::C3:
        return for_all_2(
            n, [&](Element x, Element y) { return m(m(m(x, y), y), y) == x; });
      case IdentityId::ARO:
        return for_all_2(n, [&](Element x, Element y) {
          return m(m(x, y), y) == m(m(y, x), x);
        });
      case IdentityId::Cheban:
        return for_all_3(n, [&](Element x, Element y, Element z) {
          return m(x, m(m(x, y), z)) == m(m(y, m(z, x)), x);
        });
      case IdentityId::Schroeder:
        return for_all_2(n, [&](Element x, Element y) {
          return m(m(x, y), m(y, x)) == x;
        });
    }
    return false;
  }

  bool has_class(CayleyTable const& t, QClass cls) {
    if (!is_quasigroup(t)) {
      return false;
    }
    switch (cls) {
      case QClass::Quadratical:
        return check_identity(t, IdentityId::PropertyA);
      case QClass::Hexagonal:
        return is_idempotent(t) && check_identity(t, IdentityId::Hexagonal)
               && check_identity(t, IdentityId::Medial);
      case QClass::GS:
        return is_idempotent(t) && check_identity(t, IdentityId::GS1);
      case QClass::RightModular:
        return check_identity(t, IdentityId::RightModular);
      case QClass::LeftModular:
        return check_identity(t, IdentityId::LeftModular);
      case QClass::Stein:
        return check_identity(t, IdentityId::Stein);
      case QClass::ARO:
        return is_idempotent(t) && check_identity(t, IdentityId::ARO)
               && check_identity(t, IdentityId::Medial);
      case QClass::C3:
        return is_idempotent(t) && check_identity(t, IdentityId::C3);
    }
    return false;
  }

  QuadraticalCriteria quadratical_criteria(CayleyTable const& t, Int k) {
    if (!is_quasigroup(t) || !is_k_translatable(t, k)) {
      throw NotTranslatable("table is not a " + std::to_string(k)
                            + "-translatable quasigroup");
    }
    Int const     n             = static_cast<Int>(t.order());
    Element const order         = static_cast<Element>(n);
    bool const    k_squared_neg = mod(k * k + 1, n) == 0;
    auto const    m = [&t](Element x, Element y) -> Int { return t(x, y); };

    QuadraticalCriteria out{};
    out.property_a       = check_identity(t, IdentityId::PropertyA);
    out.index_congruence = for_all_3(order, [&](Element i, Element j, Element z) {
      return mod(i + k * m(z, i) - m(j, z) - k * m(i, j), n) == 0;
    });
    out.multiplied_congruence
        = k_squared_neg
          && for_all_3(order, [&](Element i, Element j, Element z) {
               return mod(m(z, i) + k * m(j, z) - k * i - m(i, j), n) == 0;
             });
    out.idempotent_medial = k_squared_neg && is_idempotent(t)
                            && check_identity(t, IdentityId::Medial);
    return out;
  }

}  // namespace qg
