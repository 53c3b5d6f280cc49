#pragma once

// The fixed catalogue of groupoid laws, checked exhaustively on a table.

#include <array>
#include <optional>
#include <string_view>

#include "qg/cayley_table.hpp"
#include "qg/qclass.hpp"

namespace qg {

  enum class IdentityId {
    Idempotent,         // x = xx
    PropertyA,          // xy.x = zx.yz
    Elastic,            // x.yx = xy.x
    StrongElastic,      // x.yx = xy.x = yx.y
    Bookend,            // yx.xy = x
    LeftDistributive,   // x.yz = xy.xz
    RightDistributive,  // xy.z = xz.yz
    Medial,             // xy.zw = xz.yw
    Alterable,          // xy = zw  =>  yz = wx
    InnerBalance,       // x(y.yx) = (xy.x)y
    OuterBalance,       // (xy.y)x = y(x.yx)
    Hexagonal,          // x.yx = y
    GS1,                // x(xy.z).z = y
    GS2,                // x.(x.yz)z = y
    Stein,              // x.xy = yx
    LeftModular,        // x.yz = z.yx
    RightModular,       // xy.z = zy.x
    C3,                 // (xy.y)y = x
    ARO,                // xy.y = yx.x
    Cheban,             // x(xy.z) = (y.zx)x
    Schroeder,          // xy.yx = x
  };

  inline constexpr std::array<IdentityId, 21> all_identities
      = {IdentityId::Idempotent,   IdentityId::PropertyA,
         IdentityId::Elastic,      IdentityId::StrongElastic,
         IdentityId::Bookend,      IdentityId::LeftDistributive,
         IdentityId::RightDistributive, IdentityId::Medial,
         IdentityId::Alterable,    IdentityId::InnerBalance,
         IdentityId::OuterBalance, IdentityId::Hexagonal,
         IdentityId::GS1,          IdentityId::GS2,
         IdentityId::Stein,        IdentityId::LeftModular,
         IdentityId::RightModular, IdentityId::C3,
         IdentityId::ARO,          IdentityId::Cheban,
         IdentityId::Schroeder};

  // The eleven laws every quadratical quasigroup satisfies.
  inline constexpr std::array<IdentityId, 11> quadratical_laws
      = {IdentityId::Idempotent,       IdentityId::PropertyA,
         IdentityId::Elastic,          IdentityId::StrongElastic,
         IdentityId::Bookend,          IdentityId::LeftDistributive,
         IdentityId::RightDistributive, IdentityId::Medial,
         IdentityId::Alterable,        IdentityId::InnerBalance,
         IdentityId::OuterBalance};

  std::string_view          to_string(IdentityId id) noexcept;
  std::optional<IdentityId> identity_from_string(std::string_view name);

  // Quantifies the law over every tuple of elements (up to n^4 tuples).
  bool check_identity(CayleyTable const& t, IdentityId id);

  // Membership of the table in a quasigroup type, decided from the laws
  // defining it rather than from any closed form. All types require the
  // Latin property; Hexagonal, GS, ARO and C3 also require idempotency, and
  // Hexagonal and ARO mediality.
  bool has_class(CayleyTable const& t, QClass cls);

  // The four equivalent characterisations of a quadratical k-translatable
  // quasigroup:
  //   a  property A;
  //   b  i + k(z.i) = (j.z) + k(i.j)                   for all i, j, z;
  //   c  (z.i) + k(j.z) = k i + (i.j) for all i, j, z, and k^2 = -1;
  //   d  idempotent, medial and k^2 = -1             (all mod n).
  struct QuadraticalCriteria {
    bool property_a;
    bool index_congruence;
    bool multiplied_congruence;
    bool idempotent_medial;

    bool all_agree() const noexcept {
      return property_a == index_congruence
             && property_a == multiplied_congruence
             && property_a == idempotent_medial;
    }
  };

  // Throws NotTranslatable unless t is a k-translatable quasigroup.
  QuadraticalCriteria quadratical_criteria(CayleyTable const& t, Int k);

}  // namespace qg
