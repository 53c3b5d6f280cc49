#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace qg {

  // Types of idempotent translatable quasigroup recognised by classify().
  // LeftModular and Stein share one criterion but are reported separately.
  enum class QClass {
    Quadratical,
    Hexagonal,
    GS,
    RightModular,
    LeftModular,
    Stein,
    ARO,
    C3,
  };

  inline constexpr std::array<QClass, 8> all_classes = {QClass::Quadratical,
                                                        QClass::Hexagonal,
                                                        QClass::GS,
                                                        QClass::RightModular,
                                                        QClass::LeftModular,
                                                        QClass::Stein,
                                                        QClass::ARO,
                                                        QClass::C3};

  // Lower-case identifiers used in JSON and on the command line:
  // quadratical, hexagonal, gs, right_modular, left_modular, stein, aro, c3.
  std::string_view           to_string(QClass cls) noexcept;
  std::optional<QClass>      class_from_string(std::string_view name);

}  // namespace qg
