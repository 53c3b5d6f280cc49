#pragma once

#include <stdexcept>
#include <string>

namespace qg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input.
  class ShapeError : public Error {
    using Error::Error;
  };
  class RangeError : public Error {
    using Error::Error;
  };

  // Violated operation preconditions.
  class NotTranslatable : public Error {
    using Error::Error;
  };
  class NotAQuasigroup : public Error {
    using Error::Error;
  };
  class NotInvertible : public Error {
    using Error::Error;
  };
  class CriterionViolated : public Error {
    using Error::Error;
  };
  class InvalidAStructure : public Error {
    using Error::Error;
  };
  class NotQuadratical : public Error {
    using Error::Error;
  };
  class OrderTooLarge : public Error {
    using Error::Error;
  };

  enum class QQAxiom { Exchange, Diagonal, Symmetric, Solvable };

  class QQAxiomViolation : public Error {
   public:
    QQAxiomViolation(QQAxiom axiom, std::string const& what)
        : Error(what), _axiom(axiom) {}

    QQAxiom axiom() const noexcept {
      return _axiom;
    }

   private:
    QQAxiom _axiom;
  };

  // A checked mathematical claim turned out false. These indicate either a
  // bug or a counterexample to a published result, never bad user input.
  class CounterexampleFound : public Error {
    using Error::Error;
  };
  class DiscrepancyFound : public Error {
    using Error::Error;
  };

}  // namespace qg
