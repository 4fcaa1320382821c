#pragma once

#include <stdexcept>
#include <string>

namespace cybe {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two scalars from different fields were combined.
class FieldMismatchError : public Error {
public:
  explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
  explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Structure-constant tableau fails antisymmetry or Jacobi.
class StructureError : public Error {
public:
  explicit StructureError(const std::string& what) : Error(what) {}
};

// Algebra is not in the dim L = 3, dim L' = 2 family.
class NotInFamilyError : public Error {
public:
  explicit NotInFamilyError(const std::string& what) : Error(what) {}
};

class WrongCharacteristicError : public Error {
public:
  explicit WrongCharacteristicError(const std::string& what) : Error(what) {}
};

// Tensor does not have the shape a predicate requires.
class ShapeError : public Error {
public:
  explicit ShapeError(const std::string& what) : Error(what) {}
};

// Enumeration refused: too many residual evaluations.
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A predicate was applied outside the case it covers.
class WrongCaseError : public Error {
public:
  explicit WrongCaseError(const std::string& what) : Error(what) {}
};

// Operation needs a field tower the library does not model.
class UnsupportedError : public Error {
public:
  explicit UnsupportedError(const std::string& what) : Error(what) {}
};

}  // namespace cybe
