#pragma once

#include <stdexcept>

namespace burnlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (wrong graph class, bad ids, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A schedule breaks the burning rules (source out of range, repeated, or
// already on fire when its round starts).
class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

// Center sets cannot be turned into a schedule of the requested length.
class Infeasible : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace burnlab
