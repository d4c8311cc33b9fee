#pragma once

#include <stdexcept>

namespace laminar {

// Input file or JSON document cannot be interpreted.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called with arguments outside its contract.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The point set is not a boolean combination of the family's balls.
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decomposition whose wheels and holes do not layer into a forest.
class InvalidDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace laminar
