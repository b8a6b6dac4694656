#pragma once

#include <stdexcept>
#include <string>

namespace skeinkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed PD text, knot table lines, polynomial text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid diagram: edge multiplicity, orientation conflicts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Ring misuse: mixed variable sets, non-invertible elements, bad powers.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// Reidemeister move requested at a site where it does not apply.
class MoveError : public Error {
 public:
  using Error::Error;
};

// A coloring that does not belong to the diagram it is used with.
class ColoringError : public Error {
 public:
  using Error::Error;
};

}  // namespace skeinkit
