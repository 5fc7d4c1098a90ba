#pragma once

#include <stdexcept>
#include <string>

namespace polar {

// Input that violates a documented precondition: malformed file, empty or
// unit ideal, ideal that is not zero-dimensional, monomial outside the
// expected set, and so on.  The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A computation refused because it would exceed a compiled-in size bound.
// The message names the bound that was hit.  The CLI maps this to exit
// code 2.  Bounds are deliberate: every enumerative routine here has an
// explicit ceiling instead of an open-ended loop.
class ScaleError : public std::runtime_error {
 public:
  explicit ScaleError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent routes to the same quantity disagreed (for example the
// closed-form colon set versus the explicitly computed one, or homology
// ranks over two coefficient fields).  This is never expected on any
// input; it indicates a defect and is therefore a logic error.
class OracleError : public std::logic_error {
 public:
  explicit OracleError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polar
