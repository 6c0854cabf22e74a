#pragma once

#include <stdexcept>
#include <string>

namespace maclane {

// Malformed user input: bad syntax, non-prime modulus, non-monic polynomial.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A mathematical precondition does not hold.
class MathError : public std::domain_error {
 public:
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

class KeyPolyError : public MathError {
 public:
  explicit KeyPolyError(const std::string& what) : MathError(what) {}
};

// Refinement requested on an approximation that already divides the input.
class AlreadyExact : public MathError {
 public:
  explicit AlreadyExact(const std::string& what) : MathError(what) {}
};

}  // namespace maclane
