#pragma once

#include <stdexcept>
#include <string>

namespace hodgejac {

// Base of every error raised by the library. The CLI maps each subclass to
// a distinct process exit code.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent caller input (exit code 2).
class InputError : public Error {
   public:
    using Error::Error;
};

class ParseError : public InputError {
   public:
    using InputError::InputError;
};

class InhomogeneousError : public ParseError {
   public:
    InhomogeneousError(int first_degree, int second_degree)
        : ParseError("inhomogeneous polynomial: found terms of degree " + std::to_string(first_degree) +
                     " and " + std::to_string(second_degree)),
          first_degree_(first_degree),
          second_degree_(second_degree) {}

    int first_degree() const noexcept { return first_degree_; }
    int second_degree() const noexcept { return second_degree_; }

   private:
    int first_degree_;
    int second_degree_;
};

class DegreeMismatchError : public InputError {
   public:
    DegreeMismatchError(const std::string& what, int expected, int actual)
        : InputError(what + ": expected degree " + std::to_string(expected) + ", got " +
                     std::to_string(actual)),
          expected_(expected),
          actual_(actual) {}

    int expected() const noexcept { return expected_; }
    int actual() const noexcept { return actual_; }

   private:
    int expected_;
    int actual_;
};

// Shape or length disagreement between vectors and matrices.
class DimensionError : public InputError {
   public:
    using InputError::InputError;
};

// The hypersurface is singular; Hodge-theoretic operations refuse to run (exit code 3).
class NotSmoothError : public Error {
   public:
    using Error::Error;
};

// Modular computation disagrees with the exact one, or the prime cannot
// represent the input (exit code 4).
class BadPrimeError : public Error {
   public:
    using Error::Error;
};

// A structural identity that must hold did not (exit code 5).
class InvariantError : public Error {
   public:
    using Error::Error;
};

}  // namespace hodgejac
