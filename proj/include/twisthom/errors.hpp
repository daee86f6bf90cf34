#pragma once

#include <stdexcept>
#include <string>

namespace twisthom {

// Base of every error thrown by the library. The CLI maps subclasses onto
// distinct diagnostics and exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (bad indices, invalid parameters).
class InputError : public Error {
  public:
    using Error::Error;
};

// A representation or action was paired with a complex over a different group.
class GroupMismatch : public Error {
  public:
    using Error::Error;
};

// Consecutive boundary maps do not compose to zero under some specialization.
class BoundaryError : public Error {
  public:
    using Error::Error;
};

// Something that must hold by construction did not; indicates a bug.
class InternalError : public Error {
  public:
    using Error::Error;
};

// Well-formed input for which the requested construction provably cannot
// succeed (e.g. a free summand in the Alexander module).
class ObstructionError : public Error {
  public:
    ObstructionError(const std::string& what, int degree)
        : Error(what), degree_(degree) {}
    int degree() const noexcept { return degree_; }

  private:
    int degree_;
};

} // namespace twisthom
