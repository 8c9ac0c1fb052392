#ifndef CRBR_ERRORS_HPP
#define CRBR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crbr {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed formula text. Carries the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// An assignment passed to evaluate() is missing a variable of the formula.
class MissingAtom : public Error {
 public:
  explicit MissingAtom(const std::string& name)
      : Error("assignment does not cover variable '" + name + "'"),
        name_(name) {}

  const std::string& atom_name() const { return name_; }

 private:
  std::string name_;
};

// A configured resource cap (variable count, base size) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// The revision input mu is itself unsatisfiable.
class InconsistentInput : public Error {
 public:
  using Error::Error;
};

// An operation that requires nonempty subbases received an empty one.
class EmptySubbase : public Error {
 public:
  using Error::Error;
};

// Dempster combination is undefined: total conflict (k = 1).
class TotalConflict : public Error {
 public:
  using Error::Error;
};

// A user-supplied subbase family is malformed (bad index, duplicate, ...).
class InvalidFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace crbr

#endif  // CRBR_ERRORS_HPP
