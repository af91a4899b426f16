#pragma once

#include <stdexcept>
#include <string>

namespace polynorm {

/// Bad user input: dimension mismatches, malformed problems, unknown names.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Vertex or functional set is not closed under negation.
class SymmetryError : public std::runtime_error {
 public:
  explicit SymmetryError(const std::string& what) : std::runtime_error(what) {}
};

/// Degenerate geometry: not full-dimensional, unbounded, origin not interior.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// Polytope fails one of the absolute-norm axioms.
class NotAbsoluteError : public std::runtime_error {
 public:
  explicit NotAbsoluteError(const std::string& what) : std::runtime_error(what) {}
};

/// A functional handed to face extraction does not have dual norm one.
class FunctionalNotNorming : public std::runtime_error {
 public:
  explicit FunctionalNotNorming(const std::string& what) : std::runtime_error(what) {}
};

/// An exact computation contradicted a theorem it cross-checks. Always a bug.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Parse failure in the polytope text format; carries a line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace polynorm
