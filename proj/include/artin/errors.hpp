#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RecursiveSubstitution : public Error { using Error::Error; };
class InvalidGraph : public Error { using Error::Error; };
class InvalidPresentation : public Error { using Error::Error; };
class UnorientedEdge : public Error { using Error::Error; };
class IncompleteAssignment : public Error { using Error::Error; };
class NotTriangular : public Error { using Error::Error; };
class VertexNotFound : public Error { using Error::Error; };
class LimitExceeded : public Error { using Error::Error; };
class UnassignedAngles : public Error { using Error::Error; };
class OddDegreeVertex : public Error { using Error::Error; };
class DualNotBipartite : public Error { using Error::Error; };
class InvalidRotation : public Error { using Error::Error; };
class InternalInconsistency : public Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace artin
