#pragma once

#include <stdexcept>
#include <string>

namespace lgraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPlanar : public Error {
 public:
  NotPlanar() : Error("graph is not planar") {}
};

class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what) : Error("malformed input: " + what) {}
};

class InconsistentRotation : public Error {
 public:
  explicit InconsistentRotation(const std::string& what)
      : Error("inconsistent rotation: " + what) {}
};

class NotTriangulation : public Error {
 public:
  explicit NotTriangulation(const std::string& what) : Error("not a triangulation: " + what) {}
};

class InvalidOrder : public Error {
 public:
  explicit InvalidOrder(const std::string& what) : Error("invalid order: " + what) {}
};

class DegenerateRep : public Error {
 public:
  explicit DegenerateRep(const std::string& what)
      : Error("degenerate representation: " + what) {}
};

class SingularSystem : public Error {
 public:
  SingularSystem() : Error("segment system is singular") {}
};

class NoEar : public Error {
 public:
  explicit NoEar(const std::string& what) : Error("no ear: " + what) {}
};

class NonTermination : public Error {
 public:
  explicit NonTermination(const std::string& what) : Error("no termination: " + what) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& what) : Error("input too large: " + what) {}
};

class NotSL : public Error {
 public:
  explicit NotSL(const std::string& what) : Error("not an SL-representation: " + what) {}
};

}  // namespace lgraph
