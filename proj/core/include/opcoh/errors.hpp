#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opcoh {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class MalformedTree : public Error {
 public:
  using Error::Error;
};

/// Two nests that are neither nested nor disjoint, or a set that is not a nest.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

class NotMaximal : public Error {
 public:
  using Error::Error;
};

class MalformedEdge : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NonRegular : public Error {
 public:
  using Error::Error;
};

class DanglingReference : public Error {
 public:
  using Error::Error;
};

class BrokenChain : public Error {
 public:
  using Error::Error;
};

class NotOriented : public Error {
 public:
  using Error::Error;
};

class NotParallel : public Error {
 public:
  using Error::Error;
};

/// A morphism-word move that cannot be applied; carries the move index.
class IllegalMove : public Error {
 public:
  IllegalMove(std::size_t index, const std::string& why)
      : Error("illegal move " + std::to_string(index) + ": " + why), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The functional takes equal values on both endpoints of an edge.
class NotGeneric : public Error {
 public:
  explicit NotGeneric(int edge)
      : Error(edge < 0 ? std::string("zero or mismatched vector")
                       : "vector is not generic on edge " + std::to_string(edge)),
        edge_(edge) {}
  int edge() const noexcept { return edge_; }

 private:
  int edge_;
};

/// A generated homotopy certificate failed independent verification.
class CertificateRejected : public Error {
 public:
  CertificateRejected(int index, const std::string& why)
      : Error("certificate rejected at move " + std::to_string(index) + ": " + why), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace opcoh
