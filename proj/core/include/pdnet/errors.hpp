#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdnet {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed scalar or document. `position` is a 0-based character offset
/// into the offending string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Leading principal minor Delta_[1,k] vanishes, so no LDU decomposition.
class NoLduError : public Error {
 public:
  NoLduError(const std::string& what, std::size_t k) : Error(what), k_(k) {}

  /// 1-based order of the first vanishing leading principal minor.
  [[nodiscard]] std::size_t k() const noexcept { return k_; }

 private:
  std::size_t k_;
};

/// The matrix is singular. k() still reports the first vanishing leading
/// principal minor (at worst n).
class SingularError : public NoLduError {
 public:
  using NoLduError::NoLduError;
};

class InvalidTransvectionError : public Error {
 public:
  using Error::Error;
};

class LevelRangeError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidDiagramError : public Error {
 public:
  InvalidDiagramError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class FrozenVertexError : public Error {
 public:
  FrozenVertexError(const std::string& what, std::size_t vertex)
      : Error(what), vertex_(vertex) {}

  [[nodiscard]] std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

/// Seed mutation at a vertex whose value is zero.
class ZeroValueError : public Error {
 public:
  ZeroValueError(const std::string& what, std::size_t vertex)
      : Error(what), vertex_(vertex) {}

  [[nodiscard]] std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

class SubalgebraSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdnet
