#pragma once

#include <stdexcept>
#include <string>

namespace orbisym {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the byte offset where parsing stopped.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateGenerator : public Error {
 public:
  explicit DuplicateGenerator(const std::string& name)
      : Error("duplicate generator or alias '" + name + "'") {}
};

class EmptyRelator : public Error {
 public:
  explicit EmptyRelator(const std::string& text)
      : Error("relator '" + text + "' reduces to the empty word") {}
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Coset enumeration or element closure ran past its configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A surface could not be classified from (alpha, b, orientability).
class ClassificationError : public Error {
 public:
  using Error::Error;
};

class ParityError : public ClassificationError {
 public:
  using ClassificationError::ClassificationError;
};

class NegativeGenus : public ClassificationError {
 public:
  using ClassificationError::ClassificationError;
};

/// A computed result disagrees with its closed form. Indicates a bug.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class UnknownCase : public Error {
 public:
  explicit UnknownCase(const std::string& id) : Error("unknown case '" + id + "'") {}
};

}  // namespace orbisym
