#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "potmono/integer.hpp"

namespace potmono {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected, std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

// Duplicate patch key, non-injective patch values, or a patch shape that
// cannot describe a bijection at all.
class InvalidPatch : public Error {
 public:
  InvalidPatch(std::string message, std::vector<Integer> witness);
  const std::vector<Integer>& witness() const { return witness_; }

 private:
  std::vector<Integer> witness_;
};

class NotBijective : public Error {
 public:
  // Two distinct inputs with the same image.
  struct Collision {
    Integer first;
    Integer second;
    Integer image;
  };
  // A value outside the image.
  struct NoPreimage {
    Integer value;
  };
  using Witness = std::variant<Collision, NoPreimage>;

  explicit NotBijective(Witness witness);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

class UnsupportedPresentation : public Error {
 public:
  using Error::Error;
};

class PeriodicPointFound : public Error {
 public:
  explicit PeriodicPointFound(std::vector<Integer> cycle);
  const std::vector<Integer>& cycle() const { return cycle_; }

 private:
  std::vector<Integer> cycle_;
};

class CoverInvalid : public Error {
 public:
  CoverInvalid(int property, std::string message, std::vector<Integer> witness);
  // 1: orbit of a set not strongly discrete, 2: orbits of two sets meet,
  // 3: orbits of the family do not cover.
  int property() const { return property_; }
  const std::vector<Integer>& witness() const { return witness_; }

 private:
  int property_;
  std::vector<Integer> witness_;
};

class CoverInsufficient : public Error {
 public:
  explicit CoverInsufficient(Integer point);
  const Integer& point() const { return point_; }

 private:
  Integer point_;
};

// Internal tripwire; reaching it means an iteration bound was derived wrong.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

std::string format_points(const std::vector<Integer>& points);

}  // namespace potmono
