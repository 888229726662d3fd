#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace symred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: dimension mismatch, support violation, bad index.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A value left its admissible set (e.g. a matrix drifted off SE(2)).
class StateError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a partial map (e.g. log at the cut locus).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two agents entered the forbidden shell |p_i - p_j|^2 <= d_ij^2.
class CollisionError : public Error {
 public:
  CollisionError(std::size_t agent_i, std::size_t agent_j, double squared_distance,
                 double squared_shell)
      : Error("collision between agents " + std::to_string(agent_i + 1) + " and " +
              std::to_string(agent_j + 1) + ": squared distance " +
              std::to_string(squared_distance) + " <= " + std::to_string(squared_shell)),
        agent_i_(agent_i),
        agent_j_(agent_j),
        squared_distance_(squared_distance) {}

  std::size_t agent_i() const noexcept { return agent_i_; }
  std::size_t agent_j() const noexcept { return agent_j_; }
  double squared_distance() const noexcept { return squared_distance_; }

 private:
  std::size_t agent_i_;
  std::size_t agent_j_;
  double squared_distance_;
};

/// Non-finite value produced during integration.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid scenario configuration; carries the offending field path.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace symred
