#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surfcert {

enum class GraphErrorKind {
  malformed_line,
  duplicate_edge,
  loop,
  disconnected,
  duplicate_id,
  unknown_vertex,
  count_mismatch,
};

const char* to_string(GraphErrorKind kind) noexcept;

/// Raised while reading or assembling a graph. `line()` is 0 when the error
/// is not tied to a specific input line.
class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  GraphErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  GraphErrorKind kind_;
  std::size_t line_;
};

/// Malformed text in an embedding or certificate bundle file.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class SchemeErrorKind {
  missing_rotation,
  rotation_mismatch,
  sign_on_non_edge,
  negative_in_orientable_mode,
  unknown_half_edge,
};

class SchemeError : public std::invalid_argument {
 public:
  SchemeError(SchemeErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  SchemeErrorKind kind() const noexcept { return kind_; }

 private:
  SchemeErrorKind kind_;
};

/// A combinatorial invariant that must hold did not (negative Euler genus,
/// odd number of doubled orbits, ...).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required)
      : std::runtime_error(what), required_(required) {}

  /// Number of systems (or sign classes) the search would have to visit.
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t required_;
};

enum class ProverErrorKind {
  genus_exceeds_target,
  orientable_scheme_in_nonorientable_mode,
  not_a_tree,
  no_edges,
  infeasible_face_indices,
  self_check_failed,
};

const char* to_string(ProverErrorKind kind) noexcept;

class ProverError : public std::runtime_error {
 public:
  ProverError(ProverErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ProverErrorKind kind() const noexcept { return kind_; }

 private:
  ProverErrorKind kind_;
};

/// The soundness harness was asked to attack an instance that is not false.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace surfcert
