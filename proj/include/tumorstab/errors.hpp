#pragma once

#include <stdexcept>
#include <string>

namespace tumorstab {

enum class error_kind {
  bracket_sign,            // root bracket endpoints do not straddle zero
  contraction_failure,     // fixed-point iterates stopped contracting
  characteristic_escape,   // a backward characteristic left the grid domain
  singular_mode,           // general-mode formula evaluated at a degenerate mode
  no_convergence,          // iteration cap reached
  consistency,             // internal cross-check disagreed
};

// Failure of an iterative or adaptive numerical procedure. Invalid user
// input (parameter ranges, out-of-domain evaluation points) is reported with
// std::invalid_argument / std::domain_error instead.
class solve_error : public std::runtime_error {
 public:
  solve_error(error_kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

// File-system failure while emitting results.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tumorstab
