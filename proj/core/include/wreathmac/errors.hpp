#ifndef WREATHMAC_ERRORS_HPP
#define WREATHMAC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wreathmac {

// Bad argument to a mathematical operation (division by zero, non-core, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A linear system whose solution space does not have the expected dimension.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, int dimension)
      : std::runtime_error(what), dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

// An exactness certificate failed: non-exact division, asymmetric output.
// These point at a bug, never at bad input.
class CertificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wreathmac

#endif
