#pragma once

#include <stdexcept>
#include <string>

namespace noe {

// Shape/size mismatches between operands.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside an operation's mathematical domain (e.g. non-PD matrix
// passed to a log-determinant).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical routine failed to converge or produced unusable output.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace noe
