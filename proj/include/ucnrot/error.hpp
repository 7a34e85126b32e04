#pragma once

#include <stdexcept>

namespace ucnrot {

/// An iterative method ran out of budget or lost its bracket. Domain errors on
/// inputs are std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ucnrot
