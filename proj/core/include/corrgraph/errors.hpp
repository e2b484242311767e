#pragma once

#include <stdexcept>
#include <string>

namespace corrgraph {

// Invalid argument values: out-of-range probabilities, size mismatches,
// empty subsets and the like.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input exceeds the hard cap of an exhaustive routine.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A monotone bisection could not bracket its target.
struct BracketingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace corrgraph
