#ifndef NMSYM_ERRORS_HH
#define NMSYM_ERRORS_HH

#include <stdexcept>

namespace nmsym {

// Violated operation precondition (bad index, bad mode, malformed input).
// The CLI maps these to exit code 1.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Broken internal invariant (e.g. a closed form disagreeing with direct
// evaluation). The CLI maps these to exit code 2.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nmsym

#endif
