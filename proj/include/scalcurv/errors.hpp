#pragma once

#include <stdexcept>

namespace scalcurv {

// Failure of a topological precondition (as opposed to malformed input):
// a manifold outside the theory's scope, a cobordism without the psc flag,
// a degenerate family block.  The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace scalcurv
