#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Malformed or out-of-contract input: bad diagram, index out of range,
// schema violation. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A consistency check between two independent computations failed inside
// the library. The CLI maps this to exit status 3.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Evaluation point sits on a pole of a Gamma factor or a local L-factor.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A shell sum was requested outside its region of absolute convergence.
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace gk
