#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Input that cannot be turned into the requested object (bad vertex lists,
// unparsable numbers, malformed JSON shape).
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a structural rule (member simplex missing
// from the ambient, polygon not strictly convex, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exact transversal engine cannot certify a result for this input.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rejection sampler exhausted its attempt budget.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace helly
