#pragma once

#include <stdexcept>

namespace peps {

/// Input is not a bijection of [1,n].
struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A position or index set escapes the ambient [1,n].
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// An enumeration was asked to exceed its configured guard.
struct SizeGuardExceeded : std::length_error {
  using std::length_error::length_error;
};

/// A letter sequence is not a reduced word for the stated permutation.
struct InvalidWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The greedy lift stalled before reaching full length; indicates an internal bug.
struct LiftFailure : std::logic_error {
  using std::logic_error::logic_error;
};

/// A statistic evaluator threw while one of its values was needed.
struct EvaluatorUndefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace peps
