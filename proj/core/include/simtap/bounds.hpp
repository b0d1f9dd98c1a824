#pragma once

#include "simtap/types.hpp"

namespace simtap {

// Per-slot upper bound on the support of a conjunction: min(a_i, b_i).
SupportSequence ubsts(const SupportSequence& a, const SupportSequence& b);

// Per-slot lower bound on the support of a conjunction: max(a_i + b_i - 1, 0).
SupportSequence lbsts(const SupportSequence& a, const SupportSequence& b);

// Envelope for the pattern "prefix + one more item" when both support
// sequences are exact. With c = negative_sequence(extension):
//   lower = prefix - ubsts(prefix, c)
//   upper = prefix - lbsts(prefix, c)
// The true sequence of the extended pattern always lies inside.
BoundedSupport pair_bounds(const SupportSequence& prefix, const SupportSequence& extension);

// Envelope extension when only an envelope of the prefix is known. Evaluates
// the four candidate sequences
//   lower - ubsts(lower, c), lower - lbsts(lower, c),
//   upper - ubsts(upper, c), upper - lbsts(upper, c)
// and takes the per-slot min/max across them.
BoundedSupport extend_bounds(const BoundedSupport& prefix, const SupportSequence& extension);

}  // namespace simtap
