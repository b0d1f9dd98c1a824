#pragma once

#include <vector>

#include "simtap/types.hpp"

namespace simtap {

// The single database pass: per-slot support fraction of every registry item,
// indexed by item id. Items that never occur (registry preloads) get all-zero
// sequences. Records exactly one pass on `counter` when given.
std::vector<SupportSequence> scan_singleton_supports(const TemporalDatabase& db,
                                                     ScanCounter* counter = nullptr);

// Per-slot complement 1 - s_i: the probability of the pattern being absent.
SupportSequence negative_sequence(const SupportSequence& s);

}  // namespace simtap
