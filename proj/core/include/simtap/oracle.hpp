#pragma once

#include <utility>
#include <vector>

#include "simtap/types.hpp"

namespace simtap {

// Exhaustive enumeration refuses instances with more items than this.
inline constexpr std::size_t kMaxExactItems = 20;

// Exact per-slot support of an itemset by direct counting; one full pass per
// call, recorded on `counter`. Deliberately independent of the single-scan
// machinery so it can arbitrate it.
SupportSequence true_support_sequence(const TemporalDatabase& db, const Itemset& pattern,
                                      ScanCounter* counter = nullptr);

// Exact per-slot support of "all of `base`, and not `absent`", counted
// directly. Used to check the pair decomposition identity
// S(base + j) = S(base) - S(base without j present).
SupportSequence true_support_with_negation(const TemporalDatabase& db, const Itemset& base,
                                           ItemId absent, ScanCounter* counter = nullptr);

// Every non-empty itemset over item_count items, ordered by size then
// lexicographically. Throws CapacityError above kMaxExactItems.
std::vector<Itemset> enumerate_itemsets(std::size_t item_count);

// Brute-force miner: enumerates every itemset, counts its true sequence
// (one pass each), and keeps those with euclidean distance <= theta + epsilon.
// Records carry exact sequences, actual distances, and degenerate bounds.
std::vector<PatternRecord> exact_mine(
    const TemporalDatabase& db, const ReferenceSequence& ref, double theta,
    ScanCounter* counter = nullptr, double epsilon = 1e-9,
    std::vector<std::pair<Itemset, SupportSequence>>* all_sequences = nullptr);

}  // namespace simtap
