#pragma once

#include <vector>

#include "simtap/distance.hpp"
#include "simtap/types.hpp"

namespace simtap {

enum class MiningMode {
    Paper,  // level >= 2 similarity decided by the LB value, no extra scans
    Exact,  // level >= 2 similarity decided by the true distance (extra passes)
};

const char* to_string(MiningMode mode);

struct MinerConfig {
    double theta = 0.0;
    Combiner combiner = Combiner::Sum;
    MiningMode mode = MiningMode::Paper;
    double epsilon = 1e-9;  // all threshold comparisons are "<= theta + epsilon"
};

struct CandidateGenStats {
    std::size_t generated = 0;  // (prefix, extension) combinations formed
    std::size_t pruned = 0;     // discarded because a (k-1)-subset is not retained
};

// Level-k candidates: each retained (k-1)-pattern extended by each retained
// singleton with a strictly larger id, then filtered so that every
// (k-1)-subset is present in retained_prev. Output is duplicate-free and in
// ascending lexicographic order when retained_prev is.
std::vector<Itemset> generate_candidates(const std::vector<Itemset>& retained_prev,
                                         const std::vector<ItemId>& retained_singletons,
                                         CandidateGenStats* stats = nullptr);

// Level-wise mining driver.
//
// Level 1 uses exact singleton sequences from the single scan: a singleton is
// Similar when its actual distance passes theta, and retained (without being
// similar) when its ULB passes. Level k >= 2 builds support envelopes from
// the level-1 sequences alone -- pair_bounds at k = 2, extend_bounds above --
// and decides similarity by the combined LB value (Paper mode) or by the true
// distance (Exact mode). Retention for the next level always uses the ULB.
// In Paper mode the database is read exactly once.
MiningResult mine(const TemporalDatabase& db, const ReferenceSequence& ref,
                  const MinerConfig& cfg);

}  // namespace simtap
