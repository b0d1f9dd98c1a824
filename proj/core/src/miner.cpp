#include "simtap/miner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simtap/bounds.hpp"
#include "simtap/oracle.hpp"
#include "simtap/scan.hpp"

namespace simtap {

const char* to_string(MiningMode mode) {
    switch (mode) {
        case MiningMode::Paper: return "paper";
        case MiningMode::Exact: return "exact";
    }
    return "unknown";
}

std::vector<Itemset> generate_candidates(const std::vector<Itemset>& retained_prev,
                                         const std::vector<ItemId>& retained_singletons,
                                         CandidateGenStats* stats) {
    CandidateGenStats local;
    std::vector<Itemset> out;
    if (!retained_prev.empty()) {
        std::set<Itemset> prev_set(retained_prev.begin(), retained_prev.end());
        std::vector<ItemId> singles = retained_singletons;
        std::sort(singles.begin(), singles.end());
        singles.erase(std::unique(singles.begin(), singles.end()), singles.end());

        for (const Itemset& prefix : retained_prev) {
            for (ItemId id : singles) {
                if (id <= prefix.max_id()) continue;
                Itemset candidate = prefix.extended_with(id);
                ++local.generated;
                bool all_subsets_retained = true;
                for (const Itemset& sub : candidate.subsets_dropping_one()) {
                    if (!prev_set.contains(sub)) {
                        all_subsets_retained = false;
                        break;
                    }
                }
                if (all_subsets_retained) {
                    out.push_back(std::move(candidate));
                } else {
                    ++local.pruned;
                }
            }
        }
    }
    if (stats) *stats = local;
    return out;
}

MiningResult mine(const TemporalDatabase& db, const ReferenceSequence& ref,
                  const MinerConfig& cfg) {
    if (ref.size() != db.slot_count()) {
        throw ArityError("reference has " + std::to_string(ref.size()) +
                         " values, database has " + std::to_string(db.slot_count()) + " slots");
    }
    if (cfg.theta < 0.0 || cfg.epsilon < 0.0) {
        throw RangeError("theta and epsilon must be non-negative");
    }

    ScanCounter counter;
    const std::vector<SupportSequence> positives = scan_singleton_supports(db, &counter);
    const double limit = cfg.theta + cfg.epsilon;
    const std::size_t n_items = db.item_count();

    MiningResult result;

    // Level 1: exact sequences, similarity by actual distance, retention by ULB.
    std::vector<Itemset> retained_prev;
    std::map<Itemset, BoundedSupport> retained_bounds;
    std::vector<ItemId> retained_singletons;

    LevelStats level1{1, n_items, 0, 0, 0};
    for (ItemId id = 0; id < n_items; ++id) {
        const SupportSequence& seq = positives[id];
        PatternRecord rec;
        rec.itemset = Itemset::canonicalize({id});
        rec.bounds = BoundedSupport(seq, seq);
        rec.exact = seq;
        rec.actual_distance = euclidean(seq, ref);
        rec.ulb = ulb_distance(ref, seq);
        rec.llb = llb_distance(ref, seq);
        rec.lb = lb_distance(rec.ulb, rec.llb, cfg.combiner);

        if (*rec.actual_distance <= limit) {
            rec.status = PatternStatus::Similar;
        } else if (rec.ulb <= limit) {
            rec.status = PatternStatus::RetainedOnly;
        } else {
            rec.status = PatternStatus::Dissimilar;
        }

        if (rec.status != PatternStatus::Dissimilar) {
            ++level1.retained;
            retained_prev.push_back(rec.itemset);
            retained_bounds.emplace(rec.itemset, rec.bounds);
            retained_singletons.push_back(id);
        }
        if (rec.status == PatternStatus::Similar) {
            ++level1.similar;
            result.similar.push_back(rec);
        }
        result.records.push_back(std::move(rec));
    }
    result.per_level.push_back(level1);

    // Levels k >= 2: envelopes propagated from level-1 sequences only.
    for (std::size_t k = 2; k <= n_items && !retained_prev.empty(); ++k) {
        CandidateGenStats gen;
        const std::vector<Itemset> candidates =
            generate_candidates(retained_prev, retained_singletons, &gen);
        if (gen.generated == 0) break;

        LevelStats level{static_cast<int>(k), gen.generated, gen.pruned, 0, 0};
        std::vector<Itemset> retained_next;
        std::map<Itemset, BoundedSupport> next_bounds;

        for (const Itemset& candidate : candidates) {
            const ItemId extension = candidate.ids().back();
            const Itemset prefix = candidate.prefix();
            BoundedSupport bounds =
                (k == 2) ? pair_bounds(positives[prefix.ids().front()], positives[extension])
                         : extend_bounds(retained_bounds.at(prefix), positives[extension]);

            PatternRecord rec;
            rec.itemset = candidate;
            rec.ulb = ulb_distance(ref, bounds.upper());
            rec.llb = llb_distance(ref, bounds.lower());
            rec.lb = lb_distance(rec.ulb, rec.llb, cfg.combiner);
            rec.bounds = std::move(bounds);

            double deciding = rec.lb;
            if (cfg.mode == MiningMode::Exact) {
                SupportSequence seq = true_support_sequence(db, candidate, &counter);
                rec.actual_distance = euclidean(seq, ref);
                rec.exact = std::move(seq);
                deciding = *rec.actual_distance;
            }

            if (deciding <= limit) {
                rec.status = PatternStatus::Similar;
            } else if (rec.ulb <= limit) {
                rec.status = PatternStatus::RetainedOnly;
            } else {
                rec.status = PatternStatus::Dissimilar;
            }

            if (rec.status != PatternStatus::Dissimilar) {
                ++level.retained;
                retained_next.push_back(rec.itemset);
                next_bounds.emplace(rec.itemset, rec.bounds);
            }
            if (rec.status == PatternStatus::Similar) {
                ++level.similar;
                result.similar.push_back(rec);
            }
            result.records.push_back(std::move(rec));
        }

        result.per_level.push_back(level);
        retained_prev = std::move(retained_next);
        retained_bounds = std::move(next_bounds);
    }

    result.scan_count = counter.passes;
    return result;
}

}  // namespace simtap
