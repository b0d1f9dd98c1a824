#include "simtap/oracle.hpp"

#include <algorithm>

#include "simtap/distance.hpp"

namespace simtap {

namespace {

void require_known_items(const TemporalDatabase& db, const Itemset& pattern) {
    if (pattern.empty()) {
        throw EmptyItemsetError("cannot count support of an empty itemset");
    }
    if (pattern.max_id() >= db.item_count()) {
        throw UnknownItemError("itemset references item id " + std::to_string(pattern.max_id()) +
                               " missing from the registry");
    }
}

bool contains_all(const Transaction& tx, const std::vector<ItemId>& items) {
    return std::includes(tx.begin(), tx.end(), items.begin(), items.end());
}

bool contains_item(const Transaction& tx, ItemId id) {
    return std::binary_search(tx.begin(), tx.end(), id);
}

}  // namespace

SupportSequence true_support_sequence(const TemporalDatabase& db, const Itemset& pattern,
                                      ScanCounter* counter) {
    require_known_items(db, pattern);
    std::vector<double> values(db.slot_count());
    for (std::size_t s = 0; s < db.slot_count(); ++s) {
        const auto& txs = db.slot(s).transactions;
        std::size_t hits = 0;
        for (const Transaction& tx : txs) {
            if (contains_all(tx, pattern.ids())) ++hits;
        }
        values[s] = static_cast<double>(hits) / static_cast<double>(txs.size());
    }
    if (counter) counter->record_pass();
    return SupportSequence(std::move(values));
}

SupportSequence true_support_with_negation(const TemporalDatabase& db, const Itemset& base,
                                           ItemId absent, ScanCounter* counter) {
    require_known_items(db, base);
    if (absent >= db.item_count()) {
        throw UnknownItemError("negated item id " + std::to_string(absent) +
                               " missing from the registry");
    }
    std::vector<double> values(db.slot_count());
    for (std::size_t s = 0; s < db.slot_count(); ++s) {
        const auto& txs = db.slot(s).transactions;
        std::size_t hits = 0;
        for (const Transaction& tx : txs) {
            if (contains_all(tx, base.ids()) && !contains_item(tx, absent)) ++hits;
        }
        values[s] = static_cast<double>(hits) / static_cast<double>(txs.size());
    }
    if (counter) counter->record_pass();
    return SupportSequence(std::move(values));
}

std::vector<Itemset> enumerate_itemsets(std::size_t item_count) {
    if (item_count > kMaxExactItems) {
        throw CapacityError("exhaustive enumeration refused for " + std::to_string(item_count) +
                            " items (limit " + std::to_string(kMaxExactItems) + ")");
    }
    std::vector<Itemset> out;
    for (std::size_t k = 1; k <= item_count; ++k) {
        std::vector<ItemId> combo(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<ItemId>(i);
        while (true) {
            out.push_back(Itemset::canonicalize(combo));
            // advance to the next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && combo[i - 1] == item_count - k + (i - 1)) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return out;
}

std::vector<PatternRecord> exact_mine(const TemporalDatabase& db, const ReferenceSequence& ref,
                                      double theta, ScanCounter* counter, double epsilon,
                                      std::vector<std::pair<Itemset, SupportSequence>>* all_sequences) {
    if (ref.size() != db.slot_count()) {
        throw ArityError("reference length does not match slot count");
    }
    const double limit = theta + epsilon;
    std::vector<PatternRecord> similar;
    for (const Itemset& pattern : enumerate_itemsets(db.item_count())) {
        SupportSequence seq = true_support_sequence(db, pattern, counter);
        if (all_sequences) all_sequences->emplace_back(pattern, seq);
        const double dist = euclidean(seq, ref);
        if (dist <= limit) {
            PatternRecord rec;
            rec.itemset = pattern;
            rec.ulb = ulb_distance(ref, seq);
            rec.llb = llb_distance(ref, seq);
            rec.lb = lb_distance(rec.ulb, rec.llb, Combiner::Sum);
            rec.actual_distance = dist;
            rec.bounds = BoundedSupport(seq, seq);
            rec.exact = std::move(seq);
            rec.status = PatternStatus::Similar;
            similar.push_back(std::move(rec));
        }
    }
    return similar;
}

}  // namespace simtap
