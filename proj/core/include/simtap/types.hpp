#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simtap/errors.hpp"

namespace simtap {

// Item ids are dense: assigned 0,1,2,... in order of first appearance at ingest.
using ItemId = std::uint32_t;

struct Item {
    ItemId id = 0;
    std::string label;
};

// An itemset in canonical form: ids strictly ascending, no duplicates, never
// empty once constructed through canonicalize(). Equality and ordering are
// decided by the id sequence alone.
class Itemset {
public:
    Itemset() = default;

    // Sorts and deduplicates. Throws EmptyItemsetError on an empty input.
    static Itemset canonicalize(std::vector<ItemId> ids);

    const std::vector<ItemId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    ItemId max_id() const { return ids_.back(); }

    // New itemset with `id` appended; requires id > max_id().
    Itemset extended_with(ItemId id) const;

    // All (k-1)-subsets, obtained by dropping one element at a time.
    std::vector<Itemset> subsets_dropping_one() const;

    // The itemset without its largest id; requires size() >= 2.
    Itemset prefix() const;

    bool operator==(const Itemset&) const = default;
    auto operator<=>(const Itemset&) const = default;

private:
    explicit Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) {}
    std::vector<ItemId> ids_;
};

// A transaction is a set of item ids, stored strictly ascending.
using Transaction = std::vector<ItemId>;

struct TimeSlot {
    std::string label;
    std::vector<Transaction> transactions;

    bool operator==(const TimeSlot&) const = default;
};

// label <-> dense id association. Ids are contiguous from 0 in order of
// first intern() call; never persisted across runs.
class ItemRegistry {
public:
    ItemId intern(std::string_view label);
    std::optional<ItemId> find(std::string_view label) const;
    const std::string& label(ItemId id) const;  // throws UnknownItemError
    Item item(ItemId id) const { return {id, label(id)}; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const ItemRegistry& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ItemId> index_;
};

// Transactions partitioned into ordered, disjoint time slots. Immutable after
// construction; the constructor enforces:
//   - at least one slot, pairwise distinct slot labels
//   - every slot has at least one transaction
//   - every transaction is non-empty and strictly ascending
//   - every item id is present in the registry
class TemporalDatabase {
public:
    TemporalDatabase(std::vector<TimeSlot> slots, ItemRegistry registry);

    std::size_t slot_count() const { return slots_.size(); }
    std::size_t item_count() const { return registry_.size(); }
    const std::vector<TimeSlot>& slots() const { return slots_; }
    const TimeSlot& slot(std::size_t i) const { return slots_.at(i); }
    const ItemRegistry& items() const { return registry_; }
    std::size_t transaction_count() const;

    bool operator==(const TemporalDatabase& other) const {
        return slots_ == other.slots_ && registry_ == other.registry_;
    }

private:
    std::vector<TimeSlot> slots_;
    ItemRegistry registry_;
};

// Per-slot support fractions of an itemset; every value in [0,1].
class SupportSequence {
public:
    SupportSequence() = default;
    explicit SupportSequence(std::vector<double> values);  // throws RangeError

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const SupportSequence&) const = default;

private:
    std::vector<double> values_;
};

// A user-supplied target support sequence; same [0,1] constraint as supports.
class ReferenceSequence {
public:
    ReferenceSequence() = default;
    explicit ReferenceSequence(std::vector<double> values);  // throws RangeError

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const ReferenceSequence&) const = default;

private:
    std::vector<double> values_;
};

// Elementwise envelope around an unknown true support sequence.
// Construction rejects any slot with lower > upper.
class BoundedSupport {
public:
    BoundedSupport() = default;
    BoundedSupport(SupportSequence lower, SupportSequence upper);

    const SupportSequence& lower() const { return lower_; }
    const SupportSequence& upper() const { return upper_; }

    bool operator==(const BoundedSupport&) const = default;

private:
    SupportSequence lower_;
    SupportSequence upper_;
};

enum class PatternStatus {
    Similar,       // deciding distance within threshold
    RetainedOnly,  // kept for candidate generation (ULB within threshold)
    Dissimilar,    // dropped
};

const char* to_string(PatternStatus status);

struct PatternRecord {
    Itemset itemset;
    BoundedSupport bounds;
    std::optional<SupportSequence> exact;  // present at level 1 and in exact mode
    double ulb = 0.0;
    double llb = 0.0;
    double lb = 0.0;
    std::optional<double> actual_distance;
    PatternStatus status = PatternStatus::Dissimilar;

    bool operator==(const PatternRecord&) const = default;
};

struct LevelStats {
    int level = 0;
    std::size_t generated = 0;  // candidates formed by prefix extension
    std::size_t pruned = 0;     // discarded by the subset check
    std::size_t retained = 0;   // similar or retained-only
    std::size_t similar = 0;

    bool operator==(const LevelStats&) const = default;
};

struct MiningResult {
    std::vector<PatternRecord> similar;
    std::vector<PatternRecord> records;  // every evaluated candidate, all statuses
    std::vector<LevelStats> per_level;
    std::uint64_t scan_count = 0;

    bool operator==(const MiningResult&) const = default;
};

// Counts full passes over the transaction data; the honesty meter for the
// single-scan claim.
struct ScanCounter {
    std::uint64_t passes = 0;
    void record_pass() { ++passes; }
};

}  // namespace simtap
