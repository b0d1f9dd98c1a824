#include "simtap/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace simtap {

Itemset Itemset::canonicalize(std::vector<ItemId> ids) {
    if (ids.empty()) {
        throw EmptyItemsetError("itemset must contain at least one item");
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return Itemset(std::move(ids));
}

Itemset Itemset::extended_with(ItemId id) const {
    if (!ids_.empty() && id <= ids_.back()) {
        throw RangeError("extension id must exceed the itemset's maximum id");
    }
    std::vector<ItemId> ids = ids_;
    ids.push_back(id);
    return Itemset(std::move(ids));
}

std::vector<Itemset> Itemset::subsets_dropping_one() const {
    std::vector<Itemset> out;
    if (ids_.size() < 2) return out;
    out.reserve(ids_.size());
    for (std::size_t skip = 0; skip < ids_.size(); ++skip) {
        std::vector<ItemId> sub;
        sub.reserve(ids_.size() - 1);
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            if (i != skip) sub.push_back(ids_[i]);
        }
        out.push_back(Itemset(std::move(sub)));
    }
    return out;
}

Itemset Itemset::prefix() const {
    if (ids_.size() < 2) {
        throw EmptyItemsetError("prefix of a singleton would be empty");
    }
    return Itemset(std::vector<ItemId>(ids_.begin(), ids_.end() - 1));
}

ItemId ItemRegistry::intern(std::string_view label) {
    auto it = index_.find(std::string(label));
    if (it != index_.end()) return it->second;
    ItemId id = static_cast<ItemId>(labels_.size());
    labels_.emplace_back(label);
    index_.emplace(std::string(label), id);
    return id;
}

std::optional<ItemId> ItemRegistry::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& ItemRegistry::label(ItemId id) const {
    if (id >= labels_.size()) {
        throw UnknownItemError("item id " + std::to_string(id) + " is not in the registry");
    }
    return labels_[id];
}

TemporalDatabase::TemporalDatabase(std::vector<TimeSlot> slots, ItemRegistry registry)
    : slots_(std::move(slots)), registry_(std::move(registry)) {
    if (slots_.empty()) {
        throw EmptyDatabaseError("database has no time slots");
    }
    std::unordered_set<std::string> seen;
    for (const TimeSlot& slot : slots_) {
        if (!seen.insert(slot.label).second) {
            throw Error("duplicate time slot label: " + slot.label);
        }
        if (slot.transactions.empty()) {
            throw Error("time slot '" + slot.label + "' has no transactions");
        }
        for (const Transaction& tx : slot.transactions) {
            if (tx.empty()) {
                throw Error("empty transaction in slot '" + slot.label + "'");
            }
            if (!std::is_sorted(tx.begin(), tx.end()) ||
                std::adjacent_find(tx.begin(), tx.end()) != tx.end()) {
                throw Error("transaction items must be strictly ascending");
            }
            if (tx.back() >= registry_.size()) {
                throw UnknownItemError("transaction references item id " +
                                       std::to_string(tx.back()) +
                                       " missing from the registry");
            }
        }
    }
}

std::size_t TemporalDatabase::transaction_count() const {
    std::size_t n = 0;
    for (const TimeSlot& slot : slots_) n += slot.transactions.size();
    return n;
}

namespace {

std::vector<double> checked_unit_values(std::vector<double> values, const char* what) {
    for (double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {  // also rejects NaN
            throw RangeError(std::string(what) + " value outside [0,1]");
        }
    }
    return values;
}

}  // namespace

SupportSequence::SupportSequence(std::vector<double> values)
    : values_(checked_unit_values(std::move(values), "support")) {}

ReferenceSequence::ReferenceSequence(std::vector<double> values)
    : values_(checked_unit_values(std::move(values), "reference")) {}

BoundedSupport::BoundedSupport(SupportSequence lower, SupportSequence upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.size() != upper_.size()) {
        throw ArityError("bound sequences differ in length");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (lower_[i] > upper_[i]) {
            throw RangeError("lower bound exceeds upper bound at slot " + std::to_string(i));
        }
    }
}

const char* to_string(PatternStatus status) {
    switch (status) {
        case PatternStatus::Similar: return "similar";
        case PatternStatus::RetainedOnly: return "retained";
        case PatternStatus::Dissimilar: return "dissimilar";
    }
    return "unknown";
}

}  // namespace simtap
