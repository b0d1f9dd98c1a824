#include "simtap/scan.hpp"

namespace simtap {

std::vector<SupportSequence> scan_singleton_supports(const TemporalDatabase& db,
                                                     ScanCounter* counter) {
    const std::size_t n_items = db.item_count();
    const std::size_t n_slots = db.slot_count();

    std::vector<std::vector<std::size_t>> counts(n_items, std::vector<std::size_t>(n_slots, 0));
    for (std::size_t s = 0; s < n_slots; ++s) {
        for (const Transaction& tx : db.slot(s).transactions) {
            for (ItemId id : tx) {
                ++counts[id][s];
            }
        }
    }
    if (counter) counter->record_pass();

    std::vector<SupportSequence> out;
    out.reserve(n_items);
    for (std::size_t id = 0; id < n_items; ++id) {
        std::vector<double> values(n_slots);
        for (std::size_t s = 0; s < n_slots; ++s) {
            values[s] = static_cast<double>(counts[id][s]) /
                        static_cast<double>(db.slot(s).transactions.size());
        }
        out.emplace_back(std::move(values));
    }
    return out;
}

SupportSequence negative_sequence(const SupportSequence& s) {
    std::vector<double> values(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        values[i] = 1.0 - s[i];
    }
    return SupportSequence(std::move(values));
}

}  // namespace simtap
