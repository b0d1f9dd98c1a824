#include "simtap/synthetic.hpp"

#include <charconv>
#include <random>
#include <vector>

namespace simtap {

namespace {

// Uniform in [0,1) from the top 53 bits; identical across platforms, unlike
// std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t parse_uint(std::string_view token, std::string_view key) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("synthetic spec: bad integer for '" + std::string(key) + "'");
    }
    return value;
}

double parse_real(std::string_view token, std::string_view key) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("synthetic spec: bad number for '" + std::string(key) + "'");
    }
    return value;
}

}  // namespace

SyntheticSpec parse_synthetic_spec(std::string_view text) {
    SyntheticSpec spec;
    std::size_t start = 0;
    for (;;) {
        const auto end = text.find(',', start);
        const std::string_view entry = (end == std::string_view::npos)
                                           ? text.substr(start)
                                           : text.substr(start, end - start);
        if (entry.empty()) {
            throw ParseError("synthetic spec: empty entry");
        }
        auto eq = entry.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("synthetic spec: expected key=value, got '" + std::string(entry) + "'");
        }
        std::string_view key = entry.substr(0, eq);
        std::string_view value = entry.substr(eq + 1);
        if (key == "items") {
            spec.items = parse_uint(value, key);
        } else if (key == "slots") {
            spec.slots = parse_uint(value, key);
        } else if (key == "tx-per-slot") {
            spec.tx_per_slot = parse_uint(value, key);
        } else if (key == "seed") {
            spec.seed = parse_uint(value, key);
        } else if (key == "density") {
            spec.density = parse_real(value, key);
        } else {
            throw ParseError("synthetic spec: unknown key '" + std::string(key) + "'");
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (spec.items == 0 || spec.slots == 0 || spec.tx_per_slot == 0) {
        throw RangeError("synthetic spec: items, slots and tx-per-slot must be positive");
    }
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw RangeError("synthetic spec: density must be in [0,1]");
    }
    return spec;
}

std::string to_string(const SyntheticSpec& spec) {
    return "items=" + std::to_string(spec.items) + ",slots=" + std::to_string(spec.slots) +
           ",tx-per-slot=" + std::to_string(spec.tx_per_slot) +
           ",seed=" + std::to_string(spec.seed) + ",density=" + std::to_string(spec.density);
}

TemporalDatabase generate_synthetic_database(const SyntheticSpec& spec) {
    if (spec.items == 0 || spec.slots == 0 || spec.tx_per_slot == 0) {
        throw RangeError("synthetic spec: items, slots and tx-per-slot must be positive");
    }
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw RangeError("synthetic spec: density must be in [0,1]");
    }

    ItemRegistry registry;
    for (std::size_t i = 0; i < spec.items; ++i) {
        registry.intern("I" + std::to_string(i + 1));
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<TimeSlot> slots;
    slots.reserve(spec.slots);
    for (std::size_t s = 0; s < spec.slots; ++s) {
        TimeSlot slot;
        slot.label = "T" + std::to_string(s + 1);
        slot.transactions.reserve(spec.tx_per_slot);
        for (std::size_t t = 0; t < spec.tx_per_slot; ++t) {
            Transaction tx;
            for (std::size_t i = 0; i < spec.items; ++i) {
                if (next_unit(rng) < spec.density) {
                    tx.push_back(static_cast<ItemId>(i));
                }
            }
            if (tx.empty()) {
                tx.push_back(static_cast<ItemId>(rng() % spec.items));
            }
            slot.transactions.push_back(std::move(tx));
        }
        slots.push_back(std::move(slot));
    }
    return TemporalDatabase(std::move(slots), std::move(registry));
}

}  // namespace simtap
