#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "simtap/types.hpp"

namespace simtap {

// Seeded random database: each of `items` items is present in each
// transaction independently with probability `density`. A transaction that
// would come out empty receives one uniformly chosen item instead. Item
// labels are I1..In, slot labels T1..Tm; every item is preloaded into the
// registry, so items that never occur still exist with all-zero supports.
struct SyntheticSpec {
    std::size_t items = 4;
    std::size_t slots = 2;
    std::size_t tx_per_slot = 10;
    std::uint64_t seed = 1;
    double density = 0.5;
};

// Parses "items=6,slots=4,tx-per-slot=20,seed=1,density=0.3" (any order,
// all keys optional, unknown keys rejected).
SyntheticSpec parse_synthetic_spec(std::string_view text);

std::string to_string(const SyntheticSpec& spec);

TemporalDatabase generate_synthetic_database(const SyntheticSpec& spec);

}  // namespace simtap
