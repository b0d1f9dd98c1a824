#pragma once

#include <random>
#include <string>
#include <vector>

#include "simtap/ingest.hpp"
#include "simtap/synthetic.hpp"
#include "simtap/types.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(SIMTAP_DATA_DIR) + "/" + name;
}

// The two-slot, ten-transactions-per-slot worked example over items X, Y, Z.
inline simtap::TemporalDatabase demo_db() {
    return simtap::load_database_file(data_path("demo.tsv"));
}

inline simtap::Itemset items(std::initializer_list<simtap::ItemId> ids) {
    return simtap::Itemset::canonicalize(std::vector<simtap::ItemId>(ids));
}

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Seeded mining instance within the small-database envelope used by the
// randomized suites: <= 6 items, <= 4 slots, <= 30 transactions total.
struct RandomInstance {
    simtap::SyntheticSpec spec;
    simtap::TemporalDatabase db;
    simtap::ReferenceSequence ref;
    double theta = 0.0;
};

inline RandomInstance make_random_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull);
    simtap::SyntheticSpec spec;
    spec.items = 1 + rng() % 6;
    spec.slots = 1 + rng() % 4;
    spec.tx_per_slot = 1 + rng() % (30 / spec.slots);
    spec.seed = rng();
    spec.density = 0.15 + 0.7 * unit(rng);

    simtap::TemporalDatabase db = simtap::generate_synthetic_database(spec);
    std::vector<double> ref(spec.slots);
    for (double& r : ref) r = unit(rng);
    const double theta = 0.7 * unit(rng);
    return {spec, std::move(db), simtap::ReferenceSequence(std::move(ref)), theta};
}

}  // namespace testutil
