#include <doctest.h>

#include "property_checks.hpp"

TEST_SUITE("properties") {

TEST_CASE("oracle-backed randomized suite") {
    testutil::PropertyStats stats;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        testutil::check_instance(seed, stats);
    }
    CHECK(stats.instances == 200);
    CHECK(stats.envelope_checks > 0);
    CHECK(stats.distance_checks > 0);
    CHECK(stats.decomposition_checks > 0);
    for (const std::string& failure : stats.failures) {
        FAIL_CHECK(failure);
    }
    CHECK(stats.failures.empty());
}

}  // TEST_SUITE
