#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "simtap/types.hpp"

using namespace simtap;

TEST_SUITE("core") {

TEST_CASE("canonicalize sorts, deduplicates and rejects empty input") {
    CHECK(Itemset::canonicalize({2, 0, 1}).ids() == std::vector<ItemId>{0, 1, 2});
    CHECK(Itemset::canonicalize({5, 5}).ids() == std::vector<ItemId>{5});
    CHECK_THROWS_AS(Itemset::canonicalize({}), EmptyItemsetError);
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::vector<ItemId> ids(1 + rng() % 8);
        for (ItemId& id : ids) id = static_cast<ItemId>(rng() % 10);
        const Itemset once = Itemset::canonicalize(ids);
        const Itemset twice = Itemset::canonicalize(once.ids());
        CHECK(once == twice);
    }
}

TEST_CASE("itemset equality is decided by the id sequence alone") {
    ItemRegistry reg;
    const ItemId x = reg.intern("X");
    const ItemId y = reg.intern("Y");
    const ItemId z = reg.intern("Z");
    CHECK(Itemset::canonicalize({z, x, y}) == Itemset::canonicalize({x, y, z}));
    CHECK(Itemset::canonicalize({y, x}) != Itemset::canonicalize({y, z}));
}

TEST_CASE("itemset prefix and extension") {
    const Itemset xyz = testutil::items({0, 1, 2});
    CHECK(xyz.prefix() == testutil::items({0, 1}));
    CHECK(testutil::items({0, 1}).extended_with(2) == xyz);
    CHECK_THROWS_AS(testutil::items({0, 2}).extended_with(1), RangeError);
    CHECK_THROWS_AS(testutil::items({0}).prefix(), EmptyItemsetError);

    const auto subs = xyz.subsets_dropping_one();
    REQUIRE(subs.size() == 3);
    CHECK(subs[0] == testutil::items({1, 2}));
    CHECK(subs[1] == testutil::items({0, 2}));
    CHECK(subs[2] == testutil::items({0, 1}));
}

TEST_CASE("support sequence rejects values outside [0,1]") {
    CHECK_NOTHROW(SupportSequence({0.0, 0.5, 1.0}));
    CHECK_THROWS_AS(SupportSequence({1.2}), RangeError);
    CHECK_THROWS_AS(SupportSequence({-0.1}), RangeError);
    CHECK_THROWS_AS(SupportSequence({std::nan("")}), RangeError);
    CHECK_THROWS_AS(ReferenceSequence({1.0000001}), RangeError);
}

TEST_CASE("bounded support rejects inverted or mismatched envelopes") {
    CHECK_NOTHROW(BoundedSupport(SupportSequence({0.2, 0.2}), SupportSequence({0.2, 0.5})));
    CHECK_THROWS_AS(BoundedSupport(SupportSequence({0.5}), SupportSequence({0.4})), RangeError);
    CHECK_THROWS_AS(BoundedSupport(SupportSequence({0.1}), SupportSequence({0.1, 0.2})),
                    ArityError);
}

TEST_CASE("registry interning is dense and first-appearance ordered") {
    ItemRegistry reg;
    CHECK(reg.intern("b") == 0);
    CHECK(reg.intern("a") == 1);
    CHECK(reg.intern("b") == 0);
    CHECK(reg.size() == 2);
    CHECK(reg.label(1) == "a");
    CHECK(reg.find("a") == ItemId{1});
    CHECK(!reg.find("c").has_value());
    CHECK_THROWS_AS(reg.label(2), UnknownItemError);
}

TEST_CASE("database constructor enforces slot and transaction invariants") {
    ItemRegistry reg;
    reg.intern("a");

    CHECK_THROWS_AS(TemporalDatabase({}, reg), EmptyDatabaseError);
    CHECK_THROWS_AS(TemporalDatabase({TimeSlot{"t", {}}}, reg), Error);
    CHECK_THROWS_AS(TemporalDatabase({TimeSlot{"t", {{}}}}, reg), Error);
    CHECK_THROWS_AS(TemporalDatabase({TimeSlot{"t", {{0}}}, TimeSlot{"t", {{0}}}}, reg), Error);
    CHECK_THROWS_AS(TemporalDatabase({TimeSlot{"t", {{1}}}}, reg), UnknownItemError);
    CHECK_THROWS_AS(TemporalDatabase({TimeSlot{"t", {{0, 0}}}}, reg), Error);
    CHECK_NOTHROW(TemporalDatabase({TimeSlot{"t", {{0}}}}, reg));
}

}  // TEST_SUITE
