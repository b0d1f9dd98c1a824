#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <json.hpp>

#include "helpers.hpp"
#include "simtap/miner.hpp"
#include "simtap/report.hpp"

using namespace simtap;
using nlohmann::json;

namespace {

struct DemoRun {
    TemporalDatabase db = testutil::demo_db();
    ReferenceSequence ref{std::vector<double>{0.4, 0.6}};
    MinerConfig cfg;
    MiningResult result;
    ReportParameters params;

    DemoRun() {
        cfg.theta = 0.22;
        result = mine(db, ref, cfg);
        params.db_path = "demo.tsv";
        params.reference = ref.values();
        params.theta = cfg.theta;
        params.mode = cfg.mode;
        params.combiner = cfg.combiner;
        params.epsilon = cfg.epsilon;
    }
};

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("mine JSON report is schema-stable") {
    const DemoRun run;
    const json j = json::parse(mine_report_json(run.params, run.result, run.db.items()));

    REQUIRE(j.contains("parameters"));
    REQUIRE(j.contains("scan_count"));
    REQUIRE(j.contains("levels"));
    REQUIRE(j.contains("similar"));
    CHECK(j.size() == 4);

    const json& params = j["parameters"];
    CHECK(params["db"] == "demo.tsv");
    CHECK(params["synthetic"].is_null());
    CHECK(params["ref"] == json::array({0.4, 0.6}));
    CHECK(params["theta"] == 0.22);
    CHECK(params["mode"] == "paper");
    CHECK(params["combiner"] == "sum");

    CHECK(j["scan_count"] == 1);
    REQUIRE(j["levels"].size() == 2);
    CHECK(j["levels"][0] ==
          json({{"level", 1}, {"generated", 3}, {"pruned", 0}, {"retained", 3}, {"similar", 1}}));

    REQUIRE(j["similar"].size() == 3);
    for (const json& pattern : j["similar"]) {
        CHECK(pattern.size() == 8);
        for (const char* key : {"items", "lower", "upper", "ulb", "llb", "lb", "actual", "status"}) {
            CHECK(pattern.contains(key));
        }
        CHECK(pattern["status"] == "similar");
    }
    CHECK(j["similar"][0]["items"] == json::array({"Y"}));
    CHECK(j["similar"][1]["items"] == json::array({"X", "Z"}));
    CHECK(j["similar"][2]["items"] == json::array({"Y", "Z"}));

    // level-1 records carry the actual distance at full precision,
    // level-2 paper-mode records carry null
    CHECK(j["similar"][0]["actual"].get<double>() == std::sqrt(0.02));
    CHECK(j["similar"][1]["actual"].is_null());
}

TEST_CASE("table and JSON reports encode the same data") {
    const DemoRun run;
    const json j = json::parse(mine_report_json(run.params, run.result, run.db.items()));
    const std::string table = mine_report_table(run.params, run.result, run.db.items());

    CHECK(table.find("scan count: 1") != std::string::npos);
    for (const json& pattern : j["similar"]) {
        std::string label = "[";
        for (std::size_t i = 0; i < pattern["items"].size(); ++i) {
            if (i) label += ",";
            label += pattern["items"][i].get<std::string>();
        }
        label += "]";
        CHECK(table.find(label) != std::string::npos);
        CHECK(table.find(fixed4(pattern["ulb"].get<double>())) != std::string::npos);
        CHECK(table.find(fixed4(pattern["lb"].get<double>())) != std::string::npos);
    }
    for (const json& level : j["levels"]) {
        CHECK(table.find(std::to_string(level["generated"].get<std::size_t>())) !=
              std::string::npos);
    }
}

TEST_CASE("diff_similar_sets splits disagreements by direction") {
    auto record_for = [](std::initializer_list<ItemId> ids) {
        PatternRecord rec;
        rec.itemset = testutil::items(ids);
        return rec;
    };
    const std::vector<PatternRecord> approx = {record_for({0}), record_for({0, 1})};
    const std::vector<PatternRecord> exact = {record_for({0}), record_for({1})};

    const SimilarSetDiff diff = diff_similar_sets(approx, exact);
    REQUIRE(diff.false_positives.size() == 1);
    CHECK(diff.false_positives[0] == testutil::items({0, 1}));
    REQUIRE(diff.false_negatives.size() == 1);
    CHECK(diff.false_negatives[0] == testutil::items({1}));
}

}  // TEST_SUITE
