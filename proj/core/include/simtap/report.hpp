#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simtap/miner.hpp"
#include "simtap/types.hpp"

namespace simtap {

// Parameters echoed at the top of every report.
struct ReportParameters {
    std::optional<std::string> db_path;
    std::optional<std::string> synthetic;
    std::vector<double> reference;
    double theta = 0.0;
    MiningMode mode = MiningMode::Paper;
    Combiner combiner = Combiner::Sum;
    double epsilon = 1e-9;
};

// JSON renderers return a serialized document. Top-level fields of the mine
// report are {parameters, scan_count, levels, similar}; each pattern object
// carries {items, lower, upper, ulb, llb, lb, actual, status} with `actual`
// null when no exact sequence was computed. Distances keep full precision in
// JSON; tables round to 4 decimals.
std::string mine_report_json(const ReportParameters& params, const MiningResult& result,
                             const ItemRegistry& registry);
std::string mine_report_table(const ReportParameters& params, const MiningResult& result,
                              const ItemRegistry& registry);

std::string oracle_report_json(const ReportParameters& params,
                               const std::vector<std::pair<Itemset, SupportSequence>>& sequences,
                               const std::vector<PatternRecord>& similar,
                               std::uint64_t scan_count, const ItemRegistry& registry);
std::string oracle_report_table(const ReportParameters& params,
                                const std::vector<std::pair<Itemset, SupportSequence>>& sequences,
                                const std::vector<PatternRecord>& similar,
                                std::uint64_t scan_count, const ItemRegistry& registry);

// Itemsets similar under one miner but not the other.
struct SimilarSetDiff {
    std::vector<Itemset> false_positives;  // similar in `approx` only
    std::vector<Itemset> false_negatives;  // similar in `exact` only
};

SimilarSetDiff diff_similar_sets(const std::vector<PatternRecord>& approx,
                                 const std::vector<PatternRecord>& exact);

struct BenchReport {
    ReportParameters params;
    MiningResult paper;
    double paper_wall_ms = 0.0;
    std::vector<PatternRecord> exact_similar;
    std::uint64_t exact_passes = 0;
    double exact_wall_ms = 0.0;
    SimilarSetDiff diff;
};

std::string bench_report_json(const BenchReport& report, const ItemRegistry& registry);
std::string bench_report_table(const BenchReport& report, const ItemRegistry& registry);

}  // namespace simtap
