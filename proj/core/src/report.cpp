#include "simtap/report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace simtap {

namespace {

using nlohmann::json;

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string sequence_text(const std::vector<double>& values) {
    std::string out = "<";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += fixed4(values[i]);
    }
    out += ">";
    return out;
}

std::vector<std::string> item_labels(const Itemset& itemset, const ItemRegistry& registry) {
    std::vector<std::string> out;
    out.reserve(itemset.size());
    for (ItemId id : itemset.ids()) out.push_back(registry.label(id));
    return out;
}

std::string pattern_text(const Itemset& itemset, const ItemRegistry& registry) {
    std::string out = "[";
    const auto labels = item_labels(itemset, registry);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    out += "]";
    return out;
}

json parameters_json(const ReportParameters& p) {
    json j;
    j["db"] = p.db_path ? json(*p.db_path) : json(nullptr);
    j["synthetic"] = p.synthetic ? json(*p.synthetic) : json(nullptr);
    j["ref"] = p.reference;
    j["theta"] = p.theta;
    j["mode"] = to_string(p.mode);
    j["combiner"] = to_string(p.combiner);
    j["epsilon"] = p.epsilon;
    return j;
}

json pattern_json(const PatternRecord& rec, const ItemRegistry& registry) {
    json j;
    j["items"] = item_labels(rec.itemset, registry);
    j["lower"] = rec.bounds.lower().values();
    j["upper"] = rec.bounds.upper().values();
    j["ulb"] = rec.ulb;
    j["llb"] = rec.llb;
    j["lb"] = rec.lb;
    j["actual"] = rec.actual_distance ? json(*rec.actual_distance) : json(nullptr);
    j["status"] = to_string(rec.status);
    return j;
}

json levels_json(const std::vector<LevelStats>& levels) {
    json arr = json::array();
    for (const LevelStats& lvl : levels) {
        arr.push_back({{"level", lvl.level},
                       {"generated", lvl.generated},
                       {"pruned", lvl.pruned},
                       {"retained", lvl.retained},
                       {"similar", lvl.similar}});
    }
    return arr;
}

void print_parameters(std::ostringstream& out, const ReportParameters& p) {
    if (p.db_path) out << "  database:  " << *p.db_path << "\n";
    if (p.synthetic) out << "  synthetic: " << *p.synthetic << "\n";
    out << "  reference: " << sequence_text(p.reference) << "\n";
    out << "  theta: " << fixed4(p.theta) << "   mode: " << to_string(p.mode)
        << "   combiner: " << to_string(p.combiner) << "   epsilon: " << p.epsilon << "\n";
}

void print_levels(std::ostringstream& out, const std::vector<LevelStats>& levels) {
    out << "  level  generated  pruned  retained  similar\n";
    for (const LevelStats& lvl : levels) {
        out << "  " << std::setw(5) << lvl.level << "  " << std::setw(9) << lvl.generated << "  "
            << std::setw(6) << lvl.pruned << "  " << std::setw(8) << lvl.retained << "  "
            << std::setw(7) << lvl.similar << "\n";
    }
}

void print_pattern_rows(std::ostringstream& out, const std::vector<PatternRecord>& records,
                        const ItemRegistry& registry) {
    std::size_t width = 7;
    for (const PatternRecord& rec : records) {
        width = std::max(width, pattern_text(rec.itemset, registry).size());
    }
    std::size_t seq_width = 5;
    for (const PatternRecord& rec : records) {
        seq_width = std::max(seq_width, sequence_text(rec.bounds.lower().values()).size());
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "pattern" << "  "
        << std::setw(static_cast<int>(seq_width)) << "lower" << "  "
        << std::setw(static_cast<int>(seq_width)) << "upper" << "  "
        << "ulb     llb     lb      actual  status\n";
    for (const PatternRecord& rec : records) {
        out << "  " << std::left << std::setw(static_cast<int>(width))
            << pattern_text(rec.itemset, registry) << "  "
            << std::setw(static_cast<int>(seq_width)) << sequence_text(rec.bounds.lower().values())
            << "  " << std::setw(static_cast<int>(seq_width))
            << sequence_text(rec.bounds.upper().values()) << "  " << fixed4(rec.ulb) << "  "
            << fixed4(rec.llb) << "  " << fixed4(rec.lb) << "  "
            << (rec.actual_distance ? fixed4(*rec.actual_distance) : "-     ") << "  "
            << to_string(rec.status) << "\n";
    }
    out << std::right;
}

json itemset_list_json(const std::vector<Itemset>& itemsets, const ItemRegistry& registry) {
    json arr = json::array();
    for (const Itemset& itemset : itemsets) arr.push_back(item_labels(itemset, registry));
    return arr;
}

}  // namespace

std::string mine_report_json(const ReportParameters& params, const MiningResult& result,
                             const ItemRegistry& registry) {
    json j;
    j["parameters"] = parameters_json(params);
    j["scan_count"] = result.scan_count;
    j["levels"] = levels_json(result.per_level);
    json similar = json::array();
    for (const PatternRecord& rec : result.similar) similar.push_back(pattern_json(rec, registry));
    j["similar"] = similar;
    return j.dump(2);
}

std::string mine_report_table(const ReportParameters& params, const MiningResult& result,
                              const ItemRegistry& registry) {
    std::ostringstream out;
    out << "similar temporal association patterns\n";
    print_parameters(out, params);
    out << "  scan count: " << result.scan_count << "\n\n";
    print_levels(out, result.per_level);
    out << "\n  similar patterns (" << result.similar.size() << "):\n";
    if (!result.similar.empty()) {
        print_pattern_rows(out, result.similar, registry);
    }
    return out.str();
}

std::string oracle_report_json(const ReportParameters& params,
                               const std::vector<std::pair<Itemset, SupportSequence>>& sequences,
                               const std::vector<PatternRecord>& similar,
                               std::uint64_t scan_count, const ItemRegistry& registry) {
    json j;
    j["parameters"] = parameters_json(params);
    j["scan_count"] = scan_count;
    json seqs = json::array();
    for (const auto& [itemset, seq] : sequences) {
        seqs.push_back({{"items", item_labels(itemset, registry)}, {"support", seq.values()}});
    }
    j["sequences"] = seqs;
    json sim = json::array();
    for (const PatternRecord& rec : similar) sim.push_back(pattern_json(rec, registry));
    j["similar"] = sim;
    return j.dump(2);
}

std::string oracle_report_table(const ReportParameters& params,
                                const std::vector<std::pair<Itemset, SupportSequence>>& sequences,
                                const std::vector<PatternRecord>& similar,
                                std::uint64_t scan_count, const ItemRegistry& registry) {
    std::ostringstream out;
    out << "exhaustive exact mining report\n";
    print_parameters(out, params);
    out << "  scan count: " << scan_count << "\n\n";
    out << "  true support sequences (" << sequences.size() << "):\n";
    std::size_t width = 7;
    for (const auto& [itemset, seq] : sequences) {
        width = std::max(width, pattern_text(itemset, registry).size());
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "pattern" << "  support\n";
    for (const auto& [itemset, seq] : sequences) {
        out << "  " << std::setw(static_cast<int>(width)) << pattern_text(itemset, registry) << "  "
            << sequence_text(seq.values()) << "\n";
    }
    out << std::right << "\n  similar patterns (" << similar.size() << "):\n";
    if (!similar.empty()) {
        print_pattern_rows(out, similar, registry);
    }
    return out.str();
}

SimilarSetDiff diff_similar_sets(const std::vector<PatternRecord>& approx,
                                 const std::vector<PatternRecord>& exact) {
    auto itemsets_of = [](const std::vector<PatternRecord>& records) {
        std::vector<Itemset> out;
        out.reserve(records.size());
        for (const PatternRecord& rec : records) out.push_back(rec.itemset);
        std::sort(out.begin(), out.end());
        return out;
    };
    const std::vector<Itemset> a = itemsets_of(approx);
    const std::vector<Itemset> b = itemsets_of(exact);
    SimilarSetDiff diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(diff.false_positives));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(diff.false_negatives));
    return diff;
}

std::string bench_report_json(const BenchReport& report, const ItemRegistry& registry) {
    json j;
    j["parameters"] = parameters_json(report.params);

    json paper;
    paper["scan_count"] = report.paper.scan_count;
    paper["wall_ms"] = report.paper_wall_ms;
    paper["levels"] = levels_json(report.paper.per_level);
    std::vector<Itemset> paper_similar;
    for (const PatternRecord& rec : report.paper.similar) paper_similar.push_back(rec.itemset);
    paper["similar"] = itemset_list_json(paper_similar, registry);
    j["paper"] = paper;

    json exact;
    exact["scan_count"] = report.exact_passes;
    exact["wall_ms"] = report.exact_wall_ms;
    std::vector<Itemset> exact_similar;
    for (const PatternRecord& rec : report.exact_similar) exact_similar.push_back(rec.itemset);
    exact["similar"] = itemset_list_json(exact_similar, registry);
    j["exact"] = exact;

    j["false_positives"] = {{"count", report.diff.false_positives.size()},
                            {"items", itemset_list_json(report.diff.false_positives, registry)}};
    j["false_negatives"] = {{"count", report.diff.false_negatives.size()},
                            {"items", itemset_list_json(report.diff.false_negatives, registry)}};
    return j.dump(2);
}

std::string bench_report_table(const BenchReport& report, const ItemRegistry& registry) {
    std::ostringstream out;
    out << "single-scan miner vs exhaustive oracle\n";
    print_parameters(out, report.params);
    out << "\n  paper mode: scan count " << report.paper.scan_count << ", wall "
        << fixed4(report.paper_wall_ms) << " ms, similar " << report.paper.similar.size() << "\n";
    print_levels(out, report.paper.per_level);
    out << "\n  oracle: passes " << report.exact_passes << ", wall " << fixed4(report.exact_wall_ms)
        << " ms, similar " << report.exact_similar.size() << "\n";
    out << "\n  false positives: " << report.diff.false_positives.size();
    for (const Itemset& itemset : report.diff.false_positives) {
        out << " " << pattern_text(itemset, registry);
    }
    out << "\n  false negatives: " << report.diff.false_negatives.size();
    for (const Itemset& itemset : report.diff.false_negatives) {
        out << " " << pattern_text(itemset, registry);
    }
    out << "\n";
    return out.str();
}

}  // namespace simtap
