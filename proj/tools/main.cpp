// Command-line front end: mine, oracle and bench subcommands.
//
// Exit codes: 0 success, 2 input error, 3 capacity guard.

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simtap/ingest.hpp"
#include "simtap/miner.hpp"
#include "simtap/oracle.hpp"
#include "simtap/report.hpp"
#include "simtap/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCapacity = 3;

struct CommonOptions {
    std::string db_path;
    std::string ref_text;
    double theta = 0.0;
    std::string output = "table";
    bool with_tid = false;
};

simtap::Combiner parse_combiner(const std::string& name) {
    if (name == "sum") return simtap::Combiner::Sum;
    if (name == "quad") return simtap::Combiner::Quadrature;
    throw simtap::ParseError("unknown combiner '" + name + "'");
}

simtap::MiningMode parse_mode(const std::string& name) {
    if (name == "paper") return simtap::MiningMode::Paper;
    if (name == "exact") return simtap::MiningMode::Exact;
    throw simtap::ParseError("unknown mode '" + name + "'");
}

double elapsed_ms(std::chrono::steady_clock::time_point start,
                  std::chrono::steady_clock::time_point stop) {
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int run_mine(const CommonOptions& common, const std::string& mode_name,
             const std::string& combiner_name) {
    const simtap::TemporalDatabase db =
        simtap::load_database_file(common.db_path, {common.with_tid});
    const simtap::ReferenceSequence ref =
        simtap::parse_reference(common.ref_text, db.slot_count());

    simtap::MinerConfig cfg;
    cfg.theta = common.theta;
    cfg.mode = parse_mode(mode_name);
    cfg.combiner = parse_combiner(combiner_name);

    const simtap::MiningResult result = simtap::mine(db, ref, cfg);

    simtap::ReportParameters params;
    params.db_path = common.db_path;
    params.reference = ref.values();
    params.theta = cfg.theta;
    params.mode = cfg.mode;
    params.combiner = cfg.combiner;
    params.epsilon = cfg.epsilon;

    if (common.output == "json") {
        std::cout << simtap::mine_report_json(params, result, db.items()) << "\n";
    } else {
        std::cout << simtap::mine_report_table(params, result, db.items());
    }
    return kExitOk;
}

int run_oracle(const CommonOptions& common) {
    const simtap::TemporalDatabase db =
        simtap::load_database_file(common.db_path, {common.with_tid});
    const simtap::ReferenceSequence ref =
        simtap::parse_reference(common.ref_text, db.slot_count());

    simtap::ScanCounter counter;
    std::vector<std::pair<simtap::Itemset, simtap::SupportSequence>> sequences;
    const std::vector<simtap::PatternRecord> similar =
        simtap::exact_mine(db, ref, common.theta, &counter, 1e-9, &sequences);

    simtap::ReportParameters params;
    params.db_path = common.db_path;
    params.reference = ref.values();
    params.theta = common.theta;
    params.mode = simtap::MiningMode::Exact;

    if (common.output == "json") {
        std::cout << simtap::oracle_report_json(params, sequences, similar, counter.passes,
                                                db.items())
                  << "\n";
    } else {
        std::cout << simtap::oracle_report_table(params, sequences, similar, counter.passes,
                                                 db.items());
    }
    return kExitOk;
}

int run_bench(const CommonOptions& common, const std::string& synthetic_text,
              const std::string& combiner_name) {
    std::optional<simtap::TemporalDatabase> db;
    simtap::ReportParameters params;
    if (!synthetic_text.empty()) {
        const simtap::SyntheticSpec spec = simtap::parse_synthetic_spec(synthetic_text);
        db.emplace(simtap::generate_synthetic_database(spec));
        params.synthetic = simtap::to_string(spec);
    } else {
        db.emplace(simtap::load_database_file(common.db_path, {common.with_tid}));
        params.db_path = common.db_path;
    }
    const simtap::ReferenceSequence ref =
        simtap::parse_reference(common.ref_text, db->slot_count());

    simtap::MinerConfig cfg;
    cfg.theta = common.theta;
    cfg.combiner = parse_combiner(combiner_name);
    cfg.mode = simtap::MiningMode::Paper;

    simtap::BenchReport report;
    const auto t0 = std::chrono::steady_clock::now();
    report.paper = simtap::mine(*db, ref, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    simtap::ScanCounter exact_counter;
    const auto t2 = std::chrono::steady_clock::now();
    report.exact_similar = simtap::exact_mine(*db, ref, common.theta, &exact_counter);
    const auto t3 = std::chrono::steady_clock::now();

    report.paper_wall_ms = elapsed_ms(t0, t1);
    report.exact_passes = exact_counter.passes;
    report.exact_wall_ms = elapsed_ms(t2, t3);
    report.diff = simtap::diff_similar_sets(report.paper.similar, report.exact_similar);

    params.reference = ref.values();
    params.theta = cfg.theta;
    params.mode = cfg.mode;
    params.combiner = cfg.combiner;
    params.epsilon = cfg.epsilon;
    report.params = params;

    if (common.output == "json") {
        std::cout << simtap::bench_report_json(report, db->items()) << "\n";
    } else {
        std::cout << simtap::bench_report_table(report, db->items());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mine temporal association patterns whose support sequence tracks a reference"};
    app.require_subcommand(1);

    const auto output_check = CLI::IsMember({"table", "json"});

    CommonOptions mine_opts;
    std::string mine_mode = "paper";
    std::string mine_combiner = "sum";
    CLI::App* mine_cmd =
        app.add_subcommand("mine", "single-scan bound-based mining against a reference sequence");
    mine_cmd->add_option("--db", mine_opts.db_path, "temporal database file")->required();
    mine_cmd->add_option("--ref", mine_opts.ref_text, "comma-separated reference sequence")
        ->required();
    mine_cmd->add_option("--theta", mine_opts.theta, "similarity threshold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    mine_cmd->add_option("--mode", mine_mode, "paper|exact")
        ->check(CLI::IsMember({"paper", "exact"}));
    mine_cmd->add_option("--combiner", mine_combiner, "sum|quad")
        ->check(CLI::IsMember({"sum", "quad"}));
    mine_cmd->add_option("--output", mine_opts.output, "table|json")->check(output_check);
    mine_cmd->add_flag("--with-tid", mine_opts.with_tid, "input has a leading transaction-id column");

    CommonOptions oracle_opts;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive exact mining (ground truth, multi-pass)");
    oracle_cmd->add_option("--db", oracle_opts.db_path, "temporal database file")->required();
    oracle_cmd->add_option("--ref", oracle_opts.ref_text, "comma-separated reference sequence")
        ->required();
    oracle_cmd->add_option("--theta", oracle_opts.theta, "similarity threshold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--output", oracle_opts.output, "table|json")->check(output_check);
    oracle_cmd->add_flag("--with-tid", oracle_opts.with_tid,
                         "input has a leading transaction-id column");

    CommonOptions bench_opts;
    std::string bench_synthetic;
    std::string bench_combiner = "sum";
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "compare the single-scan miner against the exhaustive oracle");
    auto* bench_db = bench_cmd->add_option("--db", bench_opts.db_path, "temporal database file");
    auto* bench_syn = bench_cmd->add_option(
        "--synthetic", bench_synthetic,
        "generator spec: items=<n>,slots=<m>,tx-per-slot=<k>,seed=<s>,density=<p>");
    bench_db->excludes(bench_syn);
    bench_cmd->add_option("--ref", bench_opts.ref_text, "comma-separated reference sequence")
        ->required();
    bench_cmd->add_option("--theta", bench_opts.theta, "similarity threshold")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--combiner", bench_combiner, "sum|quad")
        ->check(CLI::IsMember({"sum", "quad"}));
    bench_cmd->add_option("--output", bench_opts.output, "table|json")->check(output_check);
    bench_cmd->add_flag("--with-tid", bench_opts.with_tid,
                        "input has a leading transaction-id column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (mine_cmd->parsed()) {
            return run_mine(mine_opts, mine_mode, mine_combiner);
        }
        if (oracle_cmd->parsed()) {
            return run_oracle(oracle_opts);
        }
        if (bench_cmd->parsed()) {
            if (bench_synthetic.empty() && bench_opts.db_path.empty()) {
                std::cerr << "bench: either --db or --synthetic is required\n";
                return kExitInputError;
            }
            return run_bench(bench_opts, bench_synthetic, bench_combiner);
        }
    } catch (const simtap::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
