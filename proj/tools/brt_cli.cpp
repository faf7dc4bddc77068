#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brt/audit.hpp"
#include "brt/biased_range_tree.hpp"
#include "brt/io.hpp"
#include "brt/kd_baseline.hpp"
#include "brt/oracle.hpp"
#include "brt/scenarios.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("BRT_LOG");
    if (!env) return 1;
    std::string v(env);
    if (v == "off") return 0;
    if (v == "debug") return 2;
    return 1;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << msg << "\n";
}

struct QueryStats {
    double mean = 0.0;
    double p99 = 0.0;
    int max = 0;
    long long queries = 0;
};

// Weighted stats over (comparisons, weight) samples.
QueryStats summarize(std::vector<std::pair<int, double>>& samples) {
    QueryStats s;
    s.queries = static_cast<long long>(samples.size());
    if (samples.empty()) return s;
    double total_w = 0.0, total = 0.0;
    for (auto& [c, w] : samples) {
        total += c * w;
        total_w += w;
        s.max = std::max(s.max, c);
    }
    s.mean = total / total_w;
    std::sort(samples.begin(), samples.end());
    double cum = 0.0;
    s.p99 = samples.back().first;
    for (auto& [c, w] : samples) {
        cum += w;
        if (cum >= 0.99 * total_w) {
            s.p99 = c;
            break;
        }
    }
    return s;
}

struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_gen(const std::string& scenario, int n, std::uint64_t seed, const std::string& out_points,
            const std::string& out_measure) {
    brt::Scenario s = brt::make_scenario(scenario, n, seed);
    brt::write_points_csv(out_points, s.points);
    brt::write_measure_json(out_measure, s.measure);
    log_info("gen: " + scenario + " n=" + std::to_string(s.points.size()) + " -> " + out_points + ", " +
             out_measure);
    return 0;
}

int run_bench(const std::string& points_path, const std::string& measure_path,
              const std::vector<std::string>& structures, long long queries, std::uint64_t seed,
              const std::string& out_path, bool verify, const std::string& label) {
    auto points = brt::read_points_csv(points_path);
    brt::Measure m = brt::read_measure_json(measure_path);
    auto v = m.validate();
    if (!v.ok) throw std::runtime_error("invalid measure: " + v.issue);

    const bool exact = queries == 0;
    if (exact && !m.is_discrete())
        throw std::runtime_error("--queries 0 (exact enumeration) requires a discrete measure");

    std::vector<std::pair<brt::Point, double>> qs;
    if (exact) {
        for (const auto& a : m.discrete().atoms) qs.emplace_back(a.p, a.mass);
    } else {
        for (long long i = 0; i < queries; ++i)
            qs.emplace_back(m.sample(seed, static_cast<std::uint64_t>(i)), 1.0);
    }

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "structure,scenario,n,queries,mean_comparisons,p99_comparisons,max_comparisons,"
           "space_entries,build_millis,seed\n";

    for (const auto& name : structures) {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        std::function<std::pair<int, int>(const brt::Point&)> run;
        std::size_t space = 0;

        brt::BiasedRangeTree bt;
        brt::BackupTree backup;
        brt::KdBaseline kd;
        if (name == "brt") {
            bt = brt::BiasedRangeTree::build(points, m);
            space = static_cast<std::size_t>(bt.stats().total_space_entries);
            run = [&bt](const brt::Point& q) {
                auto r = bt.count(q);
                return std::make_pair(r.count, r.comparisons);
            };
        } else if (name == "backup") {
            backup = brt::BackupTree::build(points);
            space = backup.total_entries();
            run = [&backup](const brt::Point& q) {
                auto r = backup.count(q);
                return std::make_pair(r.count, r.comparisons);
            };
        } else if (name == "kd") {
            kd = brt::KdBaseline(std::make_shared<brt::PrimaryTree>(brt::PrimaryTree::build(points, m)));
            space = kd.total_entries();
            run = [&kd](const brt::Point& q) {
                auto r = kd.count(q);
                return std::make_pair(r.count, r.comparisons);
            };
        } else {
            throw CLI::ValidationError("--structures", "unknown structure \"" + name + "\"");
        }
        double build_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();

        std::vector<std::pair<int, double>> samples;
        samples.reserve(qs.size());
        for (const auto& [q, w] : qs) {
            auto [cnt, comps] = run(q);
            if (verify && cnt != brt::brute_count(points, q)) {
                std::ostringstream msg;
                msg << name << ": count mismatch at query (" << q.x << ", " << q.y << ")";
                throw MismatchError(msg.str());
            }
            samples.emplace_back(comps, w);
        }
        QueryStats st = summarize(samples);
        char row[256];
        std::snprintf(row, sizeof(row), "%s,%s,%zu,%lld,%.6f,%.6f,%d,%zu,%.3f,%llu\n", name.c_str(),
                      label.c_str(), points.size(), st.queries, st.mean, st.p99, st.max, space, build_ms,
                      static_cast<unsigned long long>(seed));
        out << row;
        log_info(std::string("bench: ") + name + " mean=" + std::to_string(st.mean) +
                 " max=" + std::to_string(st.max));
    }
    return 0;
}

int run_oracle(const std::string& points_path, const std::string& measure_path,
               const std::string& out_path) {
    auto points = brt::read_points_csv(points_path);
    brt::Measure m = brt::read_measure_json(measure_path);
    auto v = m.validate();
    if (!v.ok) throw std::runtime_error("invalid measure: " + v.issue);
    if (!m.is_discrete()) throw std::runtime_error("oracle requires a discrete measure");

    double opt = brt::optimal_expected_cost(points, m.discrete());
    double fe = brt::face_entropy(points, m.discrete());
    brt::BiasedRangeTree t = brt::BiasedRangeTree::build(points, m);
    double cost = t.expected_cost_exact(m);
    double ratio = cost / std::max(opt, 1.0);

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "opt_cost,face_entropy,brt_cost,ratio\n";
    char row[160];
    std::snprintf(row, sizeof(row), "%.9f,%.9f,%.9f,%.9f\n", opt, fe, cost, ratio);
    out << row;
    log_info("oracle: opt=" + std::to_string(opt) + " brt=" + std::to_string(cost));
    return 0;
}

int run_invariants(const std::string& points_path, const std::string& measure_path, std::uint64_t seed,
                   const std::string& dump_path) {
    auto points = brt::read_points_csv(points_path);
    brt::Measure m = brt::read_measure_json(measure_path);
    auto v = m.validate();
    if (!v.ok) throw std::runtime_error("invalid measure: " + v.issue);

    brt::BiasedRangeTree t = brt::BiasedRangeTree::build(points, m);
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::runtime_error("cannot write " + dump_path);
        dump << t.primary().dump_json();
    }

    brt::AuditReport rep = brt::audit_structure(t);
    auto queries = brt::make_audit_queries(t, 2000, seed);
    rep.merge(brt::audit_queries(t, queries));

    log_info("invariants: " + std::to_string(rep.checks) + " checks, " +
             std::to_string(rep.failures.size()) + " failures");
    if (log_level() >= 2)
        std::cerr << "invariants: n=" << points.size() << " space=" << t.stats().total_space_entries
                  << " depth_cap=" << t.primary().depth_cap() << "\n";
    for (const auto& f : rep.failures) std::cerr << "audit failure: " << f << "\n";
    if (!rep.ok) {
        std::cout << "FAIL\n";
        return 1;
    }
    std::cout << "OK\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"biased range tree benchmark harness"};
    app.require_subcommand(1);

    std::string scenario = "uniform", points_path, measure_path, out_path, dump_path, label;
    std::vector<std::string> structures = {"brt", "backup", "kd"};
    int n = 100;
    long long queries = 1000;
    std::uint64_t seed = 1;
    bool verify = false;

    auto* gen = app.add_subcommand("gen", "generate a points CSV and a measure JSON");
    gen->add_option("--scenario", scenario, "one of: uniform, clustered, staircase, far_corner, grid")
        ->required();
    gen->add_option("--n", n, "number of points")->required();
    gen->add_option("--seed", seed, "random seed");
    std::string out_points, out_measure;
    gen->add_option("--out-points", out_points, "output points CSV")->required();
    gen->add_option("--out-measure", out_measure, "output measure JSON")->required();

    auto* bench = app.add_subcommand("bench", "benchmark structures, write a CSV of comparison counts");
    bench->add_option("--points", points_path)->required();
    bench->add_option("--measure", measure_path)->required();
    bench->add_option("--structures", structures, "subset of: brt, backup, kd")->delimiter(',');
    bench->add_option("--queries", queries, "query count; 0 = enumerate discrete atoms exactly");
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_path)->required();
    bench->add_option("--scenario", label, "scenario label for the CSV");
    bench->add_flag("--verify", verify, "cross-check every count against brute force");

    auto* oracle = app.add_subcommand("oracle", "exact optimal-tree cost vs the built structure");
    oracle->add_option("--points", points_path)->required();
    oracle->add_option("--measure", measure_path)->required();
    oracle->add_option("--out", out_path)->required();

    auto* invariants = app.add_subcommand("invariants", "run every structural and query audit");
    invariants->add_option("--points", points_path)->required();
    invariants->add_option("--measure", measure_path)->required();
    invariants->add_option("--seed", seed);
    invariants->add_option("--dump-tree", dump_path, "write the primary tree dump JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(scenario, n, seed, out_points, out_measure);
        if (bench->parsed()) {
            if (label.empty()) label = "custom";
            return run_bench(points_path, measure_path, structures, queries, seed, out_path, verify, label);
        }
        if (oracle->parsed()) return run_oracle(points_path, measure_path, out_path);
        if (invariants->parsed()) return run_invariants(points_path, measure_path, seed, dump_path);
    } catch (const MismatchError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
