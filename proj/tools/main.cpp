#include <algorithm>
#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "twinwidth/errors.hpp"
#include "twinwidth/exact.hpp"
#include "twinwidth/heuristic.hpp"
#include "twinwidth/oracle.hpp"
#include "twinwidth/pace_io.hpp"
#include "twinwidth/preprocess.hpp"
#include "twinwidth/verifier.hpp"

namespace {

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true, std::memory_order_relaxed); }

struct Options {
    std::string input;    // empty or "-": standard input
    std::string solution; // verify mode
    std::string dir;      // bench mode
    std::string csv;      // bench mode; empty: standard output
    double time_limit = 1800.0;
    std::uint64_t seed = 1;
    double lb_budget = 0.1;
    std::size_t memory_cap = std::size_t{8} * 1024 * 1024 * 1024;
    bool emit_width = false;
    std::uint32_t oracle_cap = 8;
    std::uint64_t hc_rounds = 64;
    std::uint32_t hc_batch = 32;
    bool bench_heuristic = false;
    bool ha_report = false;
};

std::string slurp(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

tww::Instance load_instance(const std::string& path) {
    if (path.empty() || path == "-")
        return tww::parse_instance(slurp(std::cin), "<stdin>");
    std::ifstream f(path);
    if (!f)
        throw tww::error("cannot open " + path);
    return tww::parse_instance(f, std::filesystem::path(path).stem().string());
}

// External limits are enforced by killing the process; stay 5% short so the
// final output always lands.
tww::Budget make_budget(double time_limit) {
    tww::Budget b = tww::Budget::seconds(time_limit * 0.95);
    b.bind_stop(&g_stop);
    return b;
}

tww::SolveConfig make_config(const Options& o) {
    tww::SolveConfig cfg;
    cfg.seed = o.seed;
    cfg.budget = make_budget(o.time_limit);
    cfg.lb_budget_fraction = o.lb_budget;
    cfg.memory_cap = o.memory_cap;
    cfg.hc_rounds = o.hc_rounds;
    cfg.hc_batch = o.hc_batch;
    return cfg;
}

tww::HeuristicSolution heuristic_pipeline(const tww::Instance& inst, const Options& o,
                                          const tww::Budget& budget) {
    tww::PerturbParams params;
    params.batch_size = o.hc_batch;
    params.rng_seed = o.seed;
    params.max_rounds = o.hc_rounds;
    params.budget = budget;
    return tww::solve_heuristic(inst, params);
}

int run_exact(const Options& o) {
    const tww::Instance inst = load_instance(o.input);
    const tww::SolveResult res = tww::solve_exact(inst, make_config(o));
    std::cout << tww::render_sequence(res.seq);
    std::cout.flush();
    if (o.emit_width)
        std::cerr << "width " << res.width << " stage " << res.stage << "\n";
    return 0;
}

int run_heuristic(const Options& o) {
    const tww::Instance inst = load_instance(o.input);
    const tww::HeuristicSolution out = heuristic_pipeline(inst, o, make_budget(o.time_limit));
    std::cout << tww::render_sequence(out.seq);
    std::cout.flush();
    if (o.emit_width)
        std::cerr << "width " << out.width << "\n";
    return 0;
}

int run_verify(const Options& o) {
    const tww::Instance inst = load_instance(o.input);
    tww::ContractionSequence seq;
    if (!o.solution.empty()) {
        std::ifstream f(o.solution);
        if (!f)
            throw tww::error("cannot open " + o.solution);
        seq = tww::parse_sequence(f, inst.n);
    } else {
        if (o.input.empty() || o.input == "-")
            throw tww::error("verify needs --solution when the instance comes from stdin");
        seq = tww::parse_sequence(slurp(std::cin), inst.n);
    }
    const tww::WidthReport report = tww::verify_sequence(inst, seq);
    std::cout << report.width << "\n";
    return 0;
}

int run_oracle(const Options& o) {
    const tww::Instance inst = load_instance(o.input);
    const tww::OracleResult res = tww::oracle_twinwidth(inst, o.oracle_cap);
    std::cout << res.width << "\n" << tww::render_sequence(res.witness);
    return 0;
}

int run_bench(const Options& o) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir))
        if (entry.is_regular_file() && entry.path().extension() == ".gr")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw tww::error("no .gr instances under " + o.dir);

    std::ofstream csv_file;
    std::ostream* csv = &std::cout;
    if (!o.csv.empty()) {
        csv_file.open(o.csv);
        if (!csv_file)
            throw tww::error("cannot open " + o.csv);
        csv = &csv_file;
    }
    *csv << "name,n,m,width,optimal,elapsed_ms,stage\n";

    std::size_t ha_known = 0, ha_optimal = 0;
    for (const auto& path : files) {
        std::ifstream f(path);
        if (!f)
            throw tww::error("cannot open " + path.string());
        const tww::Instance inst = tww::parse_instance(f, path.stem().string());

        const auto t0 = std::chrono::steady_clock::now();
        std::uint32_t width = 0;
        tww::ContractionSequence seq;
        bool optimal = false;
        std::string stage;
        if (o.bench_heuristic) {
            const tww::HeuristicSolution out =
                heuristic_pipeline(inst, o, make_budget(o.time_limit));
            width = out.width;
            seq = out.seq;
            stage = "heuristic";
        } else {
            try {
                const tww::SolveResult res = tww::solve_exact(inst, make_config(o));
                width = res.width;
                seq = res.seq;
                optimal = true;
                stage = res.stage;
            } catch (const tww::resource_error& e) {
                std::cerr << inst.source_name << ": " << e.what()
                          << "; falling back to the heuristic\n";
                const tww::HeuristicSolution out =
                    heuristic_pipeline(inst, o, make_budget(30.0));
                width = out.width;
                seq = out.seq;
                stage = "heuristic";
            }
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - t0)
                                 .count();

        const tww::WidthReport check = tww::verify_sequence(inst, seq);
        if (check.width != width) {
            std::cerr << inst.source_name << ": internal verification failed (replayed "
                      << check.width << ", reported " << width << ")\n";
            return 1;
        }

        if (o.ha_report && optimal) {
            const tww::HeuristicSolution ha =
                heuristic_pipeline(inst, o, make_budget(o.time_limit));
            ++ha_known;
            if (ha.width == width)
                ++ha_optimal;
        }

        *csv << inst.source_name << ',' << inst.n << ',' << inst.edges.size() << ','
             << width << ',' << (optimal ? "true" : "false") << ',' << elapsed << ','
             << stage << '\n';
    }
    if (o.ha_report && ha_known > 0)
        std::cerr << "ha-optimal " << ha_optimal << "/" << ha_known << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGTERM, on_signal);
    std::signal(SIGINT, on_signal);

    CLI::App app{"twin-width solver suite"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, const char* limit_note, const char* rounds_note) {
        sub->add_option("--input", o.input, "instance path; '-' or omitted: stdin");
        sub->add_option("--time-limit", o.time_limit,
                        std::string("wall-clock budget in seconds (default ") + limit_note + ")")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--lb-budget", o.lb_budget,
                        "fraction of the budget spent on lower bounds")
            ->check(CLI::Range(0.0, 0.5));
        sub->add_option("--memory-cap", o.memory_cap, "state memory cap in bytes");
        sub->add_option("--hc-rounds", o.hc_rounds,
                        std::string("hill-climbing batches per component (default ") +
                            rounds_note + ")");
        sub->add_option("--hc-batch", o.hc_batch, "derived solutions per batch");
    };

    CLI::App* exact = app.add_subcommand("exact", "prove the twin-width");
    add_common(exact, "1800", "64");
    exact->add_flag("--emit-width", o.emit_width, "report the width on stderr");

    CLI::App* heur = app.add_subcommand("heuristic", "best-effort within the budget");
    add_common(heur, "300", "budget-bound");
    heur->add_flag("--emit-width", o.emit_width, "report the width on stderr");

    CLI::App* verify = app.add_subcommand("verify", "replay a sequence and print its width");
    verify->add_option("--input", o.input, "instance path; '-' or omitted: stdin");
    verify->add_option("--solution", o.solution, "sequence path; omitted: stdin");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force width and witness");
    oracle->add_option("--input", o.input, "instance path; '-' or omitted: stdin");
    oracle->add_option("--oracle-cap", o.oracle_cap, "max vertices the oracle accepts");

    CLI::App* bench = app.add_subcommand("bench", "solve a directory of instances");
    add_common(bench, "1800", "64");
    bench->add_option("--dir", o.dir, "directory of .gr instances")->required();
    bench->add_option("--csv", o.csv, "CSV output path; omitted: stdout");
    bench->add_flag("--heuristic", o.bench_heuristic, "run the heuristic track");
    bench->add_flag("--ha-report", o.ha_report,
                    "report how often the heuristic matches the exact width");

    CLI11_PARSE(app, argc, argv);

    // Mode-dependent defaults; the option objects share one Options struct, so
    // they are resolved here rather than per-subcommand at definition time.
    if (heur->parsed()) {
        if (heur->count("--time-limit") == 0)
            o.time_limit = 300.0;
        if (heur->count("--hc-rounds") == 0)
            o.hc_rounds = std::uint64_t{1} << 62;
    }

    try {
        if (exact->parsed())
            return run_exact(o);
        if (heur->parsed())
            return run_heuristic(o);
        if (verify->parsed())
            return run_verify(o);
        if (oracle->parsed())
            return run_oracle(o);
        if (bench->parsed())
            return run_bench(o);
    } catch (const tww::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const tww::verify_error& e) {
        std::cerr << "invalid sequence: " << e.what() << "\n";
        return 1;
    } catch (const tww::resource_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
