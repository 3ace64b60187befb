// Command-line front end: worst-case input generation, formula verification
// sweeps, game traces, brute-force oracle runs, and the hereditary census.

#include "heapwc/formulas.hpp"
#include "heapwc/game.hpp"
#include "heapwc/hereditary.hpp"
#include "heapwc/inverse.hpp"
#include "heapwc/oracle.hpp"
#include "heapwc/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace heapwc;
using nlohmann::json;

Heap win_heap(long long N) {
    return play(Heap(std::vector<int>{1}), strategy_win(N)).final_heap;
}

std::string join_csv(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

// 0 on success, 1 on I/O failure
int write_output(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return 0;
    }
    std::ofstream out(path);
    out << body;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

int cmd_gen(const std::string& kind, long long N, const std::string& out_path,
            const std::string& format) {
    Heap h = win_heap(N);
    std::vector<int> values = kind == "heap" ? h.a : gen_makeheap_worst(h);
    std::string body;
    if (format == "json") {
        json doc{{"n", N}, {"values", values}};
        body = doc.dump() + "\n";
    } else {
        body = join_csv(values) + "\n";
    }
    return write_output(out_path, body);
}

struct SweepRow {
    long long N = 0;
    long long makeheap_measured = 0, makeheap_formula = 0;
    long long removeall_measured = 0, removeall_formula = 0;
    long long total_measured = 0, total_formula = 0;
    bool match = false;
};

SweepRow sweep_one(long long N) {
    SweepRow row;
    row.N = N;
    HeapsortRun run = heapsort(gen_makeheap_worst(win_heap(N)));
    row.makeheap_measured = run.makeheap_comparisons;
    row.removeall_measured = run.removeall_comparisons;
    row.total_measured = run.comparisons;
    row.makeheap_formula = makeheap_max(N);
    row.removeall_formula = removeall_max(N);
    row.total_formula = heapsort_max(N);
    row.match = row.makeheap_measured == row.makeheap_formula &&
                row.removeall_measured == row.removeall_formula &&
                row.total_measured == row.total_formula;
    return row;
}

int cmd_verify(long long from, long long to, const std::string& out_path,
               int jobs) {
    std::vector<SweepRow> rows(to - from + 1);
    std::atomic<long long> next{from};
    auto worker = [&] {
        for (;;) {
            long long N = next.fetch_add(1);
            if (N > to)
                return;
            rows[N - from] = sweep_one(N);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    std::ostringstream csv;
    csv << "N,makeheap_measured,makeheap_formula,removeall_measured,"
           "removeall_formula,total_measured,total_formula,match\n";
    long long first_bad = 0;
    for (const SweepRow& row : rows) {
        csv << row.N << ',' << row.makeheap_measured << ','
            << row.makeheap_formula << ',' << row.removeall_measured << ','
            << row.removeall_formula << ',' << row.total_measured << ','
            << row.total_formula << ',' << (row.match ? "true" : "false")
            << '\n';
        if (!row.match && first_bad == 0)
            first_bad = row.N;
    }
    if (int rc = write_output(out_path, csv.str()))
        return rc;
    if (first_bad) {
        std::cerr << "mismatch at N=" << first_bad << "\n";
        return 1;
    }
    return 0;
}

int cmd_trace(long long N, const std::string& strategy) {
    std::vector<int> pulls =
        strategy == "par" ? strategy_par(N) : strategy_win(N);
    Heap h(std::vector<int>{1});
    std::cout << render_heap(h);
    std::vector<long long> moves;
    for (size_t t = 0; t < pulls.size(); ++t) {
        GameLog step = play(h, {pulls[t]});
        moves.push_back(step.records[0].move_index);
        std::cout << "\nH[" << step.records[0].move_index << "] -> H["
                  << h.size() + 1 << "]\n\n";
        h = step.final_heap;
        std::cout << render_heap(h);
    }
    auto list = [](const auto& xs) {
        std::string s = "<";
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i)
                s += ", ";
            s += std::to_string(xs[i]);
        }
        return s + ">";
    };
    std::string name =
        strategy == "par" ? "par" : "win(" + std::to_string(N) + ")";
    std::cout << "\nThe strategy was the first " << pulls.size()
              << " pull downs of " << name << ": \n"
              << list(pulls) << "\n\nMove indices: \n"
              << list(moves) << "\n";
    return 0;
}

int cmd_oracle(long long N, const std::string& target) {
    auto show = [](const char* what, const OracleReport& report) {
        std::cout << what << " N=" << report.N << " max=" << report.max_count
                  << " formula=" << report.formula_value
                  << (report.agrees ? " agrees" : " DISAGREES") << "\n";
        return report.agrees ? 0 : 1;
    };
    if (target == "perm") {
        int rc = show("makeheap", perm_worst(N, Phase::makeheap));
        return rc | show("heapsort", perm_worst(N, Phase::heapsort));
    }
    if (target == "heap")
        return show("removeall", heap_worst_removeall(N));
    if (target == "worstset") {
        std::vector<Heap> heaps = enumerate_worstcase_heaps(N);
        bool ok = !heaps.empty();
        for (const Heap& h : heaps)
            ok = ok && removeall(h).comparisons == removeall_max(N);
        std::cout << "worstset N=" << N << " count=" << heaps.size()
                  << (ok ? " agrees" : " DISAGREES") << "\n";
        return ok ? 0 : 1;
    }
    // singularity
    bool ok = singularity_check(N);
    std::cout << "singularity N=" << N << " holds=" << (ok ? "true" : "false")
              << "\n";
    return ok ? 0 : 1;
}

int cmd_census(const std::string& out_path) {
    HereditaryCensus census = enumerate_hereditary();
    json doc;
    doc["count"] = census.count;
    doc["max_size"] = census.max_size;
    json sizes = json::object();
    for (auto [n, count] : census.per_size_counts)
        sizes[std::to_string(n)] = count;
    doc["per_size_counts"] = sizes;
    json heaps = json::array();
    for (const CensusEntry& entry : census.heaps)
        heaps.push_back(
            {{"n", entry.heap.size()}, {"values", entry.heap.a},
             {"pulls", entry.pulls}});
    doc["heaps"] = heaps;
    return write_output(out_path, doc.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"worst-case input toolkit for Heapsort"};
    app.require_subcommand(1);

    std::string kind, format = "text", out_path, strategy, target;
    long long n = 0, from = 0, to = 0;
    int jobs = 1;

    CLI::App* gen = app.add_subcommand("gen", "write a worst-case input");
    gen->add_option("kind", kind, "heap or array")
        ->required()
        ->check(CLI::IsMember({"heap", "array"}));
    gen->add_option("N", n, "input size")->required()->check(CLI::Range(2LL, (1LL << 40)));
    gen->add_option("--out", out_path, "output file (default stdout)");
    gen->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "formula sweep");
    verify->add_option("from", from, "first N")->required()->check(CLI::Range(2LL, (1LL << 40)));
    verify->add_option("to", to, "last N")->required()->check(CLI::Range(2LL, (1LL << 40)));
    verify->add_option("--out", out_path, "CSV file (default stdout)");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 1024));

    CLI::App* trace = app.add_subcommand("trace", "level-by-level game trace");
    trace->add_option("N", n, "heap size")->required()->check(CLI::Range(2LL, 100000LL));
    trace->add_option("strategy", strategy, "par or win")
        ->required()
        ->check(CLI::IsMember({"par", "win"}));

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->add_option("N", n, "size")->required();
    oracle->add_option("target", target, "perm, heap, worstset or singularity")
        ->required()
        ->check(CLI::IsMember({"perm", "heap", "worstset", "singularity"}));

    CLI::App* census = app.add_subcommand("census", "hereditary worst-case heaps");
    census->add_option("--out", out_path, "JSON file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(kind, n, out_path, format);
        if (verify->parsed()) {
            if (from > to) {
                std::cerr << "error: bad range\n";
                return 2;
            }
            return cmd_verify(from, to, out_path, jobs);
        }
        if (trace->parsed())
            return cmd_trace(n, strategy);
        if (oracle->parsed())
            return cmd_oracle(n, target);
        if (census->parsed())
            return cmd_census(out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
