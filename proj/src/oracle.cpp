#include "heapwc/oracle.hpp"

#include "heapwc/bitmath.hpp"
#include "heapwc/formulas.hpp"
#include "heapwc/game.hpp"
#include "heapwc/inverse.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace heapwc {

namespace {

template <typename Visit>
void walk_heaps(Heap& h, long long N, Visit&& visit) {
    if (h.size() == (int)N) {
        visit(h);
        return;
    }
    int n = h.size();
    for (int k = 1; k <= n; ++k) {
        if (!unremovemax_valid(h, k))
            continue;
        Heap g = unremovemax(h, k);
        walk_heaps(g, N, visit);
    }
}

template <typename Visit>
void for_each_heap(long long N, Visit&& visit) {
    if (N < 1)
        throw std::invalid_argument("heap enumeration: need N >= 1");
    Heap one(std::vector<int>{1});
    walk_heaps(one, N, visit);
}

} // namespace

OracleReport perm_worst(long long N, Phase phase) {
    if (N < 2 || N > perm_worst_ceiling)
        throw std::invalid_argument("perm_worst: N out of range");
    OracleReport report;
    report.N = N;
    report.formula_value =
        phase == Phase::makeheap ? makeheap_max(N) : heapsort_max(N);
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        long long count = phase == Phase::makeheap
                              ? makeheap(perm).comparisons
                              : heapsort(perm).comparisons;
        if (count > report.max_count) {
            report.max_count = count;
            report.witness = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    report.agrees = report.max_count == report.formula_value;
    return report;
}

OracleReport heap_worst_removeall(long long N) {
    if (N < 2 || N > heap_worst_ceiling)
        throw std::invalid_argument("heap_worst_removeall: N out of range");
    OracleReport report;
    report.N = N;
    report.formula_value = removeall_max(N);
    for_each_heap(N, [&](const Heap& h) {
        long long count = removeall(h).comparisons;
        if (count > report.max_count) {
            report.max_count = count;
            report.witness = h.a;
        }
    });
    report.agrees = report.max_count == report.formula_value;
    return report;
}

std::vector<Heap> enumerate_heaps(long long N) {
    if (N > worstcase_enum_ceiling)
        throw std::invalid_argument("enumerate_heaps: N out of range");
    std::vector<Heap> heaps;
    for_each_heap(N, [&](const Heap& h) { heaps.push_back(h); });
    return heaps;
}

long long count_pull_sequences(long long N) {
    if (N > worstcase_enum_ceiling)
        throw std::invalid_argument("count_pull_sequences: N out of range");
    long long count = 0;
    for_each_heap(N, [&](const Heap&) { ++count; });
    return count;
}

namespace {

void walk_worstcase(Heap& h, long long N, long long budget,
                    std::vector<Heap>& out) {
    if (h.size() == (int)N) {
        if (budget == 0)
            out.push_back(h);
        return;
    }
    int n = h.size();
    for (int k = 1; k <= n; ++k) {
        if (!unremovemax_valid(h, k))
            continue;
        long long cost = n >= 2 ? loss(n, k) : 0;
        if (cost > budget)
            continue;
        Heap g = unremovemax(h, k);
        walk_worstcase(g, N, budget - cost, out);
    }
}

} // namespace

std::vector<Heap> enumerate_worstcase_heaps(long long N) {
    if (N < 1 || N > worstcase_enum_ceiling)
        throw std::invalid_argument("enumerate_worstcase_heaps: N out of range");
    std::vector<Heap> out;
    if (N == 1) {
        out.emplace_back(std::vector<int>{1});
        return out;
    }
    Heap one(std::vector<int>{1});
    walk_worstcase(one, N, sum_lambda_star(N - 1), out);
    return out;
}

bool singularity_check(long long N) {
    if (N < 12 || N != (1LL << ceil_lg((u64)N)) - 4)
        throw std::invalid_argument(
            "singularity_check: N must be 2^k - 4 with k >= 4");
    if (N > worstcase_enum_ceiling)
        throw std::invalid_argument("singularity_check: N out of range");
    for (const Heap& h : enumerate_worstcase_heaps(N)) {
        for (int k = 1; k <= h.size(); ++k)
            if (unremovemax_valid(h, k) && loss(h.size(), k) == 0)
                return false;
    }
    return true;
}

long long longest_lossless_run(const Heap& h) {
    long long best = 0;
    int n = h.size();
    for (int k = 1; k <= n; ++k) {
        if (!unremovemax_valid(h, k) || loss(n, k) != 0)
            continue;
        Heap g = unremovemax(h, k);
        best = std::max(best, 1 + longest_lossless_run(g));
    }
    return best;
}

LosslessRunReport lossless_run_check(int K) {
    long long M = (1LL << (K + 1)) - 1;
    if (M < 7 || M > 15)
        throw std::invalid_argument("lossless_run_check: level out of range");
    LosslessRunReport report;
    report.M = M;
    for (const Heap& h : enumerate_worstcase_heaps(M))
        report.max_run = std::max(report.max_run, longest_lossless_run(h));
    report.within_bound = report.max_run <= M - 2;
    return report;
}

bool removemax_max_check(long long N) {
    if (N < 3 || N > heap_worst_ceiling)
        throw std::invalid_argument("removemax_max_check: N out of range");
    long long best = 0;
    for_each_heap(N, [&](const Heap& h) {
        best = std::max(best, removemax(h).comparisons);
    });
    return best == floor_lg((u64)(N - 1)) + floor_lg((u64)(N - 2));
}

} // namespace heapwc
