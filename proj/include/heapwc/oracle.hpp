#pragma once

#include "heapwc/heap.hpp"

#include <string>
#include <vector>

// Brute-force ground truth at desk scale: exhaustive permutation search,
// exhaustive heap enumeration through the pull-down game tree, and the
// worst-case-heap set under the minimal-loss criterion. Size ceilings keep
// every run to seconds or a few minutes.

namespace heapwc {

struct OracleReport {
    long long N = 0;
    long long max_count = 0;
    std::vector<int> witness; // one extremal input
    long long formula_value = 0;
    bool agrees = false;
};

enum class Phase { makeheap, heapsort };

inline constexpr long long perm_worst_ceiling = 9;
inline constexpr long long heap_worst_ceiling = 11;
inline constexpr long long worstcase_enum_ceiling = 15;

// max comparisons over all N! permutations vs the phase's closed form
OracleReport perm_worst(long long N, Phase phase);

// max RemoveAll comparisons over all heaps on N nodes (game-tree enumeration)
OracleReport heap_worst_removeall(long long N);

// every heap on N nodes, via all valid pull-down sequences
std::vector<Heap> enumerate_heaps(long long N);

// number of pull-down sequences reaching size N (equals the heap count when
// the enumeration is duplicate-free)
long long count_pull_sequences(long long N);

// all heaps on N nodes whose creative sequence attains the minimum possible
// accumulated loss sum_lambda_star(N-1); exactly the worst-case heaps
std::vector<Heap> enumerate_worstcase_heaps(long long N);

// true iff no worst-case heap on N nodes admits a zero-loss move;
// N must be of the form 2^k - 4, k >= 4
bool singularity_check(long long N);

// true iff no complete worst-case heap on M = 2^(K+1)-1 nodes admits more
// than M-2 consecutive zero-loss pull downs; also reports the longest run
struct LosslessRunReport {
    long long M = 0;
    long long max_run = 0;
    bool within_bound = false;
};
LosslessRunReport lossless_run_check(int K);

// length of the longest chain of zero-loss valid pull downs starting at h
long long longest_lossless_run(const Heap& h);

// max RemoveMax comparisons over all heaps of size N equals
// floor_lg(N-1) + floor_lg(N-2); 3 <= N <= 11
bool removemax_max_check(long long N);

} // namespace heapwc
