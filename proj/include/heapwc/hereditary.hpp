#pragma once

#include "heapwc/heap.hpp"

#include <map>
#include <vector>

// Heaps that stay worst-case under every removal: their creative sequences
// lose exactly the minimum possible at every single move. The greedy tree of
// such sequences is finite; walking it yields the complete census.

namespace heapwc {

struct CensusEntry {
    Heap heap;
    std::vector<int> pulls; // its creative sequence
};

struct HereditaryCensus {
    std::vector<CensusEntry> heaps;
    long long count = 0;
    long long max_size = 0;
    std::map<long long, long long> per_size_counts;
};

// every heap (all sizes >= 1) whose creative sequence has per-move loss equal
// to lambda_star at that move
HereditaryCensus enumerate_hereditary();

bool is_hereditary(const Heap& h);

} // namespace heapwc
