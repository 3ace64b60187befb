#include "heapwc/hereditary.hpp"

#include "heapwc/formulas.hpp"
#include "heapwc/game.hpp"
#include "heapwc/inverse.hpp"

#include <algorithm>

namespace heapwc {

namespace {

void walk_greedy(Heap& h, std::vector<int>& pulls, HereditaryCensus& census) {
    census.heaps.push_back({h, pulls});
    int n = h.size();
    long long want = n >= 2 ? lambda_star(n) : 0;
    for (int k = 1; k <= n; ++k) {
        if (!unremovemax_valid(h, k))
            continue;
        long long cost = n >= 2 ? loss(n, k) : 0;
        if (cost != want)
            continue;
        // when a loss is unavoidable, the canonical schedule takes the pull
        // at the last index; the census counts the heaps this tree reaches
        if (want == 1 && k != n)
            continue;
        Heap g = unremovemax(h, k);
        pulls.push_back(h[k]);
        walk_greedy(g, pulls, census);
        pulls.pop_back();
    }
}

} // namespace

HereditaryCensus enumerate_hereditary() {
    HereditaryCensus census;
    Heap one(std::vector<int>{1});
    std::vector<int> pulls;
    walk_greedy(one, pulls, census);
    census.count = (long long)census.heaps.size();
    for (const CensusEntry& entry : census.heaps) {
        long long n = entry.heap.size();
        census.max_size = std::max(census.max_size, n);
        ++census.per_size_counts[n];
    }
    return census;
}

bool is_hereditary(const Heap& h) {
    GameLog log = play(Heap(std::vector<int>{1}), creative_sequence(h));
    for (const MoveRecord& rec : log.records) {
        long long want = rec.size_before >= 2 ? lambda_star(rec.size_before) : 0;
        if (rec.loss != want)
            return false;
    }
    return true;
}

} // namespace heapwc
