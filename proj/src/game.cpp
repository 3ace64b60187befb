#include "heapwc/game.hpp"

#include "heapwc/bitmath.hpp"
#include "heapwc/inverse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace heapwc {

long long credit(long long i, long long k) {
    if (i == 1 && k == 1)
        return 0;
    if (i == 2 && k == 1) // the root itself is a legal patch at size 2
        return 1;
    if (i < 1 || k < 2 || k > i)
        throw std::invalid_argument("credit: need 2 <= k <= i");
    return 2 * (floor_lg((u64)k) - 1) + num_children((u64)(k / 2), (u64)i) +
           num_children((u64)k, (u64)i);
}

long long cr_max(long long i) {
    if (i < 2)
        throw std::invalid_argument("cr_max: need i >= 2");
    return floor_lg((u64)i) + floor_lg((u64)(i - 1));
}

long long loss(long long i, long long k) {
    if (i == 1 && k == 1)
        return 0;
    return cr_max(i) - credit(i, k);
}

bool is_lossless(long long N, long long k) {
    long long top = 1LL << floor_lg((u64)N); // first index of the last level
    if (k == top || 2 * k == top)
        return true;
    if (k >= top && 2 * (k / 2) < N) // last-level node with a sibling
        return true;
    if (2 * k >= top && 2 * k < N) // parent of such a node
        return true;
    return false;
}

GameLog play(const Heap& start, const std::vector<int>& pulls) {
    GameLog log;
    log.final_heap = start;
    log.records.reserve(pulls.size());
    for (size_t t = 0; t < pulls.size(); ++t) {
        const Heap& h = log.final_heap;
        int n = h.size();
        auto it = std::find(h.a.begin(), h.a.end(), pulls[t]);
        if (it == h.a.end())
            throw std::invalid_argument("play: invalid pull at position " +
                                        std::to_string(t + 1) +
                                        " (value not present)");
        int k = (int)(it - h.a.begin()) + 1;
        if (!unremovemax_valid(h, k))
            throw std::invalid_argument("play: invalid pull at position " +
                                        std::to_string(t + 1));
        MoveRecord rec;
        rec.size_before = n;
        rec.move_index = k;
        rec.pull_value = pulls[t];
        rec.credit = credit(n, k);
        rec.loss = loss(n, k);
        if (n >= 2)
            log.payoff += rec.credit;
        log.accumulated_loss += rec.loss;
        log.final_heap = unremovemax(h, k);
        log.records.push_back(rec);
    }
    return log;
}

long long level_loss(const GameLog& log, int K) {
    long long lo = (1LL << K) - 1, hi = (1LL << (K + 1)) - 2;
    bool seen_lo = false;
    long long total = 0;
    for (const MoveRecord& rec : log.records) {
        if (rec.size_before == lo)
            seen_lo = true;
        if (rec.size_before >= lo && rec.size_before <= hi)
            total += rec.loss;
    }
    if (!seen_lo)
        throw std::invalid_argument("level_loss: log does not reach the level");
    return total;
}

std::vector<int> strategy_par(long long limit) {
    if (limit < 2)
        throw std::invalid_argument("strategy_par: need limit >= 2");
    std::vector<int> pulls{1, 1, 1, 1, 2, 1};
    for (int k = 3; (long long)pulls.size() < limit - 1; ++k) {
        pulls.insert(pulls.end(), {1, 2, 1, 2});
        for (long long r = (1LL << (k - 1)) - 2; r > 0; --r)
            pulls.insert(pulls.end(), {2, 1});
    }
    pulls.resize((size_t)(limit - 1));
    return pulls;
}

std::vector<int> strategy_win(long long N) {
    if (N < 2)
        throw std::invalid_argument("strategy_win: need N >= 2");
    bool complete = (N & (N + 1)) == 0; // N = 2^ceil_lg(N) - 1
    if (N <= 7 || complete)
        return strategy_par(N);
    long long I = (1LL << floor_lg((u64)(N + 1))) - 1;
    std::vector<int> pulls = strategy_par(I); // I-1 pulls, complete heap on I
    for (long long m = I; m <= std::min(2 * I - 3, N - 1); ++m)
        pulls.push_back((m - I) % 2 == 0 ? 1 : 4);
    if (N - 1 >= 2 * I - 2)
        pulls.push_back(1); // the one lossy pull of the level
    if (N - 1 >= 2 * I - 1)
        pulls.push_back(2);
    return pulls;
}

} // namespace heapwc
