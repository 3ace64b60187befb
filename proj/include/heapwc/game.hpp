#pragma once

#include "heapwc/heap.hpp"

#include <vector>

// The solitaire of growing a heap by pull downs (reverse RemoveMax). Each
// move at heap size i choosing index k earns the credit the forward removal
// will later pay back in comparisons; a move's loss is its distance from the
// per-size maximum credit. The schedules below build worst-case heaps.

namespace heapwc {

// comparisons RemoveMax pays to undo move k made at size i; credit(1,1) = 0
long long credit(long long i, long long k);

// maximum credit over all moves at size i (i >= 2)
long long cr_max(long long i);

long long loss(long long i, long long k);

// zero-loss characterization for move k at size N, by index position alone
bool is_lossless(long long N, long long k);

struct MoveRecord {
    long long size_before = 0; // heap size when the move was made
    long long move_index = 0;  // index k whose value is sent to the last slot
    long long pull_value = 0;  // the value at k before the move
    long long credit = 0;
    long long loss = 0;
};

struct GameLog {
    std::vector<MoveRecord> records;
    Heap final_heap;
    long long payoff = 0;           // credits summed over moves at size >= 2
    long long accumulated_loss = 0; // losses summed over all moves
};

// Apply the pull values in order starting from `start` (moves are identified
// by value; the index is looked up per move). Throws std::invalid_argument
// naming the first invalid pull.
GameLog play(const Heap& start, const std::vector<int>& pulls);

// total loss of the log's moves made at sizes 2^K-1 .. 2^(K+1)-2
long long level_loss(const GameLog& log, int K);

// Level-by-level schedule of 1s and 2s: <1,1,1,1,2,1>, then per level k >= 3
// the block <1,2,1,2> followed by 2^(k-1)-2 repetitions of <2,1>. Truncated
// to limit-1 pulls.
std::vector<int> strategy_par(long long limit);

// Optimal schedule for N: the level schedule up to the largest complete heap
// on I = 2^floor_lg(N+1) - 1 nodes, then greedy <1,4> alternation through the
// last level; one lossy pull of 1 at move 2I-2, then 2. Exactly N-1 pulls.
std::vector<int> strategy_win(long long N);

} // namespace heapwc
