#pragma once

#include "heapwc/heap.hpp"

#include <vector>

// Heapsort run backwards: demote a whole ancestor chain and surface a deep
// value, undo one RemoveMax, build worst-case MakeHeap inputs, and recover
// the unique pull-down sequence that creates a given heap.

namespace heapwc {

// Shift the values on the path from i down to j one step towards j and place
// the former value of j at i. Returns that value. Requires j to be a proper
// descendant of i.
int pulldown(std::vector<int>& a, int i, int j);

// Inverse of fixheap at i: pull the leftmost descendant's value up to i.
// fixheap(i) on the result restores a and pays the maximal repair cost for
// that subtree. Identity when i is a leaf.
void unfixheap(std::vector<int>& a, int i);

// Whether value at index i may be sent to the new last slot when growing the
// heap by one (the grown array must stay a heap).
bool unremovemax_valid(const Heap& h, int i);

// Inverse of removemax: returns the unique heap H' on N+1 nodes with
// H'[1] = N+1, H'[N+1] = H[i], the ancestors of i shifted down one step, and
// removemax(H') == (N+1, H). Throws std::invalid_argument on an invalid move.
Heap unremovemax(const Heap& h, int i);

// Worst-case input array for makeheap targeting heap h:
// makeheap(result) == (h, 2N - 2*s2(N) - e2(N)).
std::vector<int> gen_makeheap_worst(const Heap& h);

// The unique sequence of pull-down values that grows h from the 1-element
// heap (recovered by peeling with removemax and reversing).
std::vector<int> creative_sequence(const Heap& h);

} // namespace heapwc
