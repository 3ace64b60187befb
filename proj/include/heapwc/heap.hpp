#pragma once

#include <string>
#include <vector>

// The instrumented Heapsort under analysis. Keys are always a permutation of
// 1..N, so comparisons are ties-free and every heap is a permutation heap.
// All counting follows one convention: sifting down pays the number of
// children of each node visited on the demotion path (child-vs-child, then
// child-vs-demotee at a two-child node; one comparison at a one-child node).

namespace heapwc {

// 1-indexed max-heap over a permutation of 1..N
struct Heap {
    std::vector<int> a; // a[k-1] holds the node at index k

    Heap() = default;
    explicit Heap(std::vector<int> nodes) : a(std::move(nodes)) {}

    int size() const { return (int)a.size(); }
    int operator[](int i) const { return a[i - 1]; }
    int& operator[](int i) { return a[i - 1]; }
    bool operator==(const Heap&) const = default;
    bool operator<(const Heap& o) const { return a < o.a; }
};

bool is_permutation_1_to_n(const std::vector<int>& v);

// index of the first order violation (parent not greater than child), or 0
int order_violation(const std::vector<int>& v);

// throws std::invalid_argument unless v is a permutation heap
Heap validate(const std::vector<int>& v);

// Sift the value at index i down its subtree (nodes 1..n of a). Returns the
// number of key comparisons performed.
long long fixheap(std::vector<int>& a, int i);
long long fixheap(std::vector<int>& a, int i, int n); // heap occupies a[0..n-1]

struct MakeHeapRun {
    Heap heap;
    long long comparisons = 0;
};
MakeHeapRun makeheap(std::vector<int> a);

struct RemoveMaxRun {
    int max = 0;
    Heap heap; // one node smaller
    long long comparisons = 0;
};
RemoveMaxRun removemax(Heap h);

struct RemoveAllRun {
    std::vector<int> sorted;
    long long comparisons = 0;
};
RemoveAllRun removeall(Heap h);

struct HeapsortRun {
    std::vector<int> sorted;
    long long makeheap_comparisons = 0;
    long long removeall_comparisons = 0;
    long long comparisons = 0;
};
HeapsortRun heapsort(std::vector<int> a);

} // namespace heapwc
