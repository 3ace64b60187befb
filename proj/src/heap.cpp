#include "heapwc/heap.hpp"

#include <algorithm>
#include <stdexcept>

namespace heapwc {

bool is_permutation_1_to_n(const std::vector<int>& v) {
    int n = (int)v.size();
    std::vector<char> seen(n + 1, 0);
    for (int x : v) {
        if (x < 1 || x > n || seen[x])
            return false;
        seen[x] = 1;
    }
    return true;
}

int order_violation(const std::vector<int>& v) {
    int n = (int)v.size();
    for (int j = 2; j <= n; ++j)
        if (v[j / 2 - 1] <= v[j - 1])
            return j;
    return 0;
}

Heap validate(const std::vector<int>& v) {
    if (!is_permutation_1_to_n(v))
        throw std::invalid_argument("validate: not a permutation of 1..N");
    if (int j = order_violation(v))
        throw std::invalid_argument("validate: order violation at index " +
                                    std::to_string(j));
    return Heap(v);
}

long long fixheap(std::vector<int>& a, int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("fixheap: index out of range");
    long long comps = 0;
    int demotee = a[i - 1];
    int m = i;
    for (;;) {
        int c = 2 * m;
        if (c > n) // leaf
            break;
        if (c + 1 <= n) { // two children: pick the larger first
            ++comps;
            if (a[c] > a[c - 1])
                ++c;
        }
        ++comps; // child vs demotee
        if (a[c - 1] <= demotee)
            break;
        a[m - 1] = a[c - 1];
        m = c;
    }
    a[m - 1] = demotee;
    return comps;
}

long long fixheap(std::vector<int>& a, int i) {
    return fixheap(a, i, (int)a.size());
}

MakeHeapRun makeheap(std::vector<int> a) {
    if (!is_permutation_1_to_n(a))
        throw std::invalid_argument("makeheap: not a permutation of 1..N");
    MakeHeapRun run;
    int n = (int)a.size();
    for (int i = n / 2; i > 0; --i)
        run.comparisons += fixheap(a, i, n);
    run.heap = Heap(std::move(a));
    return run;
}

RemoveMaxRun removemax(Heap h) {
    if (h.size() == 0)
        throw std::invalid_argument("removemax: empty heap");
    RemoveMaxRun run;
    run.max = h[1];
    int n = h.size();
    if (n > 1) {
        h.a[0] = h.a[n - 1];
        h.a.pop_back();
        run.comparisons = fixheap(h.a, 1, n - 1);
    } else {
        h.a.pop_back();
    }
    run.heap = std::move(h);
    return run;
}

RemoveAllRun removeall(Heap h) {
    RemoveAllRun run;
    int n = h.size();
    run.sorted.resize(n);
    for (int i = n; i >= 1; --i) {
        RemoveMaxRun step = removemax(std::move(h));
        run.sorted[i - 1] = step.max;
        run.comparisons += step.comparisons;
        h = std::move(step.heap);
    }
    return run;
}

HeapsortRun heapsort(std::vector<int> a) {
    MakeHeapRun mh = makeheap(std::move(a));
    RemoveAllRun ra = removeall(std::move(mh.heap));
    HeapsortRun run;
    run.sorted = std::move(ra.sorted);
    run.makeheap_comparisons = mh.comparisons;
    run.removeall_comparisons = ra.comparisons;
    run.comparisons = mh.comparisons + ra.comparisons;
    return run;
}

} // namespace heapwc
