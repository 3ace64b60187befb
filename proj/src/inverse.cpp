#include "heapwc/inverse.hpp"

#include "heapwc/bitmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace heapwc {

int pulldown(std::vector<int>& a, int i, int j) {
    int n = (int)a.size();
    if (i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("pulldown: index out of range");
    if (j <= i)
        throw std::invalid_argument("pulldown: j must be a proper descendant of i");
    int removed = a[j - 1];
    int m = j;
    while (m / 2 >= i) {
        a[m - 1] = a[m / 2 - 1];
        m /= 2;
    }
    if (m != i)
        throw std::invalid_argument("pulldown: j must be a proper descendant of i");
    a[i - 1] = removed;
    return removed;
}

void unfixheap(std::vector<int>& a, int i) {
    int n = (int)a.size();
    if (i < 1 || i > n)
        throw std::invalid_argument("unfixheap: index out of range");
    int j = (int)leftmost_descendant((u64)i, (u64)n);
    if (j != i)
        pulldown(a, i, j);
}

bool unremovemax_valid(const Heap& h, int i) {
    int n = h.size();
    if (i < 1 || i > n)
        return false;
    return h[i] <= h[(n + 1) / 2];
}

Heap unremovemax(const Heap& h, int i) {
    if (!unremovemax_valid(h, i))
        throw std::invalid_argument("unremovemax: invalid move");
    int n = h.size();
    Heap g = h;
    g.a.push_back(h[i]);
    int m = i;
    while (m > 1) {
        g[m] = h[m / 2];
        m /= 2;
    }
    g[1] = n + 1;
    return g;
}

std::vector<int> gen_makeheap_worst(const Heap& h) {
    std::vector<int> a = h.a;
    int n = (int)a.size();
    for (int i = 1; i <= n / 2; ++i)
        unfixheap(a, i);
    return a;
}

std::vector<int> creative_sequence(const Heap& h) {
    std::vector<int> pulls;
    Heap g = h;
    while (g.size() > 1) {
        pulls.push_back(g[g.size()]); // the patch the forward removal will use
        g = removemax(std::move(g)).heap;
    }
    std::reverse(pulls.begin(), pulls.end());
    return pulls;
}

} // namespace heapwc
