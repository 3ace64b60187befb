#include "heapwc/render.hpp"

#include "heapwc/bitmath.hpp"

#include <algorithm>

namespace heapwc {

namespace {

int digits(int v) {
    int d = 1;
    while (v >= 10) {
        ++d;
        v /= 10;
    }
    return d;
}

// column at which the node at index i ends, on the grid for N nodes
long long end_col(int i, int w, int K) {
    int k = floor_lg((u64)i);
    long long p = i - (1LL << k);
    return (long long)w * (1LL << (K - k)) * (2 * p + 1) - 1;
}

void put_right_aligned(std::string& line, long long end, int v) {
    std::string s = std::to_string(v);
    long long start = end - (long long)s.size() + 1;
    if ((long long)line.size() < end + 1)
        line.resize(end + 1, ' ');
    for (size_t t = 0; t < s.size(); ++t)
        line[start + t] = s[t];
}

void put_carets(std::string& line, long long from, long long to) {
    if (to < from)
        return;
    if ((long long)line.size() < to + 1)
        line.resize(to + 1, ' ');
    for (long long c = from; c <= to; ++c)
        line[c] = '^';
}

} // namespace

std::vector<std::string> render_levels(const Heap& h) {
    int N = h.size();
    int w = digits(N);
    int K = floor_lg((u64)N);
    std::vector<std::string> lines(K + 1);
    for (int k = 0; k <= K; ++k) {
        std::string content;
        int first = 1 << k, last = std::min((1 << (k + 1)) - 1, N);
        for (int i = first; i <= last; ++i) {
            long long end = end_col(i, w, K);
            put_right_aligned(content, end, h[i]);
            if (i > 1 && i % 2 == 0) {
                long long to = i + 1 <= N
                                   ? end_col(i + 1, w, K) - digits(h[i + 1])
                                   : end_col(i / 2, w, K);
                put_carets(content, end + 1, to);
            }
        }
        lines[k] = "Level " + std::to_string(k) + ": " + content;
    }
    return lines;
}

std::string render_heap(const Heap& h) {
    std::string out;
    for (const std::string& line : render_levels(h)) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace heapwc
