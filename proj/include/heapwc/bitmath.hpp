#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Integer index arithmetic for 1-based implicit binary trees. Everything here
// is exact bit work; no floating point.

namespace heapwc {

using u64 = std::uint64_t;

inline int floor_lg(u64 n) {
    if (n == 0)
        throw std::invalid_argument("floor_lg: n must be positive");
    return std::bit_width(n) - 1;
}

// least d with 2^d >= n
inline int ceil_lg(u64 n) {
    if (n == 0)
        throw std::invalid_argument("ceil_lg: n must be positive");
    return n == 1 ? 0 : std::bit_width(n - 1);
}

// number of 1-bits
inline int s2(u64 n) {
    if (n == 0)
        throw std::invalid_argument("s2: n must be positive");
    return std::popcount(n);
}

// exponent of 2 in the prime factorization
inline int e2(u64 n) {
    if (n == 0)
        throw std::invalid_argument("e2: n must be positive");
    return std::countr_zero(n);
}

// children of node m in a convex tree of N nodes
inline int num_children(u64 m, u64 N) {
    if (m == 0 || m > N)
        throw std::invalid_argument("num_children: need 1 <= m <= N");
    if (2 * m > N)
        return 0;
    return 2 * m == N ? 1 : 2;
}

// the unique d with i*2^d <= N < i*2^(d+1); NOT floor_lg(N/i) of the integer
// quotient, which can overshoot
inline int subtree_depth(u64 i, u64 N) {
    if (i == 0 || i > N)
        throw std::invalid_argument("subtree_depth: need 1 <= i <= N");
    int d = 0;
    while (i << (d + 1) <= N)
        ++d;
    return d;
}

inline u64 leftmost_descendant(u64 i, u64 N) {
    return i << subtree_depth(i, N);
}

// ancestors of j from the root down to j itself
inline std::vector<u64> path_to(u64 j) {
    if (j == 0)
        throw std::invalid_argument("path_to: j must be positive");
    std::vector<u64> path(floor_lg(j) + 1);
    for (int d = (int)path.size() - 1; d >= 0; --d) {
        path[d] = j;
        j /= 2;
    }
    return path;
}

} // namespace heapwc
