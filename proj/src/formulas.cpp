#include "heapwc/formulas.hpp"

#include "heapwc/bitmath.hpp"

#include <cmath>
#include <stdexcept>

namespace heapwc {

int c_of(long long N) {
    if (N < 2)
        throw std::invalid_argument("c_of: need N >= 2");
    return N <= (1LL << ceil_lg((u64)N)) - 4 ? 1 : 0;
}

long long makeheap_max(long long N) {
    if (N < 1)
        throw std::invalid_argument("makeheap_max: need N >= 1");
    return 2 * N - 2 * s2((u64)N) - e2((u64)N);
}

long long removeall_max(long long N) {
    if (N < 2)
        throw std::invalid_argument("removeall_max: need N >= 2");
    long long L = floor_lg((u64)(N - 1));
    return 2 * (N - 1) * L - (1LL << (L + 2)) + std::min(L, 2LL) + 4 + c_of(N);
}

long long heapsort_max(long long N) {
    return makeheap_max(N) + removeall_max(N);
}

long long heapsort_max_closed(long long N) {
    if (N < 2)
        throw std::invalid_argument("heapsort_max_closed: need N >= 2");
    long long C = ceil_lg((u64)N);
    return 2 * (N - 1) * C - (1LL << (C + 1)) - 2 * s2((u64)N) - e2((u64)N) +
           std::min(C, 3LL) + 5 + c_of(N);
}

double theta(long long N) {
    if (N < 2)
        throw std::invalid_argument("theta: need N >= 2");
    return ceil_lg((u64)(N - 1)) - std::log2((double)(N - 1));
}

double epsilon(long long N) {
    double t = theta(N);
    return 1.0 + t - std::exp2(t);
}

double heapsort_max_epsilon(long long N) {
    long long L = floor_lg((u64)(N - 1));
    return 2.0 * (N - 1) * (std::log2((N - 1) / 2.0) + epsilon(N)) -
           2 * s2((u64)N) - e2((u64)N) + std::min(L, 2LL) + 6 + c_of(N);
}

int lambda_star(long long i) {
    if (i < 1)
        throw std::invalid_argument("lambda_star: need i >= 1");
    return i == (1LL << ceil_lg((u64)i)) - 4 ? 1 : 0;
}

long long sum_lambda_star(long long n) {
    if (n < 1)
        throw std::invalid_argument("sum_lambda_star: need n >= 1");
    return std::max((long long)floor_lg((u64)(n + 4)), 3LL) - 3;
}

long long lambda_win_total(long long N) {
    if (N < 2)
        throw std::invalid_argument("lambda_win_total: need N >= 2");
    return std::max((long long)floor_lg((u64)(N + 3)), 3LL) - 3;
}

long long p_par(long long N) {
    if (N < 2)
        throw std::invalid_argument("p_par: need N >= 2");
    long long L = floor_lg((u64)(N - 1));
    return 2 * (N - 1) * L - (1LL << (L + 2)) + std::min(L, 2LL) + 4;
}

long long p_ub(long long n, long long m) {
    if (n < 2 || n > m + 1) // m = n - 1 is the empty range
        throw std::invalid_argument("p_ub: need 2 <= n <= m + 1");
    auto closed = [](long long t) { // sum over i = 2..t of cr_max(i), t >= 1
        if (t == 1)
            return 0LL;
        long long L = floor_lg((u64)t);
        return (2 * t + 1) * L - (1LL << (L + 2)) + 4;
    };
    return closed(m) - closed(n - 1);
}

long long f_s2e2(long long N) {
    if (N < 1)
        throw std::invalid_argument("f_s2e2: need N >= 1");
    return 2 * s2((u64)N) + e2((u64)N);
}

long long f_s2e2_recurrence(long long N) {
    if (N < 1)
        throw std::invalid_argument("f_s2e2_recurrence: need N >= 1");
    if (N == 1)
        return 2;
    if ((N & (N - 1)) == 0)
        return 2 + floor_lg((u64)N);
    return 2 + f_s2e2_recurrence(N - (1LL << floor_lg((u64)(N - 1))));
}

double f_bound1(long long N) {
    if (N < 2)
        throw std::invalid_argument("f_bound1: need N >= 2");
    long long arg = N - (1LL << floor_lg((u64)(N - 1))) + 1;
    return 2.0 * std::log2((double)arg) + 2.0;
}

bool f_bound2_defined(long long N) {
    if (N < 2)
        return false;
    long long M = N - (1LL << floor_lg((u64)(N - 1)));
    return M - 1 >= 1;
}

double f_bound2(long long N) {
    if (!f_bound2_defined(N))
        throw std::invalid_argument("f_bound2: undefined for this N");
    long long M = N - (1LL << floor_lg((u64)(N - 1)));
    long long arg = M - (1LL << floor_lg((u64)(M - 1))) + 1;
    return 2.0 * std::log2((double)arg) + 4.0;
}

bool in_exception_set(long long N) {
    if (N >= 8 && (N & (N - 1)) == 0)
        return true;
    // 2^m(2^k+1) with k,m >= 1: odd part of N is 2^k+1 for some k >= 1
    if (N % 2 != 0)
        return false;
    long long odd = N >> e2((u64)N);
    return odd >= 3 && ((odd - 1) & (odd - 2)) == 0;
}

FBound2Report check_f_bound2(long long limit) {
    FBound2Report report;
    for (long long N = 2; N <= limit; ++N) {
        if (in_exception_set(N) || !f_bound2_defined(N))
            continue;
        ++report.checked;
        if ((double)f_s2e2(N) > f_bound2(N) + 1e-9)
            report.violations.push_back(N);
    }
    return report;
}

} // namespace heapwc
