#pragma once

#include <vector>

// Closed forms for the worst-case comparison counts of Heapsort and its two
// phases, the payoff/loss bookkeeping of the pull-down game, and the jumpy
// term f(N) = 2*s2(N) + e2(N) with its logarithmic bounds. Integer formulas
// are evaluated in exact integer arithmetic; only the epsilon form and the
// f(N) bounds return reals.

namespace heapwc {

// 1 iff N <= 2^ceil_lg(N) - 4
int c_of(long long N);

// worst case of heap construction: 2N - 2*s2(N) - e2(N) (OEIS A092054)
long long makeheap_max(long long N);

// worst case of the N successive max-removals, N >= 2
long long removeall_max(long long N);

// worst case of the full sort, defined as the phase sum
long long heapsort_max(long long N);

// the same quantity as one closed expression in ceil_lg(N) (asserted equal)
long long heapsort_max_closed(long long N);

// ceiling defect of lg(N-1) and the resulting correction term
double theta(long long N);
double epsilon(long long N); // 1 + theta - 2^theta, in [0, erdos_delta)
inline constexpr double erdos_delta = 0.0860713320559342; // sup of epsilon

// real-valued form of heapsort_max; rounds to it exactly
double heapsort_max_epsilon(long long N);

// 1 iff i = 2^ceil_lg(i) - 4 (the sizes where even the best play must lose)
int lambda_star(long long i);

// sum of lambda_star(2..n) in closed form: max(floor_lg(n+4), 3) - 3
long long sum_lambda_star(long long n);

// total loss of the optimal schedule for N: max(floor_lg(N+3), 3) - 3
long long lambda_win_total(long long N);

// payoff of the level schedule after N-1 moves
long long p_par(long long N);

// upper-bound payoff: sum over i = n..m of cr_max(i)
long long p_ub(long long n, long long m);

// f(N) = 2*s2(N) + e2(N), evaluated directly
long long f_s2e2(long long N);

// f(N) via its recurrence: 2 + (lg N if N is a power of two, else
// f(N - 2^floor_lg(N-1))); must agree with f_s2e2
long long f_s2e2_recurrence(long long N);

// upper bound 2*lg(N - 2^floor_lg(N-1) + 1) + 2, valid for every N >= 2
double f_bound1(long long N);

// Tighter bound for N outside the exception set E, with the additive constant
// fixed at 4 by expanding the recurrence twice (2 is too small: counterexample
// N = 13, among thousands more). Requires the inner argument to be positive;
// check_f_bound2 rescans the claim on demand.
double f_bound2(long long N);
bool f_bound2_defined(long long N);

// E = {2^k | k >= 3} union {2^m(2^k+1) | k,m >= 1}
bool in_exception_set(long long N);

// N outside E (and where the bound is defined) with f(N) > f_bound2(N),
// scanned over 2..limit
struct FBound2Report {
    long long checked = 0;
    std::vector<long long> violations;
};
FBound2Report check_f_bound2(long long limit);

} // namespace heapwc
