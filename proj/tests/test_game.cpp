#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heapwc/bitmath.hpp"
#include "heapwc/formulas.hpp"
#include "heapwc/game.hpp"
#include "heapwc/inverse.hpp"
#include "heapwc/oracle.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace heapwc;
using heapwc::testutil::make_random_heap;

namespace {
Heap one() { return Heap(std::vector<int>{1}); }
}

TEST_CASE("credit, cr_max, loss") {
    CHECK(credit(7, 7) == 4);
    CHECK(credit(12, 12) == 5);
    CHECK(credit(1, 1) == 0);
    CHECK_THROWS_AS(credit(5, 6), std::invalid_argument);

    CHECK(cr_max(12) == 6);
    CHECK(cr_max(2) == 1);
    CHECK(cr_max(7) == 4);
    CHECK_THROWS_AS(cr_max(1), std::invalid_argument);

    CHECK(loss(12, 12) == 1);
    CHECK(loss(7, 7) == 0);
    CHECK(loss(12, 8) == 0);
}

TEST_CASE("is_lossless positions") {
    CHECK(is_lossless(12, 8));
    CHECK(is_lossless(12, 11));
    CHECK(!is_lossless(12, 3));
}

TEST_CASE("loss is never negative") {
    for (long long i = 2; i <= 512; ++i)
        for (long long k = 2; k <= i; ++k)
            REQUIRE(loss(i, k) >= 0);
}

TEST_CASE("play") {
    GameLog log = play(one(), {1, 1, 1, 1, 2, 1});
    CHECK(log.final_heap.a == std::vector<int>{7, 6, 3, 4, 5, 2, 1});
    CHECK(log.payoff == 14);
    CHECK(log.accumulated_loss == 0);

    log = play(one(), {1});
    CHECK(log.final_heap.a == std::vector<int>{2, 1});
    CHECK(log.payoff == 0);

    Heap h15({15, 12, 14, 9, 11, 13, 3, 4, 6, 10, 5, 7, 8, 2, 1});
    log = play(h15, {1, 4});
    CHECK(log.final_heap.a ==
          std::vector<int>{17, 16, 15, 12, 11, 13, 14, 9, 6, 10, 5, 7, 8, 2, 3,
                           1, 4});

    CHECK_THROWS_AS(play(one(), {2}), std::invalid_argument);
}

TEST_CASE("strategy_par prefixes") {
    CHECK(strategy_par(7) == std::vector<int>{1, 1, 1, 1, 2, 1});
    CHECK(strategy_par(15) ==
          std::vector<int>{1, 1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 1});
    auto p31 = strategy_par(31);
    std::vector<int> level4(p31.begin() + 14, p31.begin() + 22);
    CHECK(level4 == std::vector<int>{1, 2, 1, 2, 2, 1, 2, 1});
}

TEST_CASE("strategy_win") {
    CHECK(strategy_win(12) ==
          std::vector<int>{1, 1, 1, 1, 2, 1, 1, 4, 1, 4, 1});

    auto w28 = strategy_win(28);
    REQUIRE(w28.size() == 27);
    std::vector<int> tail(w28.end() - 13, w28.end());
    CHECK(tail == std::vector<int>{1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1, 4, 1});
    GameLog log = play(one(), w28);
    for (const MoveRecord& rec : log.records)
        if (rec.size_before >= 15)
            CHECK(rec.loss == 0);

    auto w30 = strategy_win(30);
    REQUIRE(w30.size() == 29);
    CHECK(w30[27] == 1); // made at size 28
    CHECK(w30[28] == 2);
    log = play(one(), w30);
    CHECK(log.records[27].size_before == 28);
    CHECK(log.records[27].loss == 1);
    CHECK(log.records[28].loss == 0);

    for (long long n : {2, 3, 4, 5, 6, 7, 15, 31, 63})
        CHECK(strategy_win(n) == strategy_par(n));
    for (long long n = 2; n <= 200; ++n)
        CHECK((long long)strategy_win(n).size() == n - 1);
}

TEST_CASE("level_loss") {
    GameLog par = play(one(), strategy_par(31));
    CHECK(level_loss(par, 2) == 0);
    CHECK(level_loss(par, 3) == 1);
    GameLog win28 = play(one(), strategy_win(28));
    CHECK(level_loss(win28, 3) == 1);
    CHECK(level_loss(win28, 4) == 0); // the reached part of the level
    CHECK_THROWS_AS(level_loss(win28, 5), std::invalid_argument);
}

TEST_CASE("credit matches measured removal cost (exhaustive to 8)") {
    for (int n = 1; n <= 8; ++n) {
        for (const Heap& h : enumerate_heaps(n)) {
            for (int k = 1; k <= n; ++k) {
                if (!unremovemax_valid(h, k))
                    continue;
                REQUIRE(removemax(unremovemax(h, k)).comparisons ==
                        credit(n, k));
            }
        }
    }
}

TEST_CASE("is_lossless agrees with zero loss, both directions") {
    for (long long n = 2; n <= 256; ++n)
        for (long long k = 2; k <= n; ++k)
            REQUIRE(is_lossless(n, k) == (loss(n, k) == 0));
}

TEST_CASE("cr_max is attained for every size") {
    for (long long i = 2; i <= 256; ++i) {
        bool hit = false;
        for (long long k = 2; k <= i && !hit; ++k)
            hit = credit(i, k) == cr_max(i);
        REQUIRE(hit);
    }
}

TEST_CASE("complete heaps from the level schedule keep the frozen corner") {
    for (int K = 3; K <= 7; ++K) {
        long long n = (1LL << K) - 1;
        Heap h = play(one(), strategy_par(n)).final_heap;
        CHECK(h[1 << (K - 1)] == 4);         // first index of the last level
        CHECK(h[(int)((n - 1) / 2)] == 3);   // parent of the last two nodes
        CHECK(h[(int)n - 1] == 2);
        CHECK(h[(int)n] == 1);
    }
}

TEST_CASE("per-move losses of the schedules") {
    GameLog par = play(one(), strategy_par(513));
    for (const MoveRecord& rec : par.records) {
        long long i = rec.size_before;
        long long expect = (i >= 8 && (i & (i - 1)) == 0) ? 1 : 0;
        REQUIRE(rec.loss == expect);
    }

    for (long long n = 2; n <= 200; ++n) {
        GameLog win = play(one(), strategy_win(n));
        long long I = (1LL << floor_lg((u64)(n + 1))) - 1;
        bool pure_par = n <= 7 || n == (1LL << ceil_lg((u64)n)) - 1;
        long long total = 0;
        for (const MoveRecord& rec : win.records) {
            long long i = rec.size_before;
            long long expect;
            if (pure_par || i < I)
                expect = (i >= 8 && (i & (i - 1)) == 0) ? 1 : 0;
            else
                expect = i == 2 * I - 2 ? 1 : 0;
            REQUIRE(rec.loss == expect);
            total += rec.loss;
        }
        REQUIRE(total == lambda_win_total(n));
    }
}

TEST_CASE("payoff plus accumulated loss is the upper-bound payoff") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 64; ++n) {
        Heap h = make_random_heap(n, rng);
        GameLog log = play(one(), creative_sequence(h));
        REQUIRE(log.payoff + log.accumulated_loss == p_ub(2, n - 1));
    }
}

TEST_CASE("alternating 1,2 pulls on a complete heap lose only at the second") {
    std::mt19937 rng(8);
    for (int K = 1; K <= 6; ++K) {
        int n = (1 << (K + 1)) - 1;
        for (int trial = 0; trial < 20; ++trial) {
            Heap h = make_random_heap(n, rng);
            int boundary = h[(n + 1) / 2];
            if (boundary < 2)
                continue;
            std::vector<int> pulls;
            for (int t = 0; t <= n; ++t)
                pulls.push_back(t % 2 == 0 ? 1 : 2);
            GameLog log = play(h, pulls);
            for (size_t t = 0; t < log.records.size(); ++t) {
                if (t == 1)
                    REQUIRE(log.records[t].loss == (boundary > 2 ? 1 : 0));
                else
                    REQUIRE(log.records[t].loss == 0);
            }
        }
    }
}
