#include <doctest.h>

#include <csai/large_alphabet_rs.hpp>
#include <csai/small_alphabet_rs.hpp>

#include <random>

using namespace csai;

namespace {

u64 naive_succ(const std::vector<u32>& seq, u32 c, u64 i) {
    for (u64 j = i + 1; j <= seq.size(); ++j)
        if (seq[j - 1] == c) return j;
    return seq.size() + 1;
}

u64 naive_pred(const std::vector<u32>& seq, u32 c, u64 i) {
    for (u64 j = std::min<u64>(i, seq.size()); j >= 1; --j)
        if (seq[j - 1] == c) return j;
    return 0;
}

u64 naive_rank(const std::vector<u32>& seq, u32 c, u64 i) {
    u64 k = 0;
    for (u64 j = 1; j <= std::min<u64>(i, seq.size()); ++j)
        if (seq[j - 1] == c) ++k;
    return k;
}

} // namespace

TEST_CASE("small_alphabet_rs succ/pred agree with a scan, exhaustively") {
    std::mt19937_64 rng(11);
    for (u64 n : {1ull, 5ull, 64ull, 257ull, 512ull}) {
        for (u32 sigma : {1u, 2u, 5u, 8u}) {
            std::vector<u32> seq(n);
            std::uniform_int_distribution<u32> dist(1, sigma);
            for (u32& v : seq) v = dist(rng);
            small_alphabet_rs rs(seq, sigma);
            for (u32 c = 1; c <= sigma + 1; ++c) { // +1: a symbol that never occurs
                for (u64 i = 0; i <= n; ++i) {
                    u64 expect_s = c <= sigma ? naive_succ(seq, c, i) : n + 1;
                    u64 expect_p = c <= sigma ? naive_pred(seq, c, i) : 0;
                    CHECK(rs.succ_occ(c, i) == expect_s);
                    CHECK(rs.pred_occ(c, i) == expect_p);
                }
            }
        }
    }
}

TEST_CASE("small_alphabet_rs scan length stays within one block") {
    std::mt19937_64 rng(12);
    u64 n = 2000;
    u32 sigma = 4, s = 4;
    std::vector<u32> seq(n);
    std::uniform_int_distribution<u32> dist(1, sigma);
    for (u32& v : seq) v = dist(rng);
    small_alphabet_rs rs(seq, sigma, s);
    u64 block = rs.block_size();
    CHECK(block == u64(sigma) * s);
    std::uniform_int_distribution<u64> qdist(0, n);
    for (u32 q = 0; q < 2000; ++q) {
        u64 i = qdist(rng);
        u32 c = dist(rng);
        small_alphabet_rs::scan_touches = 0;
        rs.succ_occ(c, i);
        CHECK(small_alphabet_rs::scan_touches <= block);
        small_alphabet_rs::scan_touches = 0;
        rs.pred_occ(c, i);
        CHECK(small_alphabet_rs::scan_touches <= block);
    }
}

TEST_CASE("large_alphabet_rs rank/select agree with a scan across dispatch thresholds") {
    std::mt19937_64 rng(13);
    // construct occurrence counts straddling the linear/binary/s-array thresholds
    std::vector<std::pair<u32, u64>> plan = {{1, 1}, {2, 16}, {3, 17}, {4, 512}, {5, 513}, {6, 1000}, {7, 3}};
    std::vector<u32> seq;
    for (auto [c, cnt] : plan)
        for (u64 k = 0; k < cnt; ++k) seq.push_back(c);
    std::shuffle(seq.begin(), seq.end(), rng);
    u32 sigma = 100000; // large alphabet, mostly absent symbols
    large_alphabet_rs rs(seq, sigma);

    for (auto [c, cnt] : plan) {
        CHECK(rs.occurrences(c) == cnt);
        for (u64 k = 1; k <= cnt; ++k) {
            u64 p = rs.select(c, k);
            CHECK(naive_rank(seq, c, p) == k);
            CHECK(seq[p - 1] == c);
            CHECK(rs.rank(c, p) == k); // rank/select inverse
        }
        CHECK_THROWS_AS(rs.select(c, cnt + 1), std::out_of_range);
    }
    std::uniform_int_distribution<u64> qdist(0, seq.size() + 2);
    for (u32 q = 0; q < 3000; ++q) {
        u64 i = qdist(rng);
        for (auto [c, cnt] : plan) CHECK(rs.rank(c, i) == naive_rank(seq, c, i));
        CHECK(rs.rank(99999, i) == 0); // absent symbol
    }
}

TEST_CASE("large_alphabet_rs answers are dispatch-invariant") {
    std::mt19937_64 rng(14);
    std::vector<u32> seq;
    std::vector<std::pair<u32, u64>> plan = {{1, 1}, {2, 20}, {3, 600}, {4, 40}};
    for (auto [c, cnt] : plan)
        for (u64 k = 0; k < cnt; ++k) seq.push_back(c);
    std::shuffle(seq.begin(), seq.end(), rng);
    // force every query through a single path by moving both thresholds
    large_alphabet_rs all_linear(seq, 10, 1u << 30, 1u << 30);
    large_alphabet_rs all_binary(seq, 10, 0, 1u << 30);
    large_alphabet_rs all_sarray(seq, 10, 0, 0);
    large_alphabet_rs dispatch(seq, 10);
    for (u64 i = 0; i <= seq.size() + 1; ++i) {
        for (auto [c, cnt] : plan) {
            u64 expect = dispatch.rank(c, i);
            CHECK(all_linear.rank(c, i) == expect);
            CHECK(all_binary.rank(c, i) == expect);
            CHECK(all_sarray.rank(c, i) == expect);
        }
    }
}
