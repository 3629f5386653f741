#include <doctest.h>

#include <csai/lzend.hpp>

#include "oracles.hpp"

#include <random>

using namespace csai;

namespace {

void check_against_oracle(std::span<const i64> seq, std::optional<u64> h) {
    lzend_parse_stats stats;
    lzend_parsing got = lzend_parse(seq, h, &stats);
    lzend_parsing want = lzend_parse_oracle(seq, h);
    // boundaries must match; sources may differ when ties exist
    CHECK(got.end_positions() == want.end_positions());
    CHECK(lzend_decode(got) == std::vector<i64>(seq.begin(), seq.end()));
    CHECK(lzend_decode(want) == std::vector<i64>(seq.begin(), seq.end()));
    if (h)
        for (const lzend_phrase& f : got.phrases) CHECK(f.copy_len + 1 <= *h);
    // update discipline: phrases are unmarked exactly when merged away
    CHECK(stats.unmarks == stats.merges);
    CHECK(stats.marks == stats.new_phrases - 1);
}

} // namespace

TEST_CASE("lzend_parse worked examples") {
    {
        lzend_parsing p = lzend_parse(std::vector<i64>{1});
        REQUIRE(p.z() == 1);
        CHECK(p.phrases[0] == lzend_phrase{0, 0, 1});
    }
    {
        lzend_parsing p = lzend_parse(std::vector<i64>{1, 2});
        REQUIRE(p.z() == 2);
        CHECK(p.phrases[0] == lzend_phrase{0, 0, 1});
        CHECK(p.phrases[1] == lzend_phrase{0, 0, 2});
    }
    {
        // abab: literal a, literal b, then one copying phrase; boundaries 1,2,4
        std::vector<i64> seq = {1, 2, 1, 2};
        lzend_parsing p = lzend_parse(seq);
        CHECK(p.end_positions() == std::vector<u64>{1, 2, 4});
        CHECK(p.phrases[2].copy_len == 1);
        CHECK(lzend_decode(p) == seq);
        CHECK(lzend_parse_oracle(seq).end_positions() == std::vector<u64>{1, 2, 4});
    }
    {
        // unary input: doubling phrases
        std::vector<i64> seq(32, 5);
        lzend_parsing p = lzend_parse(seq);
        CHECK(p.end_positions() == std::vector<u64>{1, 3, 7, 15, 31, 32});
        CHECK(lzend_decode(p) == seq);
    }
    CHECK_THROWS_AS(lzend_parse({}), std::invalid_argument);
    CHECK_THROWS_AS(lzend_parse(std::vector<i64>{1}, 0), std::invalid_argument);
}

TEST_CASE("lzend_parse equals the quadratic oracle on random sequences") {
    std::mt19937_64 rng(31);
    for (u32 round = 0; round < 400; ++round) {
        u64 n = 1 + rng() % 96;
        u64 sigma = std::vector<u64>{1, 2, 3, 4, 8, 64}[rng() % 6];
        std::vector<i64> seq = oracle::random_seq(rng, n, sigma);
        std::optional<u64> h;
        switch (rng() % 4) {
            case 0: h = 1; break;
            case 1: h = 1 + rng() % 8; break;
            case 2: h = 64; break;
            default: break; // unbounded
        }
        check_against_oracle(seq, h);
    }
}

TEST_CASE("lzend_parse handles signed differential-style alphabets") {
    std::mt19937_64 rng(32);
    for (u32 round = 0; round < 60; ++round) {
        u64 n = 1 + rng() % 128;
        std::vector<i64> seq(n);
        std::uniform_int_distribution<i64> dist(-static_cast<i64>(n), static_cast<i64>(n));
        for (i64& v : seq) v = dist(rng);
        check_against_oracle(seq, round % 2 ? std::optional<u64>{8} : std::nullopt);
    }
}

TEST_CASE("lzend_parse on structured inputs") {
    check_against_oracle(oracle::fibonacci_word(512), std::nullopt);
    check_against_oracle(oracle::fibonacci_word(512), 16);
    std::vector<i64> unary(400, 1);
    check_against_oracle(unary, std::nullopt);
    check_against_oracle(unary, 5);
    std::vector<i64> periodic;
    for (u64 i = 0; i < 300; ++i) periodic.push_back(1 + static_cast<i64>(i % 3));
    check_against_oracle(periodic, std::nullopt);
    check_against_oracle(periodic, 7);
}

TEST_CASE("phrase cap properties") {
    std::mt19937_64 rng(33);
    std::vector<i64> seq = oracle::random_seq(rng, 300, 2);
    u64 prev_z = 0;
    // growing h never increases the phrase count; h = 1 forces literals
    lzend_parsing all_literals = lzend_parse(seq, 1);
    CHECK(all_literals.z() == seq.size());
    for (const lzend_phrase& f : all_literals.phrases) CHECK(f.copy_len == 0);
    for (u64 h : {u64(1), u64(4), u64(64), u64(1) << 13}) {
        lzend_parsing p = lzend_parse(seq, h);
        for (const lzend_phrase& f : p.phrases) CHECK(f.copy_len + 1 <= h);
        CHECK(lzend_decode(p) == seq);
        if (prev_z) CHECK(p.z() <= prev_z);
        prev_z = p.z();
    }
    CHECK(lzend_parse(seq).z() <= prev_z);
}

TEST_CASE("z is n for all-distinct sequences and at most n always") {
    std::vector<i64> distinct;
    for (i64 v = 0; v < 100; ++v) distinct.push_back(v * 3 - 50);
    lzend_parsing p = lzend_parse(distinct);
    CHECK(p.z() == distinct.size());
    std::mt19937_64 rng(34);
    for (u32 round = 0; round < 40; ++round) {
        std::vector<i64> seq = oracle::random_seq(rng, 1 + rng() % 200, 2);
        CHECK(lzend_parse(seq).z() <= seq.size());
    }
}

TEST_CASE("decode rejects malformed parsings") {
    lzend_parsing bad;
    bad.n = 3;
    bad.phrases = {{0, 0, 1}, {2, 1, 2}}; // source 2 does not exist yet
    CHECK_THROWS_AS(lzend_decode(bad), std::invalid_argument);
}

TEST_CASE("decode round-trips 1000 random sequences") {
    std::mt19937_64 rng(35);
    for (u32 round = 0; round < 1000; ++round) {
        u64 n = 1 + rng() % 64;
        std::vector<i64> seq = oracle::random_seq(rng, n, 1 + rng() % 6);
        std::optional<u64> h = rng() % 2 ? std::optional<u64>{1 + rng() % 16} : std::nullopt;
        CHECK(lzend_decode(lzend_parse(seq, h)) == seq);
    }
}
