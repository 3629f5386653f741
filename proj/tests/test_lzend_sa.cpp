#include <doctest.h>

#include <csai/lzend_sa.hpp>
#include <csai/suffix_structures.hpp>

#include "oracles.hpp"

#include <random>
#include <sstream>

using namespace csai;

namespace {

std::vector<std::pair<u32, u32>> run_sample_pairs(const bwt_runs& runs) {
    std::vector<std::pair<u32, u32>> pairs;
    for (u64 k = 0; k < runs.r; ++k) {
        pairs.emplace_back(runs.run_starts[k], runs.sa_at_run_start[k]);
        pairs.emplace_back(runs.run_end(k + 1), runs.sa_at_run_end[k]);
    }
    return pairs;
}

std::vector<u32> sa_of_random_text(std::mt19937_64& rng, u64 n, u32 sigma, std::vector<u32>* dense_out) {
    std::vector<i64> seq = oracle::random_seq(rng, n, sigma);
    std::vector<u32> sa = build_suffix_array(seq);
    if (dense_out) {
        dense_out->resize(n);
        for (u64 i = 0; i < n; ++i) (*dense_out)[i] = static_cast<u32>(seq[i]);
    }
    return sa;
}

} // namespace

TEST_CASE("lzend_sa_store basics") {
    {
        std::vector<u32> a = {1};
        lzend_sa_store st = lzend_sa_store::build(a);
        CHECK(st.z() == 1);
        CHECK(st.extract(1, 0) == std::vector<u32>{1});
    }
    {
        // banana suffix array
        std::vector<u32> a = {6, 4, 2, 1, 5, 3};
        lzend_sa_store st = lzend_sa_store::build(a);
        CHECK(st.extract(1, 5) == a);
        // end array equals the cumulative phrase lengths of the parsing
        lzend_parsing p = lzend_parse(differentiate(a), lzend_sa_store::kDefaultMaxPhrase);
        std::vector<u64> ends = p.end_positions();
        for (u64 i = 1; i <= a.size(); ++i) {
            u64 phrase = st.locate_phrase(i);
            CHECK(ends[phrase - 1] >= i);
            if (phrase > 1) CHECK(ends[phrase - 2] < i);
        }
    }
    CHECK_THROWS_AS(lzend_sa_store::build({}), std::invalid_argument);
}

TEST_CASE("locate_phrase equals a linear scan, exhaustive") {
    std::mt19937_64 rng(41);
    std::vector<u32> a(512);
    for (u64 i = 0; i < a.size(); ++i) a[i] = static_cast<u32>(i + 1);
    std::shuffle(a.begin(), a.end(), rng);
    lzend_sa_store st = lzend_sa_store::build(a, 16);
    lzend_parsing p = lzend_parse(differentiate(a), 16);
    std::vector<u64> ends = p.end_positions();
    CHECK(st.locate_phrase(1) == 1);
    CHECK(st.locate_phrase(a.size()) == st.z());
    for (u64 pos = 1; pos <= a.size(); ++pos) {
        u64 want = 0;
        while (ends[want] < pos) ++want;
        CHECK(st.locate_phrase(pos) == want + 1);
    }
    CHECK_THROWS_AS(st.locate_phrase(0), std::out_of_range);
    CHECK_THROWS_AS(st.locate_phrase(a.size() + 1), std::out_of_range);
}

TEST_CASE("extraction is exact for every window, both anchoring modes") {
    std::mt19937_64 rng(42);
    for (u32 round = 0; round < 10; ++round) {
        u64 n = 1 + rng() % 160;
        std::vector<u32> dense;
        std::vector<u32> sa = sa_of_random_text(rng, n, 1 + rng() % 4, &dense);
        bwt_runs runs = build_bwt_runs(dense, sa);
        u64 h = std::vector<u64>{4, 16, u64(1) << 13}[rng() % 3];
        lzend_sa_store phrase_mode = lzend_sa_store::build(sa, h);
        lzend_sa_store run_mode =
            lzend_sa_store::build(sa, h, lzend_sa_anchor::run_sample, run_sample_pairs(runs));
        for (u64 x = 1; x <= n; ++x) {
            for (u64 len = 0; x + len <= n; ++len) {
                std::vector<u32> want(sa.begin() + x - 1, sa.begin() + x + len);
                CHECK(phrase_mode.extract(x, len) == want);
                CHECK(run_mode.extract(x, len) == want);
            }
        }
        CHECK_THROWS_AS(phrase_mode.extract(0, 1), std::out_of_range);
        CHECK_THROWS_AS(phrase_mode.extract(1, n), std::out_of_range);
    }
}

TEST_CASE("phrase lengths respect the cap") {
    std::mt19937_64 rng(43);
    std::vector<u32> sa = sa_of_random_text(rng, 400, 2, nullptr);
    for (u64 h : {u64(1), u64(4), u64(64), u64(1) << 13}) {
        lzend_sa_store st = lzend_sa_store::build(sa, h);
        lzend_parsing p = lzend_parse(differentiate(sa), h);
        u64 prev = 0;
        for (u64 e : p.end_positions()) {
            CHECK(e - prev <= h);
            prev = e;
        }
        CHECK(st.extract(1, sa.size() - 1) == sa);
    }
}

TEST_CASE("store serialization round-trips") {
    std::mt19937_64 rng(44);
    std::vector<u32> sa = sa_of_random_text(rng, 200, 3, nullptr);
    lzend_sa_store st = lzend_sa_store::build(sa, 64);
    std::ostringstream os(std::ios::binary);
    st.save(os);
    std::istringstream is(os.str(), std::ios::binary);
    lzend_sa_store back = lzend_sa_store::load(is);
    CHECK(back == st);
    CHECK(back.extract(3, 10) == st.extract(3, 10));
}

TEST_CASE("random windows on a repetitive input at n = 100000") {
    // repetitive text: few BWT runs, long LZ-End phrases
    std::mt19937_64 rng(45);
    std::vector<i64> base = oracle::random_seq(rng, 500, 4);
    std::vector<i64> text;
    while (text.size() < 100000) {
        text.insert(text.end(), base.begin(), base.end());
        if (rng() % 3 == 0) text.push_back(1 + static_cast<i64>(rng() % 4));
    }
    text.resize(100000);
    std::vector<u32> sa = build_suffix_array(text);
    lzend_sa_store st = lzend_sa_store::build(sa);
    std::uniform_int_distribution<u64> xdist(1, sa.size());
    for (u32 q = 0; q < 2000; ++q) {
        u64 x = xdist(rng);
        u64 len = std::min<u64>(rng() % 64, sa.size() - x);
        std::vector<u32> want(sa.begin() + x - 1, sa.begin() + x + len);
        CHECK(st.extract(x, len) == want);
    }
}
