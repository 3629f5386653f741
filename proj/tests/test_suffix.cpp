#include <doctest.h>

#include <csai/suffix_structures.hpp>

#include "oracles.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace csai;

namespace {

std::vector<i64> to_i64(std::string_view s) {
    std::vector<i64> v;
    for (char c : s) v.push_back(static_cast<u8>(c));
    return v;
}

} // namespace

TEST_CASE("build_suffix_array on the worked examples") {
    CHECK(build_suffix_array(to_i64("banana")) == std::vector<u32>{6, 4, 2, 1, 5, 3});
    CHECK(build_suffix_array(to_i64("a")) == std::vector<u32>{1});
    CHECK(build_suffix_array(to_i64("ba")) == std::vector<u32>{2, 1});
    CHECK_THROWS_AS(build_suffix_array({}), std::invalid_argument);
}

TEST_CASE("build_suffix_array equals naive sort up to n = 2000") {
    std::mt19937_64 rng(21);
    for (u32 round = 0; round < 120; ++round) {
        u64 n = 1 + rng() % 300;
        u64 sigma = std::vector<u64>{1, 2, 4, 26, 200}[rng() % 5];
        std::vector<i64> seq = oracle::random_seq(rng, n, sigma);
        if (round % 3 == 0)
            for (i64& v : seq) v -= 100; // negative alphabets are fine
        CHECK(build_suffix_array(seq) == oracle::suffix_array(seq));
    }
    std::vector<i64> fib = oracle::fibonacci_word(2000);
    CHECK(build_suffix_array(fib) == oracle::suffix_array(fib));
    std::vector<i64> unary(2000, 7);
    CHECK(build_suffix_array(unary) == oracle::suffix_array(unary));
}

TEST_CASE("Kasai LCP equals naive pairwise lcp") {
    std::mt19937_64 rng(22);
    for (u32 round = 0; round < 60; ++round) {
        u64 n = 1 + rng() % 400;
        std::vector<i64> seq = oracle::random_seq(rng, n, 1 + rng() % 4);
        std::vector<u32> sa1 = build_suffix_array(seq);
        std::vector<u32> sa0(sa1);
        for (u32& v : sa0) --v;
        std::vector<u32> ranks(n);
        for (u64 i = 0; i < n; ++i) ranks[i] = static_cast<u32>(seq[i]);
        std::vector<u32> h = lcp_array_kasai(ranks, sa0);
        REQUIRE(h.size() == n);
        CHECK(h[0] == 0);
        for (u64 k = 1; k < n; ++k) CHECK(h[k] == oracle::lcp_of(seq, sa1[k - 1], sa1[k]));
    }
}

TEST_CASE("range_min equals scanning minimum, exhaustive on 512 values") {
    std::mt19937_64 rng(23);
    std::vector<u32> vals(512);
    for (u32& v : vals) v = static_cast<u32>(rng() % 50);
    range_min rm(vals);
    for (u64 l = 0; l < vals.size(); ++l) {
        u32 m = std::numeric_limits<u32>::max();
        for (u64 r = l; r < vals.size(); ++r) {
            m = std::min(m, vals[r]);
            CHECK(rm.query(l, r) == m);
        }
    }
}

TEST_CASE("build_lzend_context: reverse-order structures and the left-to-right inverse") {
    // the defining identity: ainv_rev[i-1] is the lex rank (0-based) of the
    // reverse of the prefix ending at position i-1 among reverse-seq suffixes
    std::mt19937_64 rng(24);
    for (u32 round = 0; round < 40; ++round) {
        u64 n = 1 + rng() % 120;
        std::vector<i64> seq = oracle::random_seq(rng, n, 1 + rng() % 3);
        suffix_context ctx = build_lzend_context(seq);
        std::vector<i64> rev(seq.rbegin(), seq.rend());
        std::vector<u32> sa_rev = oracle::suffix_array(rev);
        for (u64 i = 0; i < n; ++i) CHECK(ctx.sa_rev[i] == sa_rev[i] - 1);
        for (u64 k = 0; k < n; ++k) CHECK(ctx.ainv_rev[n - ctx.sa_rev[k] - 1] == k);
    }
    suffix_context one = build_lzend_context(std::vector<i64>{42});
    CHECK(one.ainv_rev == std::vector<u32>{0});
    // lcp over the reverse of "aaa" is [0, 1, 2]
    suffix_context aaa = build_lzend_context(to_i64("aaa"));
    CHECK(aaa.lcp == std::vector<u32>{0, 1, 2});
}

TEST_CASE("build_bwt_runs on the worked examples") {
    auto dense = [](std::string_view s) {
        std::vector<u32> v;
        for (char c : s) v.push_back(static_cast<u8>(c));
        return v;
    };
    {
        std::vector<u32> text = dense("banana");
        std::vector<u32> sa = {6, 4, 2, 1, 5, 3};
        bwt_runs runs = build_bwt_runs(text, sa);
        CHECK(runs.r == 3);
        CHECK(runs.run_starts == std::vector<u32>{1, 3, 4});
        CHECK(runs.run_heads == std::vector<u32>{'n', 'b', 'a'});
        CHECK(runs.sa_at_run_start == std::vector<u32>{6, 2, 1});
        CHECK(runs.sa_at_run_end == std::vector<u32>{4, 2, 3});
    }
    {
        std::vector<u32> text = dense("aaaa");
        std::vector<u32> sa = {4, 3, 2, 1};
        bwt_runs runs = build_bwt_runs(text, sa);
        CHECK(runs.r == 1);
        CHECK(runs.run_heads == std::vector<u32>{'a'});
    }
    {
        std::vector<u32> text = dense("ab");
        bwt_runs runs = build_bwt_runs(text, std::vector<u32>{1, 2});
        CHECK(runs.r == 2);
        CHECK(runs.run_heads == std::vector<u32>{'b', 'a'});
    }
}

TEST_CASE("differentiate/accumulate are inverse; banana example") {
    std::vector<u32> a = {6, 4, 2, 1, 5, 3};
    CHECK(differentiate(a) == std::vector<i64>{6, -2, -2, -1, 4, -2});
    CHECK(differentiate(std::vector<u32>{1}) == std::vector<i64>{1});
    std::mt19937_64 rng(25);
    for (u32 round = 0; round < 100; ++round) {
        u64 n = 1 + rng() % 200;
        std::vector<u32> perm(n);
        for (u64 i = 0; i < n; ++i) perm[i] = static_cast<u32>(i + 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(accumulate(differentiate(perm)) == perm);
    }
}

TEST_CASE("phi reconstruction from samples equals the direct table") {
    std::mt19937_64 rng(26);
    for (u32 round = 0; round < 150; ++round) {
        u64 n = 1 + rng() % 512;
        u64 sigma = std::vector<u64>{1, 2, 4, 16}[rng() % 4];
        std::vector<i64> seq = oracle::random_seq(rng, n, sigma);
        std::vector<u32> sa = build_suffix_array(seq);
        std::vector<u32> dense(n);
        for (u64 i = 0; i < n; ++i) dense[i] = static_cast<u32>(seq[i]);
        bwt_runs runs = build_bwt_runs(dense, sa);
        phi_samples phi = build_phi_samples(runs, sa);
        std::vector<u32> table = oracle::phi_table(sa);
        for (u64 v = 1; v <= n; ++v) CHECK(phi.phi(v) == table[v]);
        CHECK(phi.u.size() <= runs.r + 2); // run starts plus at most the wrap breakpoints
        // samples at run boundaries agree with A
        for (u64 k = 0; k < runs.r; ++k) {
            CHECK(runs.sa_at_run_start[k] == sa[runs.run_starts[k] - 1]);
            CHECK(runs.sa_at_run_end[k] == sa[runs.run_end(k + 1) - 1]);
        }
    }
}

TEST_CASE("phi iteration from A[n]'s position cycles through all text positions") {
    std::mt19937_64 rng(27);
    std::vector<i64> seq = oracle::random_seq(rng, 257, 3);
    std::vector<u32> sa = build_suffix_array(seq);
    std::vector<u32> dense(seq.size());
    for (u64 i = 0; i < seq.size(); ++i) dense[i] = static_cast<u32>(seq[i]);
    phi_samples phi = build_phi_samples(build_bwt_runs(dense, sa), sa);
    std::vector<bool> seen(seq.size() + 1, false);
    u32 v = sa[seq.size() - 1];
    for (u64 k = 0; k < seq.size(); ++k) {
        CHECK(!seen[v]);
        seen[v] = true;
        v = phi.phi(v);
    }
    CHECK(v == sa[seq.size() - 1]);
}

TEST_CASE("int64 file loader round-trips") {
    std::vector<i64> vals = {0, -1, 42, std::numeric_limits<i64>::min(), std::numeric_limits<i64>::max()};
    std::string path = "test_i64_tmp.bin";
    {
        std::ofstream out(path, std::ios::binary);
        for (i64 v : vals)
            for (int b = 0; b < 8; ++b) out.put(static_cast<char>((static_cast<u64>(v) >> (8 * b)) & 0xff));
    }
    CHECK(read_i64_file(path) == vals);
    std::remove(path.c_str());
}
