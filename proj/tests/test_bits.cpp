#include <doctest.h>

#include <csai/bit_vector.hpp>
#include <csai/packed_vector.hpp>
#include <csai/sparse_bits.hpp>

#include <random>
#include <sstream>

using namespace csai;

TEST_CASE("packed_vector stores and round-trips values at any width") {
    std::mt19937_64 rng(1);
    for (u32 width : {1u, 3u, 7u, 16u, 31u, 33u, 63u, 64u}) {
        u64 mask = width == 64 ? ~u64(0) : (u64(1) << width) - 1;
        packed_vector p(257, width);
        std::vector<u64> ref(257);
        for (u64 i = 0; i < ref.size(); ++i) {
            ref[i] = rng() & mask;
            p.set(i, ref[i]);
        }
        for (u64 i = 0; i < ref.size(); ++i) CHECK(p.get(i) == ref[i]);
        std::ostringstream os(std::ios::binary);
        p.save(os);
        std::istringstream is(os.str(), std::ios::binary);
        CHECK(packed_vector::load(is) == p);
    }
}

TEST_CASE("bit_vector_rs rank and select match a scan") {
    std::mt19937_64 rng(2);
    for (u64 n : {1ull, 63ull, 64ull, 65ull, 1000ull, 4096ull}) {
        for (double density : {0.02, 0.5, 0.93}) {
            bit_vector_rs bv(n);
            std::vector<bool> ref(n + 1, false);
            std::bernoulli_distribution coin(density);
            for (u64 i = 1; i <= n; ++i)
                if (coin(rng)) {
                    bv.set(i, true);
                    ref[i] = true;
                }
            bv.build_support();
            u64 ones = 0;
            std::vector<u64> pos1, pos0;
            for (u64 i = 1; i <= n; ++i) {
                if (ref[i]) {
                    ++ones;
                    pos1.push_back(i);
                } else {
                    pos0.push_back(i);
                }
                CHECK(bv.rank1(i) == ones);
                CHECK(bv.rank0(i) == i - ones);
            }
            for (u64 k = 1; k <= pos1.size(); ++k) CHECK(bv.select1(k) == pos1[k - 1]);
            for (u64 k = 1; k <= pos0.size(); ++k) CHECK(bv.select0(k) == pos0[k - 1]);
            CHECK_THROWS_AS(bv.select1(pos1.size() + 1), std::out_of_range);
        }
    }
}

TEST_CASE("sparse_bits select/rank/pred over random position sets") {
    std::mt19937_64 rng(3);
    for (u64 universe : {40ull, 1000ull, 100000ull}) {
        for (double density : {0.001, 0.05, 0.6}) {
            std::vector<u64> pos;
            std::bernoulli_distribution coin(density);
            for (u64 v = 1; v <= universe; ++v)
                if (coin(rng)) pos.push_back(v);
            if (pos.empty()) continue;
            sparse_bits sb(pos, universe);
            REQUIRE(sb.size() == pos.size());
            for (u64 k = 1; k <= pos.size(); ++k) CHECK(sb.select(k) == pos[k - 1]);
            std::uniform_int_distribution<u64> qdist(0, universe + 3);
            for (u64 q = 0; q < 400; ++q) {
                u64 v = qdist(rng);
                u64 expect = static_cast<u64>(std::upper_bound(pos.begin(), pos.end(), v) - pos.begin());
                CHECK(sb.rank(v) == expect);
                CHECK(sb.pred(v) == (expect == 0 ? 0 : pos[expect - 1]));
            }
        }
    }
}

TEST_CASE("sparse_bits handles the empty set") {
    sparse_bits sb({}, 100);
    CHECK(sb.rank(50) == 0);
    CHECK(sb.pred(50) == 0);
    CHECK_THROWS_AS(sb.select(1), std::out_of_range);
}
