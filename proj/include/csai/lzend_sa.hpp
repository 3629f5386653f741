#pragma once

#include <csai/lzend.hpp>
#include <csai/packed_vector.hpp>

namespace csai {

enum class lzend_sa_anchor : u32 {
    phrase_end = 0, // value samples A' at every phrase end
    run_sample = 1  // anchor at BWT run-boundary samples instead (unbounded distance)
};

// LZ-End-compressed differential suffix array with windowed extraction:
// the parsing of A^d as arrays src/end/ext plus absolute-value samples.
class lzend_sa_store {
public:
    static constexpr u64 kDefaultMaxPhrase = u64(1) << 13;

    lzend_sa_store() = default;

    // a: the array to compress (1-based values of a permutation, or any u32 array)
    // run-sample anchoring needs the (position, value) pairs of the host index,
    // sorted by position; pass {} for phrase-end mode
    static lzend_sa_store build(std::span<const u32> a, u64 max_phrase = kDefaultMaxPhrase,
                                lzend_sa_anchor anchor = lzend_sa_anchor::phrase_end,
                                std::vector<std::pair<u32, u32>> run_samples = {});

    u64 n() const { return n_; }
    u64 z() const { return src_.size(); }
    u64 max_phrase() const { return h_; }
    lzend_sa_anchor anchor() const { return anchor_; }

    // smallest phrase index (1-based) whose end position is >= pos
    u64 locate_phrase(u64 pos) const;

    // A[x .. x+len], 1-based, len may be 0
    std::vector<u32> extract(u64 x, u64 len) const;

    u64 size_in_bytes() const;

    void save(std::ostream& os) const;
    static lzend_sa_store load(std::istream& is);

    bool operator==(const lzend_sa_store&) const = default;

private:
    u64 n_ = 0;
    u64 h_ = kDefaultMaxPhrase;
    lzend_sa_anchor anchor_ = lzend_sa_anchor::phrase_end;
    packed_vector src_;       // source phrase per phrase, ceil(lg z) bits
    packed_vector end_;       // cumulative end positions, ceil(lg n) bits
    std::vector<i64> ext_;    // extension values, 64-bit signed
    packed_vector samples_;   // A' (phrase-end mode), ceil(lg n) bits
    packed_vector run_pos_;   // run-sample mode: sorted anchor positions
    packed_vector run_val_;   // and the A values at them

    // decode d[x..y] of the underlying differential array (1-based window)
    void decode_diff(u64 x, u64 y, i64* out) const;
};

} // namespace csai
