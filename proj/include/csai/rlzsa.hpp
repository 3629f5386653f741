#pragma once

#include <csai/bit_vector.hpp>
#include <csai/packed_vector.hpp>
#include <csai/rlz.hpp>
#include <csai/sparse_bits.hpp>

namespace csai {

struct phrase_location {
    u64 x = 0;     // 1-based index of the phrase containing position b+1
    u64 x_cp = 0;  // copy phrases strictly before it
    u64 x_lp = 0;  // literal phrases strictly before it
    u64 p_x = 0;   // 1-based start position of the phrase
    u64 copies_stepped = 0; // traversal cost, for instrumentation
};

// Improved RLZSA: phrase-type bit vector, split literal/copy arrays, sampled
// copy-phrase start positions, and absolute-value samples V aligned with the
// start samples for standalone extraction.
class rlzsa_store {
public:
    static constexpr u64 kDefaultSampling = 4;

    rlzsa_store() = default;

    // phrases must decode to differentiate(a); a supplies the V samples
    static rlzsa_store build(const std::vector<rlz_phrase>& phrases, std::span<const i64> r,
                             std::span<const u32> a, u64 sampling = kDefaultSampling);

    u64 n() const { return n_; }
    u64 z() const { return z_; }
    u64 z_literal() const { return z_l_; }
    u64 z_copy() const { return z_c_; }
    u64 reference_size() const { return r_.size(); }
    u64 sampling() const { return a_; }

    i64 reference_value(u64 i) const { // 1-based
        return static_cast<i64>(r_.get(i - 1)) - static_cast<i64>(n_);
    }
    i64 literal_value(u64 i) const { // 1-based
        return static_cast<i64>(lp_.get(i - 1)) - static_cast<i64>(n_);
    }

    // phrase containing position b+1, b in [0, n-1]
    phrase_location locate_copy_phrase(u64 b) const;

    // A[b .. e] given a_b = A[b]
    std::vector<u32> extract_with_toehold(u64 b, u64 e, u32 a_b) const;

    // standalone A[b .. e], anchored at the V samples (or A[1] as fallback)
    std::vector<u32> extract(u64 b, u64 e) const;

    u64 size_in_bytes() const;
    void save(std::ostream& os) const;
    static rlzsa_store load(std::istream& is);

private:
    u64 n_ = 0, z_ = 0, z_l_ = 0, z_c_ = 0, a_ = kDefaultSampling;
    u32 a1_ = 0;        // A[1], the fallback anchor
    packed_vector r_;   // reference values, offset by +n
    bit_vector_rs pt_;  // 1 = literal
    packed_vector lp_;  // literal A^d values, offset by +n
    packed_vector sr_;  // copy sources, ceil(lg |R|) bits
    packed_vector cpl_; // copy lengths, 16 bit
    sparse_bits scp_;   // every a-th copy-phrase start position
    packed_vector v_;   // A value at each sampled start

    // decode A^d over positions [q0+1, e] accumulating from value cur = A[q0];
    // loc must locate the phrase containing q0+1. out may be null (skip output).
    void accumulate_forward(phrase_location loc, u64 q0, u64 e, i64 cur, u32* out) const;
};

// Original layout kept as the documented baseline: one unified phrase array
// (absolute literal values acting as decode anchors, every copy preceded by
// a literal), phrase-start samples every a-th phrase.
class rlzsa_legacy_store {
public:
    static constexpr u64 kDefaultSampling = 64;

    rlzsa_legacy_store() = default;

    static rlzsa_legacy_store build(const std::vector<rlz_phrase>& phrases, std::span<const i64> r,
                                    std::span<const u32> a, u64 sampling = kDefaultSampling);

    u64 n() const { return n_; }
    u64 z() const { return z_; }
    u64 reference_size() const { return r_.size(); }

    std::vector<u32> extract(u64 b, u64 e) const;
    std::vector<u32> extract_with_toehold(u64 b, u64 e, u32 a_b) const;

    u64 size_in_bytes() const;
    void save(std::ostream& os) const;
    static rlzsa_legacy_store load(std::istream& is);

private:
    u64 n_ = 0, z_ = 0, a_ = kDefaultSampling;
    packed_vector r_;  // reference values, offset by +n
    packed_vector s_;  // literal: absolute A value; copy: source position in R
    packed_vector pl_; // phrase lengths, 0 = literal
    packed_vector ps_; // start position of every a-th phrase
    // phrase containing position pos, via the samples then a linear walk
    std::pair<u64, u64> locate_phrase(u64 pos) const; // (phrase index, start)
};

} // namespace csai
