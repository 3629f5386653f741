#pragma once

#include <bit>
#include <csai/common.hpp>

namespace csai {

// Plain bit vector with superblock-sampled rank and sampled select.
// Positions are 1-based in queries; rank_1(i) counts ones in [1, i].
class bit_vector_rs {
public:
    bit_vector_rs() = default;

    explicit bit_vector_rs(u64 size) : size_(size), words_((size + 63) / 64, 0) {}

    u64 size() const { return size_; }

    void set(u64 i, bool v) { // i in [1, size]
        u64 k = i - 1;
        if (v)
            words_[k >> 6] |= u64(1) << (k & 63);
        else
            words_[k >> 6] &= ~(u64(1) << (k & 63));
    }

    bool get(u64 i) const {
        u64 k = i - 1;
        return (words_[k >> 6] >> (k & 63)) & 1;
    }

    // call once after all bits are set
    void build_support() {
        super_rank_.assign(words_.size() / kWordsPerSuper + 2, 0);
        u64 ones = 0;
        for (u64 w = 0; w < words_.size(); ++w) {
            if (w % kWordsPerSuper == 0) super_rank_[w / kWordsPerSuper] = ones;
            ones += std::popcount(words_[w]);
        }
        super_rank_[words_.size() / kWordsPerSuper + 1] = ones;
        ones_ = ones;
        build_select_samples(select1_, true);
        build_select_samples(select0_, false);
    }

    u64 ones() const { return ones_; }
    u64 zeros() const { return size_ - ones_; }

    u64 rank1(u64 i) const { // #ones in [1, i]; rank1(0) = 0
        if (i == 0) return 0;
        if (i > size_) i = size_;
        u64 k = i - 1;
        u64 w = k >> 6;
        u64 r = super_rank_[w / kWordsPerSuper];
        for (u64 x = (w / kWordsPerSuper) * kWordsPerSuper; x < w; ++x) r += std::popcount(words_[x]);
        u64 rem = (k & 63) + 1;
        u64 mask = rem == 64 ? ~u64(0) : ((u64(1) << rem) - 1);
        return r + std::popcount(words_[w] & mask);
    }

    u64 rank0(u64 i) const { return (i > size_ ? size_ : i) - rank1(i); }

    // position of the k-th one (k in [1, ones]); throws if out of range
    u64 select1(u64 k) const { return select_impl(k, true); }
    u64 select0(u64 k) const { return select_impl(k, false); }

    u64 size_in_bytes() const {
        return words_.size() * 8 + super_rank_.size() * 8 + (select1_.size() + select0_.size()) * 8 + 24;
    }

    void save(std::ostream& os) const {
        io::put_u64(os, size_);
        for (u64 w : words_) io::put_u64(os, w);
    }

    static bit_vector_rs load(std::istream& is) {
        bit_vector_rs b(io::get_u64(is));
        for (u64& w : b.words_) w = io::get_u64(is);
        b.build_support();
        return b;
    }

    bool operator==(const bit_vector_rs& o) const { return size_ == o.size_ && words_ == o.words_; }

private:
    static constexpr u64 kWordsPerSuper = 8;   // 512-bit superblocks
    static constexpr u64 kSelectSample = 512;  // every 512th 1 (or 0)

    u64 size_ = 0;
    u64 ones_ = 0;
    std::vector<u64> words_;
    std::vector<u64> super_rank_;
    std::vector<u64> select1_, select0_; // word index of every kSelectSample-th bit

    void build_select_samples(std::vector<u64>& out, bool one) {
        out.clear();
        u64 seen = 0, next_target = 1;
        for (u64 w = 0; w < words_.size(); ++w) {
            u64 word = one ? words_[w] : ~words_[w];
            if (w == words_.size() - 1 && size_ % 64 != 0) word &= (u64(1) << (size_ % 64)) - 1;
            u64 c = std::popcount(word);
            while (seen + c >= next_target) {
                out.push_back(w);
                next_target += kSelectSample;
            }
            seen += c;
        }
    }

    u64 select_impl(u64 k, bool one) const {
        u64 total = one ? ones_ : zeros();
        if (k == 0 || k > total) throw std::out_of_range("bit_vector_rs::select out of range");
        const std::vector<u64>& samples = one ? select1_ : select0_;
        u64 w = samples[(k - 1) / kSelectSample];
        u64 seen = count_before_word(w, one);
        for (;; ++w) {
            u64 word = one ? words_[w] : ~words_[w];
            if (w == words_.size() - 1 && size_ % 64 != 0) word &= (u64(1) << (size_ % 64)) - 1;
            u64 c = std::popcount(word);
            if (seen + c >= k) {
                u64 need = k - seen;
                u64 x = word;
                for (u64 j = 1; j < need; ++j) x &= x - 1; // drop lowest set bits
                return w * 64 + std::countr_zero(x) + 1;
            }
            seen += c;
        }
    }

    u64 count_before_word(u64 w, bool one) const {
        u64 r = super_rank_[w / kWordsPerSuper];
        for (u64 x = (w / kWordsPerSuper) * kWordsPerSuper; x < w; ++x) r += std::popcount(words_[x]);
        return one ? r : w * 64 - r;
    }
};

} // namespace csai
