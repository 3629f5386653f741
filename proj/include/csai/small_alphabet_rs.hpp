#pragma once

#include <csai/common.hpp>

namespace csai {

// Block-sampled successor/predecessor tables for small alphabets.
// For a sequence T over the dense alphabet [1, sigma], answers
//   succ_occ(c, i) = smallest j > i with T[j] = c   (n+1 if none)
//   pred_occ(c, i) = largest  j <= i with T[j] = c  (0 if none)
// by one table lookup plus a scan of at most B = sigma*s positions.
class small_alphabet_rs {
public:
    small_alphabet_rs() = default;

    explicit small_alphabet_rs(std::vector<u32> seq, u32 sigma, u32 s = 4)
        : seq_(std::move(seq)), sigma_(sigma), block_(std::max<u64>(u64(sigma) * s, 1)) {
        u64 n = seq_.size();
        u64 blocks = n / block_;
        x_.assign(blocks * sigma_, static_cast<u32>(n + 1));
        y_.assign(blocks * sigma_, 0);
        // row b-1 serves boundary b*block: X = first occurrence strictly after
        // it, Y = last occurrence strictly before it
        std::vector<u32> next(sigma_, static_cast<u32>(n + 1));
        for (u64 j = n; j > blocks * block_; --j) next[seq_[j - 1] - 1] = static_cast<u32>(j);
        for (u64 b = blocks; b-- > 0;) {
            for (u32 c = 0; c < sigma_; ++c) x_[b * sigma_ + c] = next[c];
            for (u64 j = (b + 1) * block_; j > b * block_; --j) next[seq_[j - 1] - 1] = static_cast<u32>(j);
        }
        std::vector<u32> prev(sigma_, 0);
        for (u64 b = 1; b <= blocks; ++b) {
            for (u64 j = (b - 1) * block_ + 1; j < b * block_; ++j) prev[seq_[j - 1] - 1] = static_cast<u32>(j);
            for (u32 c = 0; c < sigma_; ++c) y_[(b - 1) * sigma_ + c] = prev[c];
            prev[seq_[b * block_ - 1] - 1] = static_cast<u32>(b * block_);
        }
    }

    u64 size() const { return seq_.size(); }
    u32 sigma() const { return sigma_; }
    u64 block_size() const { return block_; }

    u64 succ_occ(u32 c, u64 i) const {
        u64 n = seq_.size();
        if (c == 0 || c > sigma_ || i >= n) return n + 1;
        u64 b = (i + block_ - 1) / block_; // boundary at or after i
        if (b == 0) b = 1;
        u64 blocks = n / block_;
        u64 p = b <= blocks ? x_[(b - 1) * sigma_ + (c - 1)] : n + 1;
        for (u64 j = std::min(n, b * block_); j > i; --j) {
            ++scan_touches;
            if (seq_[j - 1] == c) p = j;
        }
        return p;
    }

    u64 pred_occ(u32 c, u64 i) const {
        u64 n = seq_.size();
        if (c == 0 || c > sigma_ || i == 0) return 0;
        if (i > n) i = n;
        u64 b = i / block_;
        u64 p = b >= 1 ? y_[(b - 1) * sigma_ + (c - 1)] : 0;
        for (u64 j = b >= 1 ? b * block_ : 1; j <= i; ++j) { // Y excludes the boundary itself
            ++scan_touches;
            if (seq_[j - 1] == c) p = j;
        }
        return p;
    }

    // per-thread count of sequence positions scanned by queries
    static thread_local u64 scan_touches;

    u32 symbol(u64 i) const { return seq_[i - 1]; } // i in [1, n]

    u64 size_in_bytes() const { return seq_.size() * 4 + (x_.size() + y_.size()) * 4 + 32; }

private:
    std::vector<u32> seq_;
    u32 sigma_ = 0;
    u64 block_ = 1;
    std::vector<u32> x_, y_; // row-major [block][symbol]
};

} // namespace csai
