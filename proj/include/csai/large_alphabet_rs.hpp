#pragma once

#include <csai/sparse_bits.hpp>

namespace csai {

// Rank/select over a sequence with a large dense alphabet [1, sigma].
// Cumulative counts C, occurrence lists O grouped by symbol, and an s-array
// per symbol with more than `sarray_threshold` occurrences. Rank dispatches
// on the occurrence count: linear scan, binary search, or s-array.
class large_alphabet_rs {
public:
    large_alphabet_rs() = default;

    explicit large_alphabet_rs(std::span<const u32> seq, u32 sigma,
                               u32 linear_threshold = 16, u32 sarray_threshold = 512)
        : n_(seq.size()), sigma_(sigma), linear_(linear_threshold), sarray_(sarray_threshold) {
        c_.assign(sigma_ + 2, 0);
        for (u32 v : seq) {
            if (v == 0 || v > sigma_) throw std::invalid_argument("large_alphabet_rs: symbol out of range");
            ++c_[v + 1];
        }
        for (u32 c = 1; c <= sigma_ + 1; ++c) c_[c] += c_[c - 1];
        o_.assign(n_, 0);
        std::vector<u64> fill(c_.begin(), c_.end() - 1);
        for (u64 i = 0; i < n_; ++i) o_[fill[seq[i]]++] = static_cast<u32>(i + 1);
        s_.resize(sigma_ + 1);
        for (u32 c = 1; c <= sigma_; ++c) {
            u64 o = c_[c + 1] - c_[c];
            if (o > sarray_) {
                std::vector<u64> pos(o_.begin() + c_[c], o_.begin() + c_[c + 1]);
                s_[c] = sparse_bits(pos, n_);
            }
        }
    }

    u64 size() const { return n_; }
    u32 sigma() const { return sigma_; }
    u64 occurrences(u32 c) const { return (c == 0 || c > sigma_) ? 0 : c_[c + 1] - c_[c]; }

    // position of the k-th occurrence of c, k in [1, occurrences(c)]
    u64 select(u32 c, u64 k) const {
        if (k == 0 || k > occurrences(c)) throw std::out_of_range("large_alphabet_rs::select out of range");
        return o_[c_[c] + k - 1];
    }

    // number of occurrences of c in positions [1, i]
    u64 rank(u32 c, u64 i) const {
        if (c == 0 || c > sigma_ || i == 0) return 0;
        if (i > n_) i = n_;
        u64 o = c_[c + 1] - c_[c];
        if (o == 0) return 0;
        if (o > sarray_) return s_[c].rank(i);
        const u32* first = o_.data() + c_[c];
        if (o > linear_) {
            u64 lo = 0, hi = o;
            while (lo < hi) {
                u64 mid = (lo + hi) / 2;
                if (first[mid] <= i)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            return lo;
        }
        u64 k = 0;
        while (k < o && first[k] <= i) ++k;
        return k;
    }

    u64 size_in_bytes() const {
        u64 b = c_.size() * 8 + o_.size() * 4 + 32;
        for (const sparse_bits& s : s_) b += s.size() > 0 ? s.size_in_bytes() : 0;
        return b;
    }

private:
    u64 n_ = 0;
    u32 sigma_ = 0;
    u32 linear_ = 16;
    u32 sarray_ = 512;
    std::vector<u64> c_;
    std::vector<u32> o_;
    std::vector<sparse_bits> s_;
};

} // namespace csai
