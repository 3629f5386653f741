#pragma once

#include <csai/bit_vector.hpp>
#include <csai/packed_vector.hpp>

namespace csai {

// Sparse increasing set of positions over [1, universe] (Elias-Fano layout,
// the s-array of Okanohara & Sadakane). Constant-time select, logarithmic rank.
class sparse_bits {
public:
    sparse_bits() = default;

    sparse_bits(const std::vector<u64>& positions, u64 universe) : m_(positions.size()), universe_(universe) {
        for (u64 i = 0; i + 1 < positions.size(); ++i)
            if (positions[i] >= positions[i + 1]) throw std::invalid_argument("sparse_bits: positions must be strictly increasing");
        if (m_ > 0 && positions.back() > universe) throw std::invalid_argument("sparse_bits: position beyond universe");
        low_width_ = 1;
        while (m_ > 0 && (universe_ / m_) >> low_width_) ++low_width_;
        max_high_ = m_ > 0 ? (positions.back() >> low_width_) : 0;
        lows_.reset(std::max<u64>(m_, 1), low_width_);
        highs_ = bit_vector_rs(m_ + max_high_ + 1);
        for (u64 i = 0; i < m_; ++i) {
            lows_.set(i, positions[i] & ((u64(1) << low_width_) - 1));
            highs_.set((positions[i] >> low_width_) + i + 1, true);
        }
        highs_.build_support();
    }

    u64 size() const { return m_; }
    u64 universe() const { return universe_; }

    // value of the k-th position, k in [1, m]
    u64 select(u64 k) const {
        if (k == 0 || k > m_) throw std::out_of_range("sparse_bits::select out of range");
        return ((highs_.select1(k) - k) << low_width_) | lows_.get(k - 1);
    }

    // number of stored positions <= v
    u64 rank(u64 v) const {
        if (m_ == 0 || v == 0) return 0;
        u64 bucket = v >> low_width_;
        if (bucket > max_high_) return m_;
        // ones before bucket end: positions with high part <= bucket
        u64 zeros_before = bucket + 1; // zeros delimit buckets 0..bucket
        u64 hi_end;
        if (zeros_before > highs_.zeros())
            hi_end = m_;
        else
            hi_end = highs_.select0(zeros_before) - zeros_before; // #ones before that zero
        u64 hi_begin = bucket == 0 ? 0 : highs_.select0(bucket) - bucket;
        // binary search lows within [hi_begin, hi_end)
        u64 lo = hi_begin, hi = hi_end, target = v & ((u64(1) << low_width_) - 1);
        while (lo < hi) {
            u64 mid = (lo + hi) / 2;
            if (lows_.get(mid) <= target)
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    }

    // greatest stored position <= v (0 if none)
    u64 pred(u64 v) const {
        u64 k = rank(v);
        return k == 0 ? 0 : select(k);
    }

    u64 size_in_bytes() const { return lows_.size_in_bytes() + highs_.size_in_bytes() + 24; }

    void save(std::ostream& os) const {
        io::put_u64(os, m_);
        io::put_u64(os, universe_);
        std::vector<u64> pos(m_);
        for (u64 i = 0; i < m_; ++i) pos[i] = select(i + 1);
        for (u64 p : pos) io::put_u64(os, p);
    }

    static sparse_bits load(std::istream& is) {
        u64 m = io::get_u64(is);
        u64 universe = io::get_u64(is);
        std::vector<u64> pos(m);
        for (u64& p : pos) p = io::get_u64(is);
        return sparse_bits(pos, universe);
    }

private:
    u64 m_ = 0;
    u64 universe_ = 0;
    u64 max_high_ = 0;
    u32 low_width_ = 1;
    packed_vector lows_;
    bit_vector_rs highs_;
};

} // namespace csai
