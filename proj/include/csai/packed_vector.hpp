#pragma once

#include <csai/common.hpp>

namespace csai {

// Fixed-width integer array packed into 64-bit words.
class packed_vector {
public:
    packed_vector() = default;

    packed_vector(u64 size, u32 width) { reset(size, width); }

    void reset(u64 size, u32 width) {
        if (width == 0 || width > 64) throw std::invalid_argument("packed_vector: width must be in [1,64]");
        size_ = size;
        width_ = width;
        words_.assign((size * width + 63) / 64, 0);
    }

    u64 size() const { return size_; }
    u32 width() const { return width_; }
    bool empty() const { return size_ == 0; }

    u64 get(u64 i) const {
        u64 bit = i * width_;
        u64 word = bit >> 6, off = bit & 63;
        u64 v = words_[word] >> off;
        if (off + width_ > 64) v |= words_[word + 1] << (64 - off);
        return width_ == 64 ? v : (v & ((u64(1) << width_) - 1));
    }

    void set(u64 i, u64 v) {
        u64 mask = width_ == 64 ? ~u64(0) : ((u64(1) << width_) - 1);
        v &= mask;
        u64 bit = i * width_;
        u64 word = bit >> 6, off = bit & 63;
        words_[word] = (words_[word] & ~(mask << off)) | (v << off);
        if (off + width_ > 64) {
            u32 spill = static_cast<u32>(off + width_ - 64);
            u64 hi_mask = (u64(1) << spill) - 1;
            words_[word + 1] = (words_[word + 1] & ~hi_mask) | (v >> (64 - off));
        }
    }

    u64 size_in_bytes() const { return words_.size() * 8 + 16; }

    void save(std::ostream& os) const {
        io::put_u64(os, size_);
        io::put_u32(os, width_);
        for (u64 w : words_) io::put_u64(os, w);
    }

    static packed_vector load(std::istream& is) {
        packed_vector p;
        p.size_ = io::get_u64(is);
        p.width_ = io::get_u32(is);
        p.words_.resize((p.size_ * p.width_ + 63) / 64);
        for (u64& w : p.words_) w = io::get_u64(is);
        return p;
    }

    bool operator==(const packed_vector&) const = default;

    // pack values[0..m) choosing the width from the maximum value
    template <typename T>
    static packed_vector pack(const std::vector<T>& values) {
        u64 maxv = 0;
        for (const T& v : values) maxv = std::max<u64>(maxv, static_cast<u64>(v));
        packed_vector p(values.size(), bit_width_for(maxv));
        for (u64 i = 0; i < values.size(); ++i) p.set(i, static_cast<u64>(values[i]));
        return p;
    }

private:
    u64 size_ = 0;
    u32 width_ = 1;
    std::vector<u64> words_;
};

} // namespace csai
