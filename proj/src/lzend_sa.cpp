#include <csai/lzend_sa.hpp>

#include <algorithm>

namespace csai {

lzend_sa_store lzend_sa_store::build(std::span<const u32> a, u64 max_phrase, lzend_sa_anchor anchor,
                                     std::vector<std::pair<u32, u32>> run_samples) {
    if (a.empty()) throw std::invalid_argument("lzend_sa_store: empty input");
    std::vector<i64> diff = differentiate(a);
    lzend_parsing parsing = lzend_parse(diff, max_phrase);
    u64 z = parsing.z();

    lzend_sa_store st;
    st.n_ = a.size();
    st.h_ = max_phrase;
    st.anchor_ = anchor;
    st.src_.reset(z, bit_width_for(z));
    st.end_.reset(z, bit_width_for(st.n_));
    st.ext_.resize(z);
    u64 pos = 0;
    for (u64 i = 0; i < z; ++i) {
        pos += parsing.phrases[i].copy_len + 1;
        st.src_.set(i, parsing.phrases[i].source);
        st.end_.set(i, pos);
        st.ext_[i] = parsing.phrases[i].ext;
    }

    if (anchor == lzend_sa_anchor::phrase_end) {
        st.samples_.reset(z, bit_width_for(st.n_));
        for (u64 i = 0; i < z; ++i) st.samples_.set(i, a[st.end_.get(i) - 1]);
    } else {
        if (run_samples.empty()) throw std::invalid_argument("lzend_sa_store: run-sample mode needs samples");
        std::sort(run_samples.begin(), run_samples.end());
        run_samples.erase(std::unique(run_samples.begin(), run_samples.end()), run_samples.end());
        if (run_samples.back().first != st.n_)
            throw std::invalid_argument("lzend_sa_store: run samples must cover position n");
        st.run_pos_.reset(run_samples.size(), bit_width_for(st.n_));
        st.run_val_.reset(run_samples.size(), bit_width_for(st.n_));
        for (u64 i = 0; i < run_samples.size(); ++i) {
            st.run_pos_.set(i, run_samples[i].first);
            st.run_val_.set(i, run_samples[i].second);
        }
    }
    return st;
}

u64 lzend_sa_store::locate_phrase(u64 pos) const {
    if (pos == 0 || pos > n_) throw std::out_of_range("lzend_sa_store::locate_phrase: pos out of range");
    u64 lo = 0, hi = src_.size() - 1; // invariant: end[hi] >= pos
    while (lo < hi) {
        u64 mid = (lo + hi) / 2;
        if (end_.get(mid) >= pos)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo + 1;
}

void lzend_sa_store::decode_diff(u64 x, u64 y, i64* out) const {
    // out receives d[x..y]; work stack of (lo, hi, out offset) segments
    struct segment {
        u64 lo, hi, out_off;
    };
    std::vector<segment> work;
    work.push_back({x, y, 0});
    while (!work.empty()) {
        segment s = work.back();
        work.pop_back();
        u64 i = locate_phrase(s.hi); // phrase covering the segment end
        while (true) {
            u64 phrase_start = i == 1 ? 1 : end_.get(i - 2) + 1;
            u64 phrase_end = end_.get(i - 1);
            u64 seg_lo = std::max(s.lo, phrase_start);
            u64 hi = s.hi;
            if (hi == phrase_end) { // extension symbol
                out[s.out_off + (hi - s.lo)] = ext_[i - 1];
                if (hi == s.lo) break;
                --hi;
            }
            if (hi >= seg_lo) {
                // copied part: positions map to the suffix ending at the source end
                u64 src_end = end_.get(src_.get(i - 1) - 1);
                u64 shift = phrase_end - 1 - hi; // distance from the copy's last symbol
                u64 map_hi = src_end - shift;
                u64 map_lo = map_hi - (hi - seg_lo);
                work.push_back({map_lo, map_hi, s.out_off + (seg_lo - s.lo)});
            }
            if (seg_lo == s.lo) break;
            s.hi = seg_lo - 1;
            --i;
        }
    }
}

std::vector<u32> lzend_sa_store::extract(u64 x, u64 len) const {
    if (x == 0 || x + len > n_) throw std::out_of_range("lzend_sa_store::extract: window out of range");
    u64 y = x + len;
    // anchor at the nearest absolute sample at or after the window end
    u64 anchor_pos;
    i64 anchor_val;
    if (anchor_ == lzend_sa_anchor::phrase_end) {
        u64 i = locate_phrase(y);
        anchor_pos = end_.get(i - 1);
        anchor_val = static_cast<i64>(samples_.get(i - 1));
    } else {
        u64 lo = 0, hi = run_pos_.size() - 1;
        while (lo < hi) {
            u64 mid = (lo + hi) / 2;
            if (run_pos_.get(mid) >= y)
                hi = mid;
            else
                lo = mid + 1;
        }
        anchor_pos = run_pos_.get(lo);
        anchor_val = static_cast<i64>(run_val_.get(lo));
    }

    // decode d[x .. anchor_pos] and rebuild right to left from the anchor
    u64 m = anchor_pos - x + 1;
    std::vector<i64> diff(m);
    decode_diff(x, anchor_pos, diff.data());
    std::vector<u32> out(len + 1);
    i64 cur = anchor_val;
    for (u64 q = anchor_pos; q > x + len; --q) cur -= diff[q - x];
    out[len] = static_cast<u32>(cur);
    for (u64 k = len; k-- > 0;) {
        cur -= diff[k + 1];
        out[k] = static_cast<u32>(cur);
    }
    return out;
}

u64 lzend_sa_store::size_in_bytes() const {
    return src_.size_in_bytes() + end_.size_in_bytes() + ext_.size() * 8 + samples_.size_in_bytes() +
           run_pos_.size_in_bytes() + run_val_.size_in_bytes() + 32;
}

void lzend_sa_store::save(std::ostream& os) const {
    io::put_u64(os, n_);
    io::put_u64(os, h_);
    io::put_u32(os, static_cast<u32>(anchor_));
    src_.save(os);
    end_.save(os);
    io::put_u64(os, ext_.size());
    for (i64 v : ext_) io::put_i64(os, v);
    samples_.save(os);
    run_pos_.save(os);
    run_val_.save(os);
}

lzend_sa_store lzend_sa_store::load(std::istream& is) {
    lzend_sa_store st;
    st.n_ = io::get_u64(is);
    st.h_ = io::get_u64(is);
    st.anchor_ = static_cast<lzend_sa_anchor>(io::get_u32(is));
    st.src_ = packed_vector::load(is);
    st.end_ = packed_vector::load(is);
    st.ext_.resize(io::get_u64(is));
    for (i64& v : st.ext_) v = io::get_i64(is);
    st.samples_ = packed_vector::load(is);
    st.run_pos_ = packed_vector::load(is);
    st.run_val_ = packed_vector::load(is);
    return st;
}

} // namespace csai
