#include <csai/rlzsa.hpp>

namespace csai {

rlzsa_store rlzsa_store::build(const std::vector<rlz_phrase>& phrases, std::span<const i64> r,
                               std::span<const u32> a, u64 sampling) {
    if (sampling == 0) throw std::invalid_argument("rlzsa_store: sampling must be >= 1");
    rlzsa_store st;
    st.n_ = a.size();
    st.z_ = phrases.size();
    st.a_ = sampling;
    st.a1_ = a.empty() ? 0 : a[0];

    u64 offset = st.n_;
    st.r_.reset(std::max<u64>(r.size(), 1), bit_width_for(2 * st.n_ + 1));
    for (u64 i = 0; i < r.size(); ++i) st.r_.set(i, static_cast<u64>(r[i] + static_cast<i64>(offset)));

    st.pt_ = bit_vector_rs(std::max<u64>(st.z_, 1));
    std::vector<i64> lits;
    std::vector<u64> srcs, lens, starts, sample_starts, sample_vals;
    u64 pos = 1; // start of the current phrase
    for (u64 i = 0; i < st.z_; ++i) {
        const rlz_phrase& f = phrases[i];
        if (f.is_literal) {
            st.pt_.set(i + 1, true);
            lits.push_back(f.literal);
            pos += 1;
        } else {
            if (f.len < 2 || f.len > kRlzMaxCopyLen || f.src == 0 || f.src + f.len - 1 > r.size())
                throw std::invalid_argument("rlzsa_store: inconsistent phrase stream");
            srcs.push_back(f.src);
            lens.push_back(f.len);
            starts.push_back(pos);
            if (starts.size() % sampling == 0) {
                if (pos > st.n_) throw std::invalid_argument("rlzsa_store: phrase stream too long");
                sample_starts.push_back(pos);
                sample_vals.push_back(a[pos - 1]);
            }
            pos += f.len;
        }
    }
    if (pos != st.n_ + 1) throw std::invalid_argument("rlzsa_store: phrases do not cover the input");
    st.z_l_ = lits.size();
    st.z_c_ = srcs.size();
    st.pt_.build_support();

    st.lp_.reset(std::max<u64>(st.z_l_, 1), bit_width_for(2 * st.n_ + 1));
    for (u64 i = 0; i < st.z_l_; ++i) st.lp_.set(i, static_cast<u64>(lits[i] + static_cast<i64>(offset)));
    st.sr_.reset(std::max<u64>(st.z_c_, 1), bit_width_for(std::max<u64>(r.size(), 1)));
    for (u64 i = 0; i < st.z_c_; ++i) st.sr_.set(i, srcs[i]);
    st.cpl_.reset(std::max<u64>(st.z_c_, 1), 16); // length - 1, so 2^16 fits
    for (u64 i = 0; i < st.z_c_; ++i) st.cpl_.set(i, lens[i] - 1);
    st.scp_ = sparse_bits(sample_starts, st.n_ + 1);
    st.v_.reset(std::max<u64>(sample_vals.size(), 1), bit_width_for(st.n_));
    for (u64 i = 0; i < sample_vals.size(); ++i) st.v_.set(i, sample_vals[i]);
    return st;
}

phrase_location rlzsa_store::locate_copy_phrase(u64 b) const {
    if (b >= n_) throw std::out_of_range("rlzsa_store::locate_copy_phrase: b out of range");
    u64 target = b + 1;
    phrase_location loc;
    u64 k = scp_.rank(target); // sampled copy-phrase starts at or before the target
    if (k == 0) {
        loc.x = 1;
        loc.p_x = 1;
        loc.x_cp = 0;
    } else {
        loc.x_cp = a_ * k - 1; // copies strictly before the sampled one
        loc.x = pt_.select0(a_ * k);
        loc.p_x = scp_.select(k);
    }
    loc.x_lp = loc.x - 1 - loc.x_cp;

    while (true) {
        if (loc.x > z_) throw std::logic_error("rlzsa_store: traversal past the last phrase");
        if (pt_.get(loc.x)) {
            // jump over the whole literal block at once
            u64 next_copy = loc.x_cp + 1 <= z_c_ ? pt_.select0(loc.x_cp + 1) : z_ + 1;
            u64 block = next_copy - loc.x; // literals in [x, next_copy)
            if (loc.p_x + block > target) {
                u64 step = target - loc.p_x;
                loc.x += step;
                loc.x_lp += step;
                loc.p_x = target;
                return loc;
            }
            loc.x = next_copy;
            loc.x_lp += block;
            loc.p_x += block;
        } else {
            u64 len = cpl_.get(loc.x_cp) + 1;
            if (loc.p_x + len > target) return loc;
            ++loc.copies_stepped;
            loc.p_x += len;
            loc.x += 1;
            loc.x_cp += 1;
        }
    }
}

void rlzsa_store::accumulate_forward(phrase_location loc, u64 q0, u64 e, i64 cur, u32* out) const {
    u64 q = q0;
    while (q < e) {
        if (pt_.get(loc.x)) {
            cur += literal_value(loc.x_lp + 1);
            ++q;
            if (out) out[q - q0 - 1] = static_cast<u32>(cur);
            loc.x += 1;
            loc.x_lp += 1;
            loc.p_x = q + 1;
        } else {
            u64 len = cpl_.get(loc.x_cp) + 1;
            u64 src = sr_.get(loc.x_cp);
            u64 off = q + 1 - loc.p_x; // offset of the next position within the phrase
            for (; off < len && q < e; ++off) {
                cur += reference_value(src + off);
                ++q;
                if (out) out[q - q0 - 1] = static_cast<u32>(cur);
            }
            if (off == len) {
                loc.x += 1;
                loc.x_cp += 1;
                loc.p_x = q + 1;
            }
        }
    }
}

std::vector<u32> rlzsa_store::extract_with_toehold(u64 b, u64 e, u32 a_b) const {
    if (b == 0 || b > e || e > n_) throw std::out_of_range("rlzsa_store::extract_with_toehold: bad range");
    std::vector<u32> out(e - b + 1);
    out[0] = a_b;
    if (e > b) {
        phrase_location loc = locate_copy_phrase(b); // phrase containing b+1
        accumulate_forward(loc, b, e, static_cast<i64>(a_b), out.data() + 1);
    }
    return out;
}

std::vector<u32> rlzsa_store::extract(u64 b, u64 e) const {
    if (b == 0 || b > e || e > n_) throw std::out_of_range("rlzsa_store::extract: bad range");
    // nearest sampled copy-phrase start at or before b+1, else fall back to A[1]
    u64 k = scp_.rank(b + 1);
    u32 a_b;
    if (k == 0) {
        i64 cur = static_cast<i64>(a1_);
        if (b > 1) {
            phrase_location loc = locate_copy_phrase(1);
            std::vector<u32> tmp(b - 1);
            accumulate_forward(loc, 1, b, cur, tmp.data());
            cur = static_cast<i64>(tmp.back());
        }
        a_b = static_cast<u32>(cur);
    } else {
        u64 p = scp_.select(k);       // sampled copy-phrase start <= b+1
        i64 cur = static_cast<i64>(v_.get(k - 1)); // A[p]
        if (p == b + 1) {
            // the sample sits one past b: remove the first symbol of that copy phrase
            u64 x_cp = a_ * k - 1;
            cur -= reference_value(sr_.get(x_cp));
            a_b = static_cast<u32>(cur);
        } else {
            phrase_location loc;
            loc.x_cp = a_ * k - 1;
            loc.x = pt_.select0(a_ * k);
            loc.p_x = p;
            loc.x_lp = loc.x - 1 - loc.x_cp;
            if (p < b) {
                std::vector<u32> tmp(b - p);
                accumulate_forward(loc, p, b, cur, tmp.data());
                cur = static_cast<i64>(tmp.back());
            }
            a_b = static_cast<u32>(cur);
        }
    }
    return extract_with_toehold(b, e, a_b);
}

u64 rlzsa_store::size_in_bytes() const {
    return r_.size_in_bytes() + pt_.size_in_bytes() + lp_.size_in_bytes() + sr_.size_in_bytes() +
           cpl_.size_in_bytes() + scp_.size_in_bytes() + v_.size_in_bytes() + 48;
}

void rlzsa_store::save(std::ostream& os) const {
    io::put_u64(os, n_);
    io::put_u64(os, z_);
    io::put_u64(os, z_l_);
    io::put_u64(os, z_c_);
    io::put_u64(os, a_);
    io::put_u32(os, a1_);
    r_.save(os);
    pt_.save(os);
    lp_.save(os);
    sr_.save(os);
    cpl_.save(os);
    scp_.save(os);
    v_.save(os);
}

rlzsa_store rlzsa_store::load(std::istream& is) {
    rlzsa_store st;
    st.n_ = io::get_u64(is);
    st.z_ = io::get_u64(is);
    st.z_l_ = io::get_u64(is);
    st.z_c_ = io::get_u64(is);
    st.a_ = io::get_u64(is);
    st.a1_ = io::get_u32(is);
    st.r_ = packed_vector::load(is);
    st.pt_ = bit_vector_rs::load(is);
    st.lp_ = packed_vector::load(is);
    st.sr_ = packed_vector::load(is);
    st.cpl_ = packed_vector::load(is);
    st.scp_ = sparse_bits::load(is);
    st.v_ = packed_vector::load(is);
    return st;
}

// --- legacy layout ---

rlzsa_legacy_store rlzsa_legacy_store::build(const std::vector<rlz_phrase>& phrases, std::span<const i64> r,
                                             std::span<const u32> a, u64 sampling) {
    if (sampling == 0) throw std::invalid_argument("rlzsa_legacy_store: sampling must be >= 1");
    rlzsa_legacy_store st;
    st.n_ = a.size();
    st.z_ = phrases.size();
    st.a_ = sampling;

    st.r_.reset(std::max<u64>(r.size(), 1), bit_width_for(2 * st.n_ + 1));
    for (u64 i = 0; i < r.size(); ++i) st.r_.set(i, static_cast<u64>(r[i] + static_cast<i64>(st.n_)));

    st.s_.reset(std::max<u64>(st.z_, 1), bit_width_for(std::max(2 * st.n_ + 1, st.n_)));
    st.pl_.reset(std::max<u64>(st.z_, 1), 17);
    std::vector<u64> starts;
    u64 pos = 1;
    for (u64 i = 0; i < st.z_; ++i) {
        const rlz_phrase& f = phrases[i];
        if ((i + 1) % sampling == 0) starts.push_back(pos);
        if (f.is_literal) {
            // literals act as decode anchors: store the absolute value A[pos]
            st.s_.set(i, a[pos - 1]);
            st.pl_.set(i, 0);
            pos += 1;
        } else {
            if (f.len < 1 || f.len > kRlzMaxCopyLen || f.src == 0 || f.src + f.len - 1 > r.size())
                throw std::invalid_argument("rlzsa_legacy_store: inconsistent phrase stream");
            st.s_.set(i, f.src);
            st.pl_.set(i, f.len);
            pos += f.len;
        }
    }
    if (pos != st.n_ + 1) throw std::invalid_argument("rlzsa_legacy_store: phrases do not cover the input");
    st.ps_.reset(std::max<u64>(starts.size(), 1), bit_width_for(st.n_ + 1));
    for (u64 i = 0; i < starts.size(); ++i) st.ps_.set(i, starts[i]);
    return st;
}

std::pair<u64, u64> rlzsa_legacy_store::locate_phrase(u64 pos) const {
    u64 samples = z_ / a_;
    // greatest sample with start <= pos, by binary search over ps_
    u64 lo = 0, hi = samples; // lo = #samples known <= pos
    while (lo < hi) {
        u64 mid = (lo + hi + 1) / 2;
        if (mid >= 1 && ps_.get(mid - 1) <= pos)
            lo = mid;
        else
            hi = mid - 1;
    }
    u64 x = lo == 0 ? 1 : lo * a_;
    u64 p = lo == 0 ? 1 : ps_.get(lo - 1);
    while (true) {
        u64 len = std::max<u64>(pl_.get(x - 1), 1);
        if (p + len > pos) return {x, p};
        p += len;
        ++x;
    }
}

std::vector<u32> rlzsa_legacy_store::extract_with_toehold(u64 b, u64 e, u32 a_b) const {
    if (b == 0 || b > e || e > n_) throw std::out_of_range("rlzsa_legacy_store: bad range");
    std::vector<u32> out(e - b + 1);
    out[0] = a_b;
    if (b == e) return out;
    i64 cur = static_cast<i64>(a_b);
    auto [x, p] = locate_phrase(b + 1);
    u64 q = b;
    while (q < e) {
        u64 len = pl_.get(x - 1);
        if (len == 0) {
            cur = static_cast<i64>(s_.get(x - 1)); // absolute anchor
            ++q;
            out[q - b] = static_cast<u32>(cur);
            p = q + 1;
            ++x;
        } else {
            u64 src = s_.get(x - 1);
            u64 off = q + 1 - p;
            for (; off < len && q < e; ++off) {
                cur += static_cast<i64>(r_.get(src - 1 + off)) - static_cast<i64>(n_);
                ++q;
                out[q - b] = static_cast<u32>(cur);
            }
            if (off == len) {
                p = q + 1;
                ++x;
            }
        }
    }
    return out;
}

std::vector<u32> rlzsa_legacy_store::extract(u64 b, u64 e) const {
    if (b == 0 || b > e || e > n_) throw std::out_of_range("rlzsa_legacy_store: bad range");
    // find A[b]: walk back to the nearest literal anchor at or before b
    auto [x, p] = locate_phrase(b);
    i64 cur;
    u64 q; // position whose value is known
    while (pl_.get(x - 1) != 0 && x > 1) {
        --x;
        u64 len = std::max<u64>(pl_.get(x - 1), 1);
        p -= len;
    }
    if (pl_.get(x - 1) != 0) throw std::logic_error("rlzsa_legacy_store: no anchor before position");
    cur = static_cast<i64>(s_.get(x - 1));
    q = p;
    // roll forward from the anchor to b
    u64 xx = x, pp = p;
    while (q < b) {
        u64 len = pl_.get(xx - 1);
        if (len == 0) {
            cur = static_cast<i64>(s_.get(xx - 1));
            ++q;
            pp = q + 1;
            ++xx;
        } else {
            u64 src = s_.get(xx - 1);
            u64 off = q + 1 - pp;
            for (; off < len && q < b; ++off) {
                cur += static_cast<i64>(r_.get(src - 1 + off)) - static_cast<i64>(n_);
                ++q;
            }
            if (off == len) {
                pp = q + 1;
                ++xx;
            }
        }
    }
    return extract_with_toehold(b, e, static_cast<u32>(cur));
}

u64 rlzsa_legacy_store::size_in_bytes() const {
    return r_.size_in_bytes() + s_.size_in_bytes() + pl_.size_in_bytes() + ps_.size_in_bytes() + 32;
}

void rlzsa_legacy_store::save(std::ostream& os) const {
    io::put_u64(os, n_);
    io::put_u64(os, z_);
    io::put_u64(os, a_);
    r_.save(os);
    s_.save(os);
    pl_.save(os);
    ps_.save(os);
}

rlzsa_legacy_store rlzsa_legacy_store::load(std::istream& is) {
    rlzsa_legacy_store st;
    st.n_ = io::get_u64(is);
    st.z_ = io::get_u64(is);
    st.a_ = io::get_u64(is);
    st.r_ = packed_vector::load(is);
    st.s_ = packed_vector::load(is);
    st.pl_ = packed_vector::load(is);
    st.ps_ = packed_vector::load(is);
    return st;
}

} // namespace csai
