#include <csai/container.hpp>
#include <csai/self_index.hpp>

#include <algorithm>
#include <chrono>

namespace csai {

const char* scheme_name(sa_scheme s) {
    switch (s) {
        case sa_scheme::phi_only: return "phi";
        case sa_scheme::lzend: return "lzend";
        case sa_scheme::rlzsa: return "rlzsa";
        case sa_scheme::rlzsa_legacy: return "rlzsa-legacy";
    }
    return "?";
}

std::optional<sa_scheme> scheme_from_name(std::string_view name) {
    if (name == "phi") return sa_scheme::phi_only;
    if (name == "lzend") return sa_scheme::lzend;
    if (name == "rlzsa") return sa_scheme::rlzsa;
    if (name == "rlzsa-legacy") return sa_scheme::rlzsa_legacy;
    return std::nullopt;
}

self_index self_index::build(std::span<const u8> text, const index_params& params) {
    if (text.empty()) throw std::invalid_argument("self_index::build: empty text");
    auto t0 = std::chrono::steady_clock::now();

    self_index ix;
    ix.n_ = text.size();
    ix.params_ = params;
    ix.byte_to_sym_.assign(256, 0);
    for (u8 b : text) {
        if (b == 0) throw std::invalid_argument("self_index::build: zero bytes are not supported");
        ix.byte_to_sym_[b] = 1;
    }
    for (u32 b = 1; b < 256; ++b)
        if (ix.byte_to_sym_[b]) {
            ix.byte_to_sym_[b] = ++ix.sigma_;
            ix.sym_to_byte_.push_back(static_cast<u8>(b));
        }

    std::vector<u32> dense(text.size());
    for (u64 i = 0; i < text.size(); ++i) dense[i] = ix.byte_to_sym_[text[i]];

    std::vector<u32> sa = build_suffix_array_bytes(text);
    bwt_runs runs = build_bwt_runs(dense, sa);
    ix.r_ = runs.r;
    ix.run_starts_ = std::move(runs.run_starts);
    ix.run_heads_ = std::move(runs.run_heads);
    ix.sa_start_ = std::move(runs.sa_at_run_start);
    ix.sa_end_ = std::move(runs.sa_at_run_end);

    for (u64 row = 1; row <= ix.n_; ++row)
        if (sa[row - 1] == 1) {
            ix.wrap_row_ = row;
            break;
        }
    ix.wrap_sym_ = dense[ix.n_ - 1];
    ix.a_before_wrap_ = ix.wrap_row_ > 1 ? sa[ix.wrap_row_ - 2] : 0;
    ix.a_after_wrap_ = ix.wrap_row_ < ix.n_ ? sa[ix.wrap_row_] : 0;

    ix.phi_ = build_phi_samples({.n = ix.n_,
                                 .r = ix.r_,
                                 .run_starts = ix.run_starts_,
                                 .run_heads = ix.run_heads_,
                                 .sa_at_run_start = ix.sa_start_,
                                 .sa_at_run_end = ix.sa_end_},
                                sa);

    switch (params.scheme) {
        case sa_scheme::phi_only: break;
        case sa_scheme::lzend:
            ix.lz_ = lzend_sa_store::build(sa, params.lzend_h);
            break;
        case sa_scheme::rlzsa:
        case sa_scheme::rlzsa_legacy: {
            std::vector<i64> ad = differentiate(sa);
            rlz_ref_params rp = rlz_ref_params::defaults(ix.n_, ix.r_, params.seed);
            if (params.ref_target > 0) rp.target_size = params.ref_target;
            rlz_reference ref = build_reference(ad, value_frequencies(ix.phi_), rp);
            if (params.scheme == sa_scheme::rlzsa) {
                std::vector<rlz_phrase> phrases = rlz_parse(ad, ref.values);
                ix.rlzsa_ = rlzsa_store::build(phrases, ref.values, sa, params.rlzsa_a);
            } else {
                std::vector<rlz_phrase> phrases = rlz_parse_legacy(ad, ref.values);
                ix.legacy_ = rlzsa_legacy_store::build(phrases, ref.values, sa,
                                                       rlzsa_legacy_store::kDefaultSampling);
            }
            break;
        }
    }

    ix.finish_setup();
    ix.build_seconds_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ix;
}

void self_index::finish_setup() {
    c_.assign(sigma_ + 2, 0);
    head_count_.assign(r_, 0);
    std::vector<u64> seen(sigma_ + 1, 0);
    for (u64 k = 0; k < r_; ++k) {
        u64 len = run_end_row(k + 1) - run_starts_[k] + 1;
        head_count_[k] = seen[run_heads_[k]];
        seen[run_heads_[k]] += len;
        c_[run_heads_[k] + 1] += len;
    }
    for (u32 c = 1; c < sigma_ + 2; ++c) c_[c] += c_[c - 1];
    head_rs_ = small_alphabet_rs(run_heads_, sigma_);
}

sa_interval self_index::full_interval() const {
    sa_interval iv;
    iv.b = 1;
    iv.e = n_;
    iv.toehold_b = sa_start_[0]; // A[1]
    iv.toehold_e = sa_end_[r_ - 1]; // A[n]
    iv.depth = 0;
    return iv;
}

u64 self_index::run_of(u64 row) const {
    u64 lo = 0, hi = r_ - 1; // greatest k with run_starts_[k] <= row
    while (lo < hi) {
        u64 mid = (lo + hi + 1) / 2;
        if (run_starts_[mid] <= row)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo + 1;
}

u64 self_index::rank_l(u32 c, u64 row) const {
    if (row == 0) return 0;
    u64 k = run_of(row);
    if (run_heads_[k - 1] == c) return head_count_[k - 1] + (row - run_starts_[k - 1] + 1);
    u64 kp = head_rs_.pred_occ(c, k - 1); // last c-run before k
    if (kp == 0) return 0;
    return head_count_[kp - 1] + (run_end_row(kp) - run_starts_[kp - 1] + 1);
}

std::optional<self_index::hit> self_index::first_real(u32 c, u64 from, u64 to, const sa_interval& iv) const {
    u64 j = from;
    while (j <= to) {
        u64 k = run_of(j);
        if (run_heads_[k - 1] != c) {
            k = head_rs_.succ_occ(c, k);
            if (k > r_) return std::nullopt;
            j = run_starts_[k - 1];
        }
        if (j == wrap_row_ && c == wrap_sym_) {
            ++j;
            continue; // may have left the run or the interval; re-check
        }
        if (j > to) return std::nullopt;
        // resolve A[j]
        u32 a;
        if (!iv.empty() && iv.depth > 0 && j == iv.b)
            a = iv.toehold_b;
        else if (!iv.empty() && iv.depth > 0 && j == iv.e)
            a = iv.toehold_e;
        else if (j == run_starts_[run_of(j) - 1])
            a = sa_start_[run_of(j) - 1];
        else if (j == run_end_row(run_of(j)))
            a = sa_end_[run_of(j) - 1];
        else if (j == wrap_row_ + 1)
            a = a_after_wrap_;
        else
            throw std::logic_error("self_index: unsampled row in first_real");
        return hit{j, a};
    }
    return std::nullopt;
}

std::optional<self_index::hit> self_index::last_real(u32 c, u64 from, u64 to, const sa_interval& iv) const {
    u64 j = to;
    while (j >= from) {
        u64 k = run_of(j);
        if (run_heads_[k - 1] != c) {
            k = head_rs_.pred_occ(c, k);
            if (k == 0) return std::nullopt;
            j = run_end_row(k);
        }
        if (j == wrap_row_ && c == wrap_sym_) {
            if (j == from) return std::nullopt;
            --j;
            continue;
        }
        if (j < from) return std::nullopt;
        u32 a;
        if (!iv.empty() && iv.depth > 0 && j == iv.e)
            a = iv.toehold_e;
        else if (!iv.empty() && iv.depth > 0 && j == iv.b)
            a = iv.toehold_b;
        else if (j == run_end_row(run_of(j)))
            a = sa_end_[run_of(j) - 1];
        else if (j == run_starts_[run_of(j) - 1])
            a = sa_start_[run_of(j) - 1];
        else if (j == wrap_row_ - 1)
            a = a_before_wrap_;
        else
            throw std::logic_error("self_index: unsampled row in last_real");
        return hit{j, a};
    }
    return std::nullopt;
}

sa_interval self_index::backward_extend(const sa_interval& iv, u8 symbol) const {
    sa_interval empty;
    empty.depth = iv.depth + 1;
    u32 c = byte_to_sym_[symbol];
    if (c == 0 || iv.empty()) return empty;
    u64 delta = c == wrap_sym_ ? 1 : 0;

    sa_interval out;
    out.depth = iv.depth + 1;
    if (iv.depth == 0) {
        // interval of all suffixes starting with c, anchored directly at C
        u64 cnt = c_[c + 1] - c_[c];
        if (cnt == 0) return empty;
        out.b = c_[c] + 1;
        out.e = c_[c] + cnt;
        std::optional<hit> jb = first_real(c, 1, n_, iv);
        std::optional<hit> je = last_real(c, 1, n_, iv);
        out.toehold_b = delta ? static_cast<u32>(n_) : jb->a_value - 1;
        out.toehold_e = je ? je->a_value - 1 : static_cast<u32>(n_);
        return out;
    }
    std::optional<hit> jb = first_real(c, iv.b, iv.e, iv);
    if (!jb) return empty;
    std::optional<hit> je = last_real(c, iv.b, iv.e, iv);
    u64 wrap_sub_b = (c == wrap_sym_ && jb->row - 1 >= wrap_row_) ? 1 : 0;
    u64 wrap_sub_e = (c == wrap_sym_ && je->row >= wrap_row_) ? 1 : 0;
    out.b = c_[c] + delta + (rank_l(c, jb->row - 1) - wrap_sub_b) + 1;
    out.e = c_[c] + delta + (rank_l(c, je->row) - wrap_sub_e);
    out.toehold_b = jb->a_value - 1;
    out.toehold_e = je->a_value - 1;
    return out;
}

u64 self_index::count(std::string_view pattern) const {
    if (pattern.empty()) throw std::invalid_argument("count: empty pattern");
    sa_interval iv = full_interval();
    for (u64 i = pattern.size(); i-- > 0;) {
        iv = backward_extend(iv, static_cast<u8>(pattern[i]));
        if (iv.empty()) return 0;
    }
    return iv.count();
}

std::vector<u32> self_index::locate(std::string_view pattern) const {
    if (pattern.empty()) throw std::invalid_argument("locate: empty pattern");
    sa_interval iv = full_interval();
    for (u64 i = pattern.size(); i-- > 0;) {
        iv = backward_extend(iv, static_cast<u8>(pattern[i]));
        if (iv.empty()) return {};
    }
    std::vector<u32> occ;
    occ.reserve(iv.count());
    switch (params_.scheme) {
        case sa_scheme::phi_only: {
            u32 v = iv.toehold_e;
            occ.push_back(v);
            for (u64 k = iv.e; k-- > iv.b;) {
                v = phi_.phi(v);
                occ.push_back(v);
            }
            break;
        }
        case sa_scheme::lzend: {
            occ = lz_->extract(iv.b, iv.e - iv.b);
            break;
        }
        case sa_scheme::rlzsa: {
            occ = rlzsa_->extract_with_toehold(iv.b, iv.e, iv.toehold_b);
            break;
        }
        case sa_scheme::rlzsa_legacy: {
            occ = legacy_->extract_with_toehold(iv.b, iv.e, iv.toehold_b);
            break;
        }
    }
    std::sort(occ.begin(), occ.end());
    return occ;
}

u64 self_index::size_in_bytes() const {
    u64 b = 256 * 4 + sym_to_byte_.size();
    b += (run_starts_.size() + run_heads_.size() + sa_start_.size() + sa_end_.size()) * 4;
    b += head_count_.size() * 8 + c_.size() * 8;
    b += head_rs_.size_in_bytes();
    b += phi_.size_in_bytes();
    if (lz_) b += lz_->size_in_bytes();
    if (rlzsa_) b += rlzsa_->size_in_bytes();
    if (legacy_) b += legacy_->size_in_bytes();
    return b;
}

} // namespace csai

namespace csai {

void self_index::save(std::ostream& os) const {
    container_header h;
    h.n = n_;
    h.sigma = sigma_;
    h.r = r_;
    h.scheme = static_cast<u32>(params_.scheme);
    h.h = params_.lzend_h;
    h.a = params_.rlzsa_a;
    h.ref_target = params_.ref_target;
    h.seed = params_.seed;
    h.build_seconds = build_seconds_;
    if (lz_) h.z = lz_->z();
    if (rlzsa_) {
        h.z = rlzsa_->z();
        h.z_l = rlzsa_->z_literal();
        h.z_c = rlzsa_->z_copy();
        h.ref_size = rlzsa_->reference_size();
    }
    if (legacy_) {
        h.z = legacy_->z();
        h.ref_size = legacy_->reference_size();
    }
    container_writer w(h);
    {
        std::ostringstream& s = w.section("runs");
        io::put_u64(s, n_);
        io::put_u32(s, sigma_);
        for (u32 v : byte_to_sym_) io::put_u32(s, v);
        io::put_vec_u64(s, run_starts_);
        io::put_vec_u64(s, run_heads_);
        io::put_vec_u64(s, sa_start_);
        io::put_vec_u64(s, sa_end_);
        io::put_u64(s, wrap_row_);
        io::put_u32(s, a_before_wrap_);
        io::put_u32(s, a_after_wrap_);
    }
    {
        std::ostringstream& s = w.section("phis");
        phi_.save(s);
    }
    if (lz_) lz_->save(w.section("lzsa"));
    if (rlzsa_) rlzsa_->save(w.section("rlzs"));
    if (legacy_) legacy_->save(w.section("rlzl"));
    w.finish(os);
}

self_index self_index::load(std::istream& is) {
    container_reader rd(is);
    const container_header& h = rd.header();
    self_index ix;
    ix.params_.scheme = static_cast<sa_scheme>(h.scheme);
    ix.params_.lzend_h = h.h;
    ix.params_.rlzsa_a = h.a;
    ix.params_.ref_target = h.ref_target;
    ix.params_.seed = h.seed;
    ix.build_seconds_ = h.build_seconds;
    ix.r_ = h.r;
    {
        std::istringstream s = rd.open("runs");
        ix.n_ = io::get_u64(s);
        ix.sigma_ = io::get_u32(s);
        ix.byte_to_sym_.resize(256);
        for (u32& v : ix.byte_to_sym_) v = io::get_u32(s);
        ix.run_starts_ = io::get_vec_u64<u32>(s);
        ix.run_heads_ = io::get_vec_u64<u32>(s);
        ix.sa_start_ = io::get_vec_u64<u32>(s);
        ix.sa_end_ = io::get_vec_u64<u32>(s);
        ix.wrap_row_ = io::get_u64(s);
        ix.a_before_wrap_ = io::get_u32(s);
        ix.a_after_wrap_ = io::get_u32(s);
    }
    ix.r_ = ix.run_starts_.size();
    ix.sym_to_byte_.resize(ix.sigma_);
    for (u32 b = 1; b < 256; ++b)
        if (ix.byte_to_sym_[b]) ix.sym_to_byte_[ix.byte_to_sym_[b] - 1] = static_cast<u8>(b);
    {
        std::istringstream s = rd.open("phis");
        ix.phi_ = phi_samples::load(s);
    }
    ix.wrap_sym_ = ix.run_heads_[ix.run_of(ix.wrap_row_) - 1];
    switch (ix.params_.scheme) {
        case sa_scheme::phi_only: break;
        case sa_scheme::lzend: {
            std::istringstream s = rd.open("lzsa");
            ix.lz_ = lzend_sa_store::load(s);
            break;
        }
        case sa_scheme::rlzsa: {
            std::istringstream s = rd.open("rlzs");
            ix.rlzsa_ = rlzsa_store::load(s);
            break;
        }
        case sa_scheme::rlzsa_legacy: {
            std::istringstream s = rd.open("rlzl");
            ix.legacy_ = rlzsa_legacy_store::load(s);
            break;
        }
    }
    ix.finish_setup();
    return ix;
}

} // namespace csai
