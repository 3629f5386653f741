#include <csai/small_alphabet_rs.hpp>
#include <csai/suffix_structures.hpp>

#include <algorithm>
#include <bit>
#include <fstream>

namespace csai {

thread_local u64 small_alphabet_rs::scan_touches = 0;

namespace {

constexpr u32 kEmpty = std::numeric_limits<u32>::max();

// SA-IS. seq[n-1] must be a unique smallest terminator within [0, sigma).
void sais(const u32* s, u32* sa, u64 n, u64 sigma) {
    if (n == 0) return;
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<u8> t(n);
    t[n - 1] = 1;
    for (u64 i = n - 1; i-- > 0;)
        t[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && t[i + 1])) ? 1 : 0;
    auto is_lms = [&](u64 i) { return i > 0 && t[i] && !t[i - 1]; };

    std::vector<u64> heads(sigma), tails(sigma);
    {
        std::vector<u64> cnt(sigma, 0);
        for (u64 i = 0; i < n; ++i) ++cnt[s[i]];
        u64 sum = 0;
        for (u64 c = 0; c < sigma; ++c) {
            heads[c] = sum;
            sum += cnt[c];
            tails[c] = sum;
        }
    }

    std::vector<u64> p(sigma);
    auto induce = [&](const std::vector<u32>* lms_in_order) {
        std::fill(sa, sa + n, kEmpty);
        p = tails;
        if (lms_in_order) {
            for (u64 k = lms_in_order->size(); k-- > 0;) {
                u32 j = (*lms_in_order)[k];
                sa[--p[s[j]]] = j;
            }
        } else {
            for (u64 i = n; i-- > 0;)
                if (is_lms(i)) sa[--p[s[i]]] = static_cast<u32>(i);
        }
        p = heads;
        for (u64 i = 0; i < n; ++i) {
            if (sa[i] == kEmpty || sa[i] == 0) continue;
            u64 j = sa[i] - 1;
            if (!t[j]) sa[p[s[j]]++] = static_cast<u32>(j);
        }
        p = tails;
        for (u64 i = n; i-- > 0;) {
            if (sa[i] == kEmpty || sa[i] == 0) continue;
            u64 j = sa[i] - 1;
            if (t[j]) sa[--p[s[j]]] = static_cast<u32>(j);
        }
    };

    induce(nullptr);

    std::vector<u32> lms_sorted;
    for (u64 i = 0; i < n; ++i)
        if (sa[i] != kEmpty && is_lms(sa[i])) lms_sorted.push_back(sa[i]);
    u64 num_lms = lms_sorted.size();

    auto lms_equal = [&](u64 a, u64 b) {
        if (a == n - 1 || b == n - 1) return a == b;
        for (u64 k = 0;; ++k) {
            if (s[a + k] != s[b + k] || t[a + k] != t[b + k]) return false;
            if (k > 0 && (is_lms(a + k) || is_lms(b + k))) return is_lms(a + k) && is_lms(b + k);
        }
    };

    std::vector<u32> name(n, kEmpty);
    u32 names = 0;
    for (u64 k = 0; k < num_lms; ++k) {
        if (k > 0 && !lms_equal(lms_sorted[k - 1], lms_sorted[k])) ++names;
        name[lms_sorted[k]] = names;
    }

    std::vector<u32> s1, lms_pos;
    s1.reserve(num_lms);
    lms_pos.reserve(num_lms);
    for (u64 i = 0; i < n; ++i)
        if (is_lms(i)) {
            s1.push_back(name[i]);
            lms_pos.push_back(static_cast<u32>(i));
        }
    name.clear();
    name.shrink_to_fit();

    if (names + 1 < num_lms) {
        std::vector<u32> sa1(num_lms);
        sais(s1.data(), sa1.data(), num_lms, names + 1);
        for (u64 k = 0; k < num_lms; ++k) lms_sorted[k] = lms_pos[sa1[k]];
    } else {
        for (u64 k = 0; k < num_lms; ++k) lms_sorted[s1[k]] = lms_pos[k];
    }
    induce(&lms_sorted);
}

std::vector<u32> suffix_array_with_sentinel(std::vector<u32> ranks, u32 sigma_with_sentinel) {
    // ranks must use [1, sigma); 0 is the appended terminator
    u64 n = ranks.size();
    ranks.push_back(0);
    std::vector<u32> sa(n + 1);
    sais(ranks.data(), sa.data(), n + 1, sigma_with_sentinel);
    std::vector<u32> out(n);
    for (u64 i = 0; i < n; ++i) out[i] = sa[i + 1] + 1; // drop the terminator row, 1-based
    return out;
}

} // namespace

std::vector<u32> suffix_array_dense(std::span<const u32> seq, u32 sigma) {
    std::vector<u32> shifted(seq.size());
    for (u64 i = 0; i < seq.size(); ++i) shifted[i] = seq[i] + 1;
    std::vector<u32> sa1 = suffix_array_with_sentinel(std::move(shifted), sigma + 1);
    for (u32& v : sa1) --v; // back to 0-based
    return sa1;
}

std::vector<u32> build_suffix_array(std::span<const i64> seq) {
    if (seq.empty()) throw std::invalid_argument("build_suffix_array: empty sequence");
    if (seq.size() >= kEmpty - 1) throw std::invalid_argument("build_suffix_array: sequence too long");
    std::vector<i64> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<u32> ranks(seq.size());
    for (u64 i = 0; i < seq.size(); ++i)
        ranks[i] = static_cast<u32>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
    return suffix_array_with_sentinel(std::move(ranks), static_cast<u32>(sorted.size()) + 1);
}

std::vector<u32> build_suffix_array_bytes(std::span<const u8> text) {
    if (text.empty()) throw std::invalid_argument("build_suffix_array_bytes: empty text");
    std::vector<u32> ranks(text.size());
    for (u64 i = 0; i < text.size(); ++i) ranks[i] = static_cast<u32>(text[i]) + 1;
    return suffix_array_with_sentinel(std::move(ranks), 257);
}

std::vector<u32> lcp_array_kasai(std::span<const u32> rank_seq, std::span<const u32> sa0) {
    u64 n = sa0.size();
    std::vector<u32> rank(n), h(n, 0);
    for (u64 i = 0; i < n; ++i) rank[sa0[i]] = static_cast<u32>(i);
    u64 k = 0;
    for (u64 i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            k = 0;
            continue;
        }
        u64 j = sa0[rank[i] - 1];
        while (i + k < n && j + k < n && rank_seq[i + k] == rank_seq[j + k]) ++k;
        h[rank[i]] = static_cast<u32>(k);
        if (k) --k;
    }
    return h;
}

range_min::range_min(std::vector<u32> values) : values_(std::move(values)) {
    u64 blocks = (values_.size() + kBlock - 1) / kBlock;
    if (blocks == 0) return;
    table_.emplace_back(blocks);
    for (u64 b = 0; b < blocks; ++b) {
        u32 m = kEmpty;
        for (u64 i = b * kBlock; i < std::min<u64>(values_.size(), (b + 1) * kBlock); ++i) m = std::min(m, values_[i]);
        table_[0][b] = m;
    }
    for (u64 k = 1; (u64(1) << k) <= blocks; ++k) {
        u64 span = u64(1) << k;
        table_.emplace_back(blocks - span + 1);
        for (u64 b = 0; b + span <= blocks; ++b)
            table_[k][b] = std::min(table_[k - 1][b], table_[k - 1][b + span / 2]);
    }
}

u32 range_min::query(u64 l, u64 r) const {
    u64 bl = l / kBlock, br = r / kBlock;
    u32 m = kEmpty;
    if (bl == br) {
        for (u64 i = l; i <= r; ++i) m = std::min(m, values_[i]);
        return m;
    }
    for (u64 i = l; i < (bl + 1) * kBlock; ++i) m = std::min(m, values_[i]);
    for (u64 i = br * kBlock; i <= r; ++i) m = std::min(m, values_[i]);
    if (bl + 1 <= br - 1) {
        u64 a = bl + 1, b = br - 1;
        u64 k = std::bit_width(b - a + 1) - 1;
        m = std::min({m, table_[k][a], table_[k][b + 1 - (u64(1) << k)]});
    }
    return m;
}

u64 range_min::size_in_bytes() const {
    u64 bytes = values_.size() * 4 + 16;
    for (const auto& row : table_) bytes += row.size() * 4;
    return bytes;
}

suffix_context build_lzend_context(std::span<const i64> seq) {
    if (seq.empty()) throw std::invalid_argument("build_lzend_context: empty sequence");
    u64 n = seq.size();
    std::vector<i64> rev(seq.rbegin(), seq.rend());

    std::vector<i64> sorted(rev);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<u32> ranks(n);
    for (u64 i = 0; i < n; ++i)
        ranks[i] = static_cast<u32>(std::lower_bound(sorted.begin(), sorted.end(), rev[i]) - sorted.begin());
    u32 sigma = static_cast<u32>(sorted.size());
    rev = {};
    sorted = {};

    suffix_context ctx;
    ctx.n = n;
    ctx.sa_rev = suffix_array_dense(ranks, sigma);
    ctx.ainv_rev.resize(n);
    for (u64 i = 0; i < n; ++i) ctx.ainv_rev[n - ctx.sa_rev[i] - 1] = static_cast<u32>(i);
    ctx.lcp = lcp_array_kasai(ranks, ctx.sa_rev);
    ctx.rmq = range_min(ctx.lcp);
    return ctx;
}

bwt_runs build_bwt_runs(std::span<const u32> text, std::span<const u32> sa) {
    u64 n = text.size();
    if (n == 0 || sa.size() != n) throw std::invalid_argument("build_bwt_runs: bad input");
    bwt_runs runs;
    runs.n = n;
    u32 prev = 0;
    for (u64 i = 1; i <= n; ++i) {
        u32 c = sa[i - 1] >= 2 ? text[sa[i - 1] - 2] : text[n - 1];
        if (i == 1 || c != prev) {
            if (i > 1) runs.sa_at_run_end.push_back(sa[i - 2]);
            runs.run_starts.push_back(static_cast<u32>(i));
            runs.run_heads.push_back(c);
        }
        prev = c;
    }
    runs.sa_at_run_end.push_back(sa[n - 1]);
    runs.r = runs.run_starts.size();
    runs.sa_at_run_start.resize(runs.r);
    for (u64 k = 0; k < runs.r; ++k) runs.sa_at_run_start[k] = sa[runs.run_starts[k] - 1];
    return runs;
}

std::vector<i64> differentiate(std::span<const u32> a) {
    if (a.empty()) throw std::invalid_argument("differentiate: empty array");
    std::vector<i64> d(a.size());
    d[0] = static_cast<i64>(a[0]);
    for (u64 i = 1; i < a.size(); ++i) d[i] = static_cast<i64>(a[i]) - static_cast<i64>(a[i - 1]);
    return d;
}

std::vector<u32> accumulate(std::span<const i64> d) {
    if (d.empty()) throw std::invalid_argument("accumulate: empty array");
    std::vector<u32> a(d.size());
    i64 cur = 0;
    for (u64 i = 0; i < d.size(); ++i) {
        cur += d[i];
        a[i] = static_cast<u32>(cur);
    }
    return a;
}

u32 phi_samples::phi(u64 v) const {
    if (v == 0 || v > n) throw std::out_of_range("phi_samples::phi: v out of range");
    u64 lo = 0, hi = u.size();
    while (lo + 1 < hi) {
        u64 mid = (lo + hi) / 2;
        if (u[mid] <= v)
            lo = mid;
        else
            hi = mid;
    }
    return phi_u[lo] + static_cast<u32>(v - u[lo]);
}

void phi_samples::save(std::ostream& os) const {
    io::put_u64(os, n);
    io::put_u32(os, a1);
    io::put_vec_u64(os, u);
    io::put_vec_u64(os, phi_u);
}

phi_samples phi_samples::load(std::istream& is) {
    phi_samples p;
    p.n = io::get_u64(is);
    p.a1 = io::get_u32(is);
    p.u = io::get_vec_u64<u32>(is);
    p.phi_u = io::get_vec_u64<u32>(is);
    return p;
}

phi_samples build_phi_samples(const bwt_runs& runs, std::span<const u32> sa) {
    u64 n = sa.size();
    std::vector<u32> ainv = invert_permutation(sa);
    auto phi_direct = [&](u64 v) -> u32 {
        u64 j = ainv[v - 1]; // 1-based row
        return j >= 2 ? sa[j - 2] : sa[n - 1];
    };
    // breakpoints: SA values at run starts, plus the wrap breakpoints a text
    // without a terminator introduces (at most {1, A[A^{-1}[1]+1]})
    std::vector<u32> u(runs.sa_at_run_start);
    u.push_back(1);
    u64 j0 = ainv[0];
    if (j0 < n) u.push_back(sa[j0]); // A[j0+1]
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    // exactness guard: keep every genuine linearity breakpoint
    {
        std::vector<u32> full;
        full.reserve(u.size() + 2);
        u64 k = 0;
        u32 prev_phi = 0;
        for (u64 v = 1; v <= n; ++v) {
            u32 pv = phi_direct(v);
            bool is_sample = k < u.size() && u[k] == v;
            if (v == 1 || pv != prev_phi + 1 || is_sample) full.push_back(static_cast<u32>(v));
            if (is_sample) ++k;
            prev_phi = pv;
        }
        u = std::move(full);
    }
    phi_samples p;
    p.n = n;
    p.a1 = sa[0];
    p.u = std::move(u);
    p.phi_u.resize(p.u.size());
    for (u64 k = 0; k < p.u.size(); ++k) p.phi_u[k] = phi_direct(p.u[k]);
    return p;
}

std::vector<u32> invert_permutation(std::span<const u32> sa) {
    std::vector<u32> inv(sa.size());
    for (u64 i = 0; i < sa.size(); ++i) inv[sa[i] - 1] = static_cast<u32>(i + 1);
    return inv;
}

std::vector<u8> read_byte_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    in.seekg(0, std::ios::end);
    std::streamoff len = in.tellg();
    in.seekg(0);
    std::vector<u8> data(static_cast<u64>(len));
    in.read(reinterpret_cast<char*>(data.data()), len);
    if (!in) throw std::runtime_error("read failed: " + path);
    return data;
}

std::vector<i64> read_i64_file(const std::string& path) {
    std::vector<u8> raw = read_byte_file(path);
    if (raw.size() % 8 != 0) throw std::runtime_error("int64 file size not a multiple of 8: " + path);
    std::vector<i64> out(raw.size() / 8);
    for (u64 i = 0; i < out.size(); ++i) {
        u64 v = 0;
        for (int b = 0; b < 8; ++b) v |= static_cast<u64>(raw[i * 8 + b]) << (8 * b);
        out[i] = static_cast<i64>(v);
    }
    return out;
}

} // namespace csai
