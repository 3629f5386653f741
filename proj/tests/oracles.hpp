#pragma once

#include <csai/common.hpp>

#include <algorithm>
#include <random>
#include <string>

namespace csai::oracle {

// naive suffix sort, 1-based positions
inline std::vector<u32> suffix_array(std::span<const i64> seq) {
    std::vector<u32> sa(seq.size());
    for (u64 i = 0; i < seq.size(); ++i) sa[i] = static_cast<u32>(i + 1);
    std::sort(sa.begin(), sa.end(), [&](u32 a, u32 b) {
        return std::lexicographical_compare(seq.begin() + a - 1, seq.end(), seq.begin() + b - 1, seq.end());
    });
    return sa;
}

inline std::vector<u32> suffix_array_bytes(std::span<const u8> text) {
    std::vector<i64> seq(text.begin(), text.end());
    return suffix_array(seq);
}

inline u32 lcp_of(std::span<const i64> seq, u64 a, u64 b) { // 1-based starts
    u32 k = 0;
    while (a - 1 + k < seq.size() && b - 1 + k < seq.size() && seq[a - 1 + k] == seq[b - 1 + k]) ++k;
    return k;
}

// direct Phi table: phi[v] for v in [1, n], phi(A[i]) = A[(i-2+n) mod n + 1]
inline std::vector<u32> phi_table(std::span<const u32> sa) {
    u64 n = sa.size();
    std::vector<u32> phi(n + 1, 0);
    for (u64 i = 1; i <= n; ++i) phi[sa[i - 1]] = sa[(i + n - 2) % n];
    return phi;
}

// all occurrences of pattern in text, 1-based, by direct scan
inline std::vector<u32> occurrences(std::string_view text, std::string_view pattern) {
    std::vector<u32> occ;
    if (pattern.empty() || pattern.size() > text.size()) return occ;
    u64 from = 0;
    while (true) {
        u64 pos = text.find(pattern, from);
        if (pos == std::string_view::npos) break;
        occ.push_back(static_cast<u32>(pos + 1));
        from = pos + 1;
    }
    return occ;
}

// longest match of ad[p..] (0-based p) anywhere in r, by direct scan
inline std::pair<u64, u64> rlz_longest_match(std::span<const i64> ad, u64 p, std::span<const i64> r,
                                             u64 cap) {
    u64 best_len = 0, best_src = 0;
    for (u64 s = 0; s < r.size(); ++s) {
        u64 l = 0;
        while (p + l < ad.size() && s + l < r.size() && l < cap && ad[p + l] == r[s + l]) ++l;
        if (l > best_len) {
            best_len = l;
            best_src = s;
        }
    }
    return {best_src, best_len};
}

inline std::vector<i64> random_seq(std::mt19937_64& rng, u64 n, u64 sigma) {
    std::uniform_int_distribution<i64> dist(1, static_cast<i64>(sigma));
    std::vector<i64> s(n);
    for (i64& v : s) v = dist(rng);
    return s;
}

inline std::vector<u8> random_text(std::mt19937_64& rng, u64 n, u32 sigma, u8 base = 'a') {
    std::uniform_int_distribution<u32> dist(0, sigma - 1);
    std::vector<u8> t(n);
    for (u8& v : t) v = static_cast<u8>(base + dist(rng));
    return t;
}

inline std::vector<i64> fibonacci_word(u64 upto) {
    std::vector<i64> a{1}, b{1, 2};
    while (b.size() < upto) {
        std::vector<i64> c(b);
        c.insert(c.end(), a.begin(), a.end());
        a = std::move(b);
        b = std::move(c);
    }
    b.resize(upto);
    return b;
}

} // namespace csai::oracle
