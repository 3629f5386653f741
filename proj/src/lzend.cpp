#include <csai/lzend.hpp>

#include <map>

namespace csai {

std::vector<u64> lzend_parsing::end_positions() const {
    std::vector<u64> ends(phrases.size());
    u64 pos = 0;
    for (u64 i = 0; i < phrases.size(); ++i) {
        pos += phrases[i].copy_len + 1;
        ends[i] = pos;
    }
    return ends;
}

namespace {

struct candidate {
    u64 lex_pos;
    u32 phrase;
    u32 lce;
};

} // namespace

lzend_parsing lzend_parse(std::span<const i64> seq, std::optional<u64> h, lzend_parse_stats* stats) {
    if (seq.empty()) throw std::invalid_argument("lzend_parse: empty sequence");
    if (h && *h < 1) throw std::invalid_argument("lzend_parse: h must be >= 1");
    u64 n = seq.size();
    u64 cap = h ? *h : n + 1;

    lzend_parsing out;
    out.n = n;
    out.h = h;
    if (n == 1) {
        out.phrases.push_back({0, 0, seq[0]});
        if (stats) stats->new_phrases = 1;
        return out;
    }

    suffix_context ctx = build_lzend_context(seq);
    const std::vector<u32>& ainv = ctx.ainv_rev;

    // total phrase lengths; phrase numbers are 1-based, index z-1 is the last
    std::vector<u32> src, len;
    std::vector<i64> ext;
    src.push_back(0);
    len.push_back(1);
    ext.push_back(seq[0]);
    u64 z = 1;

    std::map<u32, u32> markers; // lex rank -> phrase number
    lzend_parse_stats local{};
    lzend_parse_stats& st = stats ? *stats : local;
    st.new_phrases = 1;

    for (u64 i = 1; i < n; ++i) {
        u32 ip = ainv[i - 1];
        u64 len_z = len[z - 1];
        u64 len_z1 = z >= 2 ? len[z - 2] : 0;

        std::optional<u32> p1, p2;

        auto lex_smaller = [&](u32 pos) -> std::optional<candidate> {
            auto it = markers.lower_bound(pos);
            if (it == markers.begin()) return std::nullopt;
            --it;
            return candidate{it->first, it->second, ctx.lce(it->first, pos)};
        };
        auto lex_greater = [&](u32 pos) -> std::optional<candidate> {
            auto it = markers.upper_bound(pos);
            if (it == markers.end()) return std::nullopt;
            return candidate{it->first, it->second, ctx.lce(pos, it->first)};
        };

        auto find_copy_source = [&](auto&& f) {
            std::optional<candidate> c = f(ip);
            if (!c) return;
            if (c->lce >= len_z && len_z + 1 <= cap) {
                p1 = c->phrase;
                if (i > len_z) { // merge needs z >= 2
                    if (c->phrase == z - 1) {
                        // skip the phrase being merged away; the lce to the
                        // current position is the minimum along the lex range
                        u32 l1 = c->lce;
                        c = f(static_cast<u32>(c->lex_pos));
                        if (c) c->lce = std::min(c->lce, l1);
                    }
                    if (c && c->lce >= len_z + len_z1 && len_z + len_z1 + 1 <= cap && c->phrase != z - 1)
                        p2 = c->phrase;
                }
            }
        };

        find_copy_source(lex_smaller);
        if (!p1 || !p2) find_copy_source(lex_greater);

        if (p2) {
            // merge f_{z-1} and f_z
            u32 pos_rm = ainv[i - len_z - 1];
            markers.erase(pos_rm);
            ++st.unmarks;
            ++st.merges;
            src[z - 2] = *p2;
            len[z - 2] = static_cast<u32>(len_z + len_z1 + 1);
            ext[z - 2] = seq[i];
            src.pop_back();
            len.pop_back();
            ext.pop_back();
            --z;
        } else if (p1) {
            ++st.extends;
            src[z - 1] = *p1;
            len[z - 1] = static_cast<u32>(len_z + 1);
            ext[z - 1] = seq[i];
        } else {
            markers.emplace(ip, static_cast<u32>(z)); // lazily mark f_z
            ++st.marks;
            ++st.new_phrases;
            src.push_back(0);
            len.push_back(1);
            ext.push_back(seq[i]);
            ++z;
        }
    }

    out.phrases.resize(z);
    for (u64 k = 0; k < z; ++k) out.phrases[k] = {src[k], len[k] - 1, ext[k]};
    return out;
}

std::vector<i64> lzend_decode(const lzend_parsing& parsing) {
    std::vector<i64> out;
    out.reserve(parsing.n);
    std::vector<u64> ends;
    ends.reserve(parsing.phrases.size());
    for (const lzend_phrase& f : parsing.phrases) {
        if (f.copy_len > 0) {
            if (f.source == 0 || f.source > ends.size())
                throw std::invalid_argument("lzend_decode: phrase references undefined source");
            u64 e = ends[f.source - 1]; // 1-based end position of the source phrase
            if (f.copy_len > e) throw std::invalid_argument("lzend_decode: copy reaches before the sequence start");
            for (u64 q = e - f.copy_len; q < e; ++q) out.push_back(out[q]);
        }
        out.push_back(f.ext);
        ends.push_back(out.size());
    }
    if (parsing.n != 0 && out.size() != parsing.n) throw std::invalid_argument("lzend_decode: length mismatch");
    return out;
}

lzend_parsing lzend_parse_oracle(std::span<const i64> seq, std::optional<u64> h) {
    if (seq.empty()) throw std::invalid_argument("lzend_parse_oracle: empty sequence");
    u64 n = seq.size();
    u64 cap = h ? *h : n + 1;

    // cs[a][b] = longest common suffix of seq[0..a] and seq[0..b]
    std::vector<std::vector<u32>> cs(n, std::vector<u32>(n, 0));
    for (u64 a = 0; a < n; ++a)
        for (u64 b = 0; b < n; ++b)
            if (seq[a] == seq[b]) cs[a][b] = (a > 0 && b > 0 ? cs[a - 1][b - 1] : 0) + 1;

    lzend_parsing out;
    out.n = n;
    out.h = h;
    std::vector<u64> ends; // 0-based end index of each phrase
    u64 u = 0;
    while (u < n) {
        u64 best_l = 0;
        u32 best_src = 0;
        u64 rem = n - u;
        for (u64 pi = 0; pi < ends.size(); ++pi) {
            u64 e = ends[pi];
            u64 lmax = std::min({e + 1, rem - 1, cap - 1});
            for (u64 l = lmax; l > best_l; --l) {
                if (cs[u + l - 1][e] >= l) {
                    best_l = l;
                    best_src = static_cast<u32>(pi + 1);
                    break;
                }
            }
        }
        out.phrases.push_back({best_src, static_cast<u32>(best_l), seq[u + best_l]});
        u += best_l + 1;
        ends.push_back(u - 1);
    }
    return out;
}

} // namespace csai
