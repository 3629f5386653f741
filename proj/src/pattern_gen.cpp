#include <csai/pattern_gen.hpp>
#include <csai/suffix_structures.hpp>

#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace csai {

std::string escape_pattern(std::string_view raw) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(raw.size());
    for (char ch : raw) {
        u8 b = static_cast<u8>(ch);
        if (b >= 0x21 && b <= 0x7e && b != '\\') {
            out.push_back(static_cast<char>(b));
        } else {
            out += "\\x";
            out.push_back(hex[b >> 4]);
            out.push_back(hex[b & 15]);
        }
    }
    return out;
}

std::string unescape_pattern(std::string_view escaped) {
    auto hexval = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::string out;
    for (u64 i = 0; i < escaped.size();) {
        if (escaped[i] == '\\' && i + 3 < escaped.size() && escaped[i + 1] == 'x') {
            int hi = hexval(escaped[i + 2]), lo = hexval(escaped[i + 3]);
            if (hi < 0 || lo < 0) throw std::runtime_error("bad \\x escape in pattern");
            out.push_back(static_cast<char>(hi * 16 + lo));
            i += 4;
        } else {
            out.push_back(escaped[i]);
            ++i;
        }
    }
    return out;
}

void pattern_set::save(std::ostream& os) const {
    os << "# count=" << count << " length=" << length << " seed=" << seed << "\n";
    for (const std::string& p : patterns) os << escape_pattern(p) << "\n";
}

pattern_set load_pattern_set(std::istream& is) {
    pattern_set ps;
    std::string line;
    if (!std::getline(is, line) || line.rfind("# count=", 0) != 0)
        throw std::runtime_error("pattern file missing header line");
    unsigned long long count = 0, length = 0, seed = 0;
    if (std::sscanf(line.c_str(), "# count=%llu length=%llu seed=%llu", &count, &length, &seed) != 3)
        throw std::runtime_error("malformed pattern file header");
    ps.count = count;
    ps.length = length;
    ps.seed = seed;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ps.patterns.push_back(unescape_pattern(line));
    }
    return ps;
}

pattern_set pattern_set::load(std::istream& is) { return load_pattern_set(is); }

namespace {

// occurrence count via binary search over the suffix array
u64 count_occurrences(std::span<const u8> text, std::span<const u32> sa, std::string_view p) {
    auto cmp_lo = [&](u32 pos, std::string_view pat) {
        std::string_view suf(reinterpret_cast<const char*>(text.data()) + (pos - 1), text.size() - (pos - 1));
        return suf.substr(0, pat.size()) < pat;
    };
    auto cmp_hi = [&](std::string_view pat, u32 pos) {
        std::string_view suf(reinterpret_cast<const char*>(text.data()) + (pos - 1), text.size() - (pos - 1));
        return pat < suf.substr(0, pat.size());
    };
    auto lo = std::lower_bound(sa.begin(), sa.end(), p, cmp_lo);
    auto hi = std::upper_bound(lo, sa.end(), p, cmp_hi);
    return static_cast<u64>(hi - lo);
}

} // namespace

pattern_gen_result generate_patterns(std::span<const u8> text, u64 n_patterns, u64 length,
                                     pattern_regime regime, u64 seed) {
    if (length == 0 || length > text.size()) throw std::invalid_argument("generate_patterns: bad length");
    std::vector<u32> sa = build_suffix_array_bytes(text);
    std::mt19937_64 rng(seed);

    pattern_gen_result out;
    out.set.seed = seed;

    auto substr_at = [&](u64 pos0, u64 m) {
        return std::string(reinterpret_cast<const char*>(text.data()) + pos0, m);
    };

    if (regime == pattern_regime::medium) {
        u64 budget = std::max<u64>(200 * n_patterns, 1000);
        std::uniform_int_distribution<u64> dist(0, text.size() - length);
        u64 lo = std::max<u64>(length / 4, 1), hi = 4 * length;
        while (out.set.patterns.size() < n_patterns && budget-- > 0) {
            std::string cand = substr_at(dist(rng), length);
            u64 occ = count_occurrences(text, sa, cand);
            if (occ >= lo && occ <= hi) out.set.patterns.push_back(std::move(cand));
        }
        out.set.length = length;
        if (out.set.patterns.size() < n_patterns) {
            out.complete = false;
            out.diagnostic = "medium regime: only " + std::to_string(out.set.patterns.size()) + " of " +
                             std::to_string(n_patterns) + " patterns had occ within [m/4, 4m]";
        }
    } else {
        // frequent: occ >= 100*m, shrinking m until a full set fits the budget
        for (u64 m = length; m >= 1; --m) {
            std::vector<std::string> found;
            u64 budget = std::max<u64>(200 * n_patterns, 1000);
            std::uniform_int_distribution<u64> dist(0, text.size() - m);
            while (found.size() < n_patterns && budget-- > 0) {
                std::string cand = substr_at(dist(rng), m);
                if (count_occurrences(text, sa, cand) >= 100 * m) found.push_back(std::move(cand));
            }
            if (found.size() == n_patterns) {
                out.set.patterns = std::move(found);
                out.set.length = m;
                break;
            }
            if (m == 1) {
                out.set.patterns = std::move(found);
                out.set.length = 1;
                out.complete = false;
                out.diagnostic = "frequent regime: target occ >= 100*m unsatisfiable, emitting partial set";
            }
        }
    }
    out.set.count = out.set.patterns.size();
    return out;
}

} // namespace csai
