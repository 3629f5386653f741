#pragma once

#include <csai/suffix_structures.hpp>

#include <optional>

namespace csai {

// One LZ-End phrase: copy_len symbols ending at the end of phrase `source`
// (0 = the empty phrase), followed by the extension symbol. Total length
// is copy_len + 1.
struct lzend_phrase {
    u32 source = 0;
    u32 copy_len = 0;
    i64 ext = 0;

    bool operator==(const lzend_phrase&) const = default;
};

struct lzend_parsing {
    std::vector<lzend_phrase> phrases;
    u64 n = 0;                 // decoded length
    std::optional<u64> h;      // maximum phrase length cap, if any

    u64 z() const { return phrases.size(); }

    // cumulative end position (1-based) of each phrase
    std::vector<u64> end_positions() const;
};

// counters for the marker-map update discipline
struct lzend_parse_stats {
    u64 marks = 0;     // lazy insertions into M
    u64 unmarks = 0;   // removals from M (merges only)
    u64 merges = 0;
    u64 extends = 0;
    u64 new_phrases = 0;
};

// Single left-to-right pass over seq (Kempa-Kosolobov style with an
// associative marker map and lazy candidate search). Works for any
// integer alphabet, including differential suffix arrays.
lzend_parsing lzend_parse(std::span<const i64> seq, std::optional<u64> h = std::nullopt,
                          lzend_parse_stats* stats = nullptr);

std::vector<i64> lzend_decode(const lzend_parsing& parsing);

// Quadratic reference parser implementing the greedy definition directly:
// at each phrase start the longest copy that is a suffix of some previous
// phrase-end prefix. Used as a test oracle.
lzend_parsing lzend_parse_oracle(std::span<const i64> seq, std::optional<u64> h = std::nullopt);

} // namespace csai
