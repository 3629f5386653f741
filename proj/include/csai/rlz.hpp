#pragma once

#include <csai/suffix_structures.hpp>

#include <map>
#include <unordered_map>

namespace csai {

// value -> remaining frequency in A^d (zeroed once the value is covered by R)
using freq_map = std::unordered_map<i64, u64>;

// Frequencies of all values in A^d from the Phi samples alone, in O(r)
// expected time: each sample interval [u_x, u_{x+1}) contributes the value
// u_x - Phi(u_x) with multiplicity of the interval length, skipping i = A[1].
freq_map value_frequencies(const phi_samples& phi);

struct rlz_ref_params {
    u64 target_size = 0;   // t_R
    u64 segment_size = 3072;
    u64 candidates = 16;   // M
    double eps_prime = 1.0 / 20.0;
    u64 seed = 0;

    static rlz_ref_params defaults(u64 n, u64 r, u64 seed = 0);
};

struct rlz_reference {
    std::vector<i64> values;                    // R: concatenated segments of A^d
    std::vector<std::pair<u64, u64>> segments;  // chosen [b, e] intervals, sorted, disjoint
    u64 target_size = 0;
};

// score of a window: sum over distinct values of sqrt(remaining frequency),
// divided by the window length
double score_segment(const freq_map& freq, std::span<const i64> window);

rlz_reference build_reference(std::span<const i64> ad, freq_map freq, const rlz_ref_params& params);

// greedy gap closing between adjacent segments while the budget allows;
// segments keyed by start position, total tracks |R|
void close_gaps(std::map<u64, u64>& segments, freq_map& freq, std::span<const i64> ad, u64 target_size,
                u64& total);

struct rlz_phrase {
    bool is_literal = false;
    i64 literal = 0; // A^d value
    u64 src = 0;     // 1-based position in R
    u64 len = 0;     // copy length, in [2, 2^16]

    static rlz_phrase make_literal(i64 v) { return {true, v, 0, 0}; }
    static rlz_phrase make_copy(u64 src, u64 len) { return {false, 0, src, len}; }
    bool operator==(const rlz_phrase&) const = default;
};

constexpr u64 kRlzMaxCopyLen = u64(1) << 16;

// Greedy longest-prefix parsing of ad against R by backward search over the
// reverse of R, aborting once the interval is a single occurrence and
// extending by direct scan. Length-1 copies become literals.
std::vector<rlz_phrase> rlz_parse(std::span<const i64> ad, std::span<const i64> r);

std::vector<i64> rlz_decode(const std::vector<rlz_phrase>& phrases, std::span<const i64> r);

// legacy parsing rule: every copy phrase is preceded by a literal
std::vector<rlz_phrase> rlz_parse_legacy(std::span<const i64> ad, std::span<const i64> r);

} // namespace csai
