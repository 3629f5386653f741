#pragma once

#include <csai/common.hpp>

namespace csai {

// Suffix array construction (SA-IS) over a dense alphabet [0, sigma).
// Returns 0-based suffix start positions in lexicographic order.
std::vector<u32> suffix_array_dense(std::span<const u32> seq, u32 sigma);

// Suffix array over an arbitrary integer sequence; 1-based positions.
// The values are densified internally, the order is unchanged.
std::vector<u32> build_suffix_array(std::span<const i64> seq);
std::vector<u32> build_suffix_array_bytes(std::span<const u8> text);

// Kasai LCP array: h[0] = 0, h[k] = lcp of suffixes ranked k and k-1 (0-based ranks).
std::vector<u32> lcp_array_kasai(std::span<const u32> rank_seq, std::span<const u32> sa0);

// Range-minimum over a fixed array: block minima plus a sparse table over
// the blocks; queries scan at most two blocks.
class range_min {
public:
    range_min() = default;
    explicit range_min(std::vector<u32> values);

    // minimum of values[l..r], 0-based inclusive
    u32 query(u64 l, u64 r) const;

    u64 size_in_bytes() const;

private:
    static constexpr u64 kBlock = 32;
    std::vector<u32> values_;
    std::vector<std::vector<u32>> table_; // table_[k][b] = min over 2^k blocks from b
};

// Index substrate for the LZ-End parser, built over the REVERSE of the
// input sequence: suffix array, the left-to-right inverse variant, LCP
// with range-minimum support.
struct suffix_context {
    u64 n = 0;
    std::vector<u32> sa_rev;   // 0-based suffix array of the reversed sequence
    std::vector<u32> ainv_rev; // ainv_rev[n - sa_rev[i] - 1] = i (0-based, read left to right)
    std::vector<u32> lcp;      // lcp[0] = 0
    range_min rmq;

    // lce of the suffixes (of the reversed sequence) with 0-based lex ranks a < b
    u32 lce(u64 a, u64 b) const { return rmq.query(a + 1, b); }
};

suffix_context build_lzend_context(std::span<const i64> seq);

// BWT with L[i] = T[A[i]-1] (T[n] when A[i] = 1), run boundaries and
// suffix array samples at both ends of every run. 1-based positions.
struct bwt_runs {
    u64 n = 0;
    u64 r = 0;
    std::vector<u32> run_starts;      // l_1 = 1 < l_2 < ... < l_r
    std::vector<u32> run_heads;       // symbol per run (dense alphabet)
    std::vector<u32> sa_at_run_start; // A[l_k]
    std::vector<u32> sa_at_run_end;   // A[l_{k+1} - 1], last entry A[n]

    u32 run_end(u64 k) const { // 1-based run index
        return k == r ? static_cast<u32>(n) : run_starts[k] - 1;
    }
};

bwt_runs build_bwt_runs(std::span<const u32> text, std::span<const u32> sa);

// differential suffix array: d[0] = a[0], d[i] = a[i] - a[i-1]
std::vector<i64> differentiate(std::span<const u32> a);
std::vector<u32> accumulate(std::span<const i64> d);

// Piecewise-linear representation of Phi(i) = A[(A^{-1}[i] - 1) mod n]:
// sample pairs (u_x, Phi(u_x)) at every linearity breakpoint, which are the
// suffix array values at run starts plus, without a terminator symbol, up
// to one extra wrap breakpoint at A[A^{-1}[1] + 1].
struct phi_samples {
    u64 n = 0;
    u32 a1 = 0;               // A[1]
    std::vector<u32> u;       // breakpoint positions, strictly increasing, u[0] = 1
    std::vector<u32> phi_u;   // Phi at each breakpoint

    u32 phi(u64 v) const; // exact Phi(v), v in [1, n]

    u64 size_in_bytes() const { return (u.size() + phi_u.size()) * 4 + 16; }
    void save(std::ostream& os) const;
    static phi_samples load(std::istream& is);
};

phi_samples build_phi_samples(const bwt_runs& runs, std::span<const u32> sa);

// helpers shared by construction paths
std::vector<u32> invert_permutation(std::span<const u32> sa); // 1-based values
std::vector<u8> read_byte_file(const std::string& path);
std::vector<i64> read_i64_file(const std::string& path);

} // namespace csai
