#pragma once

#include <csai/lzend_sa.hpp>
#include <csai/rlzsa.hpp>
#include <csai/small_alphabet_rs.hpp>

#include <optional>
#include <string_view>

namespace csai {

enum class sa_scheme : u32 {
    phi_only = 0,
    lzend = 1,
    rlzsa = 2,
    rlzsa_legacy = 3,
};

const char* scheme_name(sa_scheme s);
std::optional<sa_scheme> scheme_from_name(std::string_view name);

struct index_params {
    sa_scheme scheme = sa_scheme::phi_only;
    u64 lzend_h = lzend_sa_store::kDefaultMaxPhrase;
    u64 rlzsa_a = rlzsa_store::kDefaultSampling;
    u64 ref_target = 0; // 0 = min(5.2 r, n/3)
    u64 seed = 0;
};

struct sa_interval {
    u64 b = 1, e = 0;   // 1-based inclusive; empty iff b > e
    u32 toehold_b = 0;  // A[b] while nonempty
    u32 toehold_e = 0;  // A[e] while nonempty
    u64 depth = 0;      // matched suffix length

    bool empty() const { return b > e; }
    u64 count() const { return empty() ? 0 : e - b + 1; }
};

// Run-length BWT backward-search engine over a byte text (no terminator
// appended; the wrap row of the full-text suffix is excluded from LF
// counting) with run-boundary suffix array samples, Phi evaluation, and an
// optional compressed differential suffix array for locate.
class self_index {
public:
    self_index() = default;

    static self_index build(std::span<const u8> text, const index_params& params);

    u64 n() const { return n_; }
    u32 sigma() const { return sigma_; }
    u64 runs() const { return r_; }
    sa_scheme scheme() const { return params_.scheme; }
    const index_params& params() const { return params_; }
    double build_seconds() const { return build_seconds_; }

    sa_interval full_interval() const;
    sa_interval backward_extend(const sa_interval& iv, u8 symbol) const;

    u64 count(std::string_view pattern) const;
    std::vector<u32> locate(std::string_view pattern) const; // sorted ascending

    u32 phi_step(u64 v) const { return phi_.phi(v); }
    const phi_samples& phi() const { return phi_; }

    const lzend_sa_store* lzend_store() const { return lz_ ? &*lz_ : nullptr; }
    const rlzsa_store* rlzsa() const { return rlzsa_ ? &*rlzsa_ : nullptr; }
    const rlzsa_legacy_store* rlzsa_legacy() const { return legacy_ ? &*legacy_ : nullptr; }

    u64 size_in_bytes() const;

    void save(std::ostream& os) const;
    static self_index load(std::istream& is);

private:
    u64 n_ = 0;
    u32 sigma_ = 0;
    u64 r_ = 0;
    index_params params_;
    double build_seconds_ = 0.0;

    std::vector<u32> byte_to_sym_; // 256 entries, 0 = absent
    std::vector<u8> sym_to_byte_;  // sigma entries

    std::vector<u32> run_starts_;
    std::vector<u32> run_heads_;
    std::vector<u32> sa_start_, sa_end_;
    std::vector<u64> head_count_; // occurrences of the run head before the run
    std::vector<u64> c_;          // c_[c] = #symbols < c in the text
    small_alphabet_rs head_rs_;   // successor/predecessor over the run heads

    u64 wrap_row_ = 0;   // row of the suffix T[1..]
    u32 wrap_sym_ = 0;   // T[n]
    u32 a_before_wrap_ = 0, a_after_wrap_ = 0; // A[wrap_row - 1], A[wrap_row + 1]

    phi_samples phi_;
    std::optional<lzend_sa_store> lz_;
    std::optional<rlzsa_store> rlzsa_;
    std::optional<rlzsa_legacy_store> legacy_;

    void finish_setup(); // derived structures after build/load

    u64 run_of(u64 row) const;              // 1-based run index containing row
    u64 run_end_row(u64 k) const { return k == r_ ? n_ : run_starts_[k] - 1; }
    u64 rank_l(u32 c, u64 row) const;       // #c in L[1..row]
    struct hit {
        u64 row;
        u32 a_value;
    };
    std::optional<hit> first_real(u32 c, u64 from, u64 to, const sa_interval& iv) const;
    std::optional<hit> last_real(u32 c, u64 from, u64 to, const sa_interval& iv) const;
};

} // namespace csai
