#include <csai/large_alphabet_rs.hpp>
#include <csai/rlz.hpp>

#include <cmath>
#include <random>
#include <set>
#include <unordered_set>

namespace csai {

freq_map value_frequencies(const phi_samples& phi) {
    freq_map freq;
    freq.reserve(phi.u.size() + 1);
    freq[static_cast<i64>(phi.a1)] += 1; // A^d[1] = A[1]
    for (u64 x = 0; x < phi.u.size(); ++x) {
        u64 next = x + 1 < phi.u.size() ? phi.u[x + 1] : phi.n + 1;
        u64 count = next - phi.u[x];
        if (phi.u[x] == phi.a1) count -= 1; // skip A[1] - A[n]
        if (count == 0) continue;
        i64 v = static_cast<i64>(phi.u[x]) - static_cast<i64>(phi.phi_u[x]);
        freq[v] += count;
    }
    return freq;
}

rlz_ref_params rlz_ref_params::defaults(u64 n, u64 r, u64 seed) {
    rlz_ref_params p;
    p.target_size = std::min<u64>(static_cast<u64>(5.2 * static_cast<double>(r)), n / 3);
    p.target_size = std::max<u64>(p.target_size, 1);
    p.segment_size = 3072;
    p.candidates = static_cast<u64>(std::ceil(5.0 * std::pow(static_cast<double>(n) / static_cast<double>(r), 0.45)));
    p.eps_prime = 1.0 / 20.0;
    p.seed = seed;
    return p;
}

double score_segment(const freq_map& freq, std::span<const i64> window) {
    if (window.empty()) throw std::invalid_argument("score_segment: empty window");
    std::unordered_set<i64> seen;
    seen.reserve(window.size());
    double sum = 0.0;
    for (i64 v : window) {
        if (!seen.insert(v).second) continue;
        auto it = freq.find(v);
        if (it != freq.end() && it->second > 0) sum += std::sqrt(static_cast<double>(it->second));
    }
    return sum / static_cast<double>(window.size());
}

namespace {

// insert [l, r] into disjoint segments, merging with directly adjacent ones
void insert_segment(std::map<u64, u64>& segments, u64 l, u64 r) {
    auto it = segments.upper_bound(l);
    if (it != segments.begin()) {
        auto prev = std::prev(it);
        if (prev->second + 1 == l) {
            l = prev->first;
            segments.erase(prev);
        }
    }
    auto next = segments.find(r + 1);
    if (next != segments.end()) {
        r = next->second;
        segments.erase(next);
    }
    segments[l] = r;
}

std::vector<i64> emit_reference(const std::map<u64, u64>& segments, std::span<const i64> ad) {
    std::vector<i64> r;
    for (auto [b, e] : segments)
        for (u64 q = b; q <= e; ++q) r.push_back(ad[q - 1]);
    return r;
}

} // namespace

void close_gaps(std::map<u64, u64>& segments, freq_map& freq, std::span<const i64> ad, u64 target_size,
                u64& total) {
    if (segments.size() < 2) return;
    struct gap_cmp {
        bool operator()(const std::pair<double, u64>& a, const std::pair<double, u64>& b) const {
            if (a.first != b.first) return a.first > b.first; // higher score first
            return a.second < b.second;                       // then smaller gap start
        }
    };
    auto gap_score = [&](std::map<u64, u64>::iterator it) -> double {
        auto next = std::next(it);
        u64 merged = next->second - it->first + 1;
        u64 gap = next->first - it->second - 1;
        return static_cast<double>(merged) / static_cast<double>(gap);
    };
    std::set<std::pair<double, u64>, gap_cmp> queue;
    std::unordered_map<u64, double> score_of; // keyed by left segment start
    for (auto it = segments.begin(); std::next(it) != segments.end(); ++it) {
        double s = gap_score(it);
        queue.emplace(s, it->first);
        score_of[it->first] = s;
    }
    while (!queue.empty()) {
        auto [score, b] = *queue.begin();
        queue.erase(queue.begin());
        score_of.erase(b);
        auto it = segments.find(b);
        auto next = std::next(it);
        u64 gap_len = next->first - it->second - 1;
        if (total + gap_len > target_size) continue; // cannot close; total only grows
        for (u64 q = it->second + 1; q < next->first; ++q) freq[ad[q - 1]] = 0;
        it->second = next->second;
        total += gap_len;
        segments.erase(next);
        // rescore the gaps on both sides of the merged segment
        auto refresh = [&](std::map<u64, u64>::iterator seg) {
            auto found = score_of.find(seg->first);
            if (found != score_of.end()) {
                queue.erase({found->second, seg->first});
                score_of.erase(found);
            }
            if (std::next(seg) != segments.end()) {
                double s = gap_score(seg);
                queue.emplace(s, seg->first);
                score_of[seg->first] = s;
            }
        };
        refresh(it);
        if (it != segments.begin()) refresh(std::prev(it));
    }
}

rlz_reference build_reference(std::span<const i64> ad, freq_map freq, const rlz_ref_params& params) {
    u64 n = ad.size();
    if (n == 0) throw std::invalid_argument("build_reference: empty input");
    rlz_reference out;
    out.target_size = params.target_size;

    if (params.target_size >= n) { // degenerate: reference is the whole array
        out.segments.emplace_back(1, n);
        out.values.assign(ad.begin(), ad.end());
        return out;
    }

    u64 s = std::max<u64>(1, std::min({params.segment_size, n, params.target_size}));
    u64 threshold = static_cast<u64>(std::ceil((1.0 - params.eps_prime) * static_cast<double>(params.target_size)));
    std::mt19937_64 rng(params.seed);
    std::uniform_int_distribution<u64> dist(1, n - s + 1);

    std::map<u64, u64> segments;
    u64 total = 0;
    u64 empty_batches = 0;

    while (total < threshold && empty_batches < 64) {
        u64 best_l = 0, best_r = 0;
        double best_score = -1.0;
        for (u64 k = 0; k < std::max<u64>(params.candidates, 1); ++k) {
            u64 l = dist(rng), r = l + s - 1;
            // shrink against chosen segments (leftmost uncovered piece)
            auto it = segments.upper_bound(l);
            if (it != segments.begin()) {
                auto prev = std::prev(it);
                if (prev->second >= l) l = prev->second + 1;
            }
            if (l > r) continue;
            it = segments.lower_bound(l);
            if (it != segments.end() && it->first <= r) r = it->first - 1;
            double sc = score_segment(freq, ad.subspan(l - 1, r - l + 1));
            if (sc > best_score || (sc == best_score && l < best_l)) {
                best_score = sc;
                best_l = l;
                best_r = r;
            }
        }
        if (best_score < 0) {
            ++empty_batches;
            continue;
        }
        if (total + (best_r - best_l + 1) > params.target_size) // trim to budget
            best_r = best_l + (params.target_size - total) - 1;
        for (u64 q = best_l; q <= best_r; ++q) freq[ad[q - 1]] = 0;
        insert_segment(segments, best_l, best_r);
        total += best_r - best_l + 1;
    }

    close_gaps(segments, freq, ad, params.target_size, total);

    out.segments.assign(segments.begin(), segments.end());
    out.values = emit_reference(segments, ad);
    return out;
}

namespace {

// FM-index over the reverse of R with a terminator, plus the plain suffix
// array for occurrence resolution while parsing (B.5 abort-and-scan)
class rlz_matcher {
public:
    explicit rlz_matcher(std::span<const i64> r) : r_(r) {
        u64 m = r.size();
        std::vector<i64> sorted(r.begin(), r.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        sigma_ = sorted.size();
        rank_of_.reserve(sigma_);
        for (u64 i = 0; i < sigma_; ++i) rank_of_.emplace(sorted[i], static_cast<u32>(i + 1));

        std::vector<u32> seq(m + 1);
        for (u64 i = 0; i < m; ++i) seq[i] = rank_of_.at(r[m - 1 - i]); // reverse of R
        seq[m] = 0;                                                     // terminator
        sa_ = suffix_array_dense(seq, static_cast<u32>(sigma_) + 1);
        u64 nr = m + 1;
        std::vector<u32> bwt(nr);
        for (u64 i = 0; i < nr; ++i) bwt[i] = seq[(sa_[i] + nr - 1) % nr] + 1; // shift for the RS alphabet
        rs_ = large_alphabet_rs(bwt, static_cast<u32>(sigma_) + 1);
        c_.assign(sigma_ + 2, 0);
        for (u32 v : seq) ++c_[v + 1];
        for (u64 c = 1; c < c_.size(); ++c) c_[c] += c_[c - 1];
    }

    // longest match of ad[p..] in R (0-based p), capped; returns (src0, len)
    std::pair<u64, u64> longest_match(std::span<const i64> ad, u64 p, u64 cap) const {
        u64 m = r_.size(), nr = m + 1;
        u64 j = 0, b = 1, e = nr;
        u64 row = 0; // row of one occurrence once known
        bool resolved = false;
        u64 src0 = 0;
        while (j < cap && p + j < ad.size()) {
            auto it = rank_of_.find(ad[p + j]);
            if (it == rank_of_.end()) break;
            u32 c = it->second;
            u64 b2, e2;
            if (j == 0) {
                b2 = c_[c] + 1;
                e2 = c_[c + 1];
            } else {
                b2 = c_[c] + rs_.rank(c + 1, b - 1) + 1;
                e2 = c_[c] + rs_.rank(c + 1, e);
            }
            if (b2 > e2) break;
            ++j;
            b = b2;
            e = e2;
            if (b == e) { // single occurrence: abort the search, scan in R
                u64 q = sa_[b - 1];
                src0 = m - q - j;
                resolved = true;
                while (j < cap && p + j < ad.size() && src0 + j < m && ad[p + j] == r_[src0 + j]) ++j;
                return {src0, j};
            }
        }
        if (j == 0) return {0, 0};
        if (!resolved) {
            u64 q = sa_[b - 1];
            src0 = m - q - j;
        }
        return {src0, j};
    }

private:
    std::span<const i64> r_;
    u64 sigma_ = 0;
    std::unordered_map<i64, u32> rank_of_;
    std::vector<u32> sa_;
    large_alphabet_rs rs_;
    std::vector<u64> c_;
};

} // namespace

std::vector<rlz_phrase> rlz_parse(std::span<const i64> ad, std::span<const i64> r) {
    if (r.empty()) throw std::invalid_argument("rlz_parse: empty reference");
    rlz_matcher matcher(r);
    std::vector<rlz_phrase> out;
    u64 p = 0;
    while (p < ad.size()) {
        auto [src0, len] = matcher.longest_match(ad, p, kRlzMaxCopyLen);
        if (len <= 1) { // no match, or a length-1 copy demoted to a literal
            out.push_back(rlz_phrase::make_literal(ad[p]));
            ++p;
        } else {
            out.push_back(rlz_phrase::make_copy(src0 + 1, len));
            p += len;
        }
    }
    return out;
}

std::vector<rlz_phrase> rlz_parse_legacy(std::span<const i64> ad, std::span<const i64> r) {
    if (r.empty()) throw std::invalid_argument("rlz_parse_legacy: empty reference");
    rlz_matcher matcher(r);
    std::vector<rlz_phrase> out;
    u64 p = 0;
    while (p < ad.size()) {
        out.push_back(rlz_phrase::make_literal(ad[p])); // every copy is preceded by a literal
        ++p;
        if (p >= ad.size()) break;
        auto [src0, len] = matcher.longest_match(ad, p, kRlzMaxCopyLen);
        if (len >= 1) {
            out.push_back(rlz_phrase::make_copy(src0 + 1, len));
            p += len;
        }
    }
    return out;
}

std::vector<i64> rlz_decode(const std::vector<rlz_phrase>& phrases, std::span<const i64> r) {
    std::vector<i64> out;
    for (const rlz_phrase& f : phrases) {
        if (f.is_literal) {
            out.push_back(f.literal);
        } else {
            if (f.src == 0 || f.src + f.len - 1 > r.size()) throw std::invalid_argument("rlz_decode: bad copy");
            for (u64 k = 0; k < f.len; ++k) out.push_back(r[f.src - 1 + k]);
        }
    }
    return out;
}

} // namespace csai
