#include <CLI11.hpp>

#include <csai/container.hpp>
#include <csai/pattern_gen.hpp>
#include <csai/self_index.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

using namespace csai;

namespace {

self_index load_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index: " + path);
    return self_index::load(in);
}

container_header read_header(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open index: " + path);
    return container_reader(in).header();
}

pattern_set load_patterns_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pattern file: " + path);
    return pattern_set::load(in);
}

std::string regime_of(const std::string& path) {
    std::string base = std::filesystem::path(path).filename().string();
    if (base.find("frequent") != std::string::npos) return "frequent";
    if (base.find("medium") != std::string::npos) return "medium";
    return "unspecified";
}

int cmd_build(const std::string& text_path, const std::string& out_path, const std::string& scheme,
              u64 h, u64 a, u64 ref_size, u64 seed) {
    std::optional<sa_scheme> sc = scheme_from_name(scheme);
    if (!sc) {
        std::cerr << "unknown scheme: " << scheme << "\n";
        return 1;
    }
    std::vector<u8> text = read_byte_file(text_path);
    index_params params;
    params.scheme = *sc;
    params.lzend_h = h;
    params.rlzsa_a = a;
    params.ref_target = ref_size;
    params.seed = seed;
    self_index ix = self_index::build(text, params);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    ix.save(out);
    out.close();
    std::cout << "built " << scheme_name(ix.scheme()) << " index: n=" << ix.n() << " sigma=" << ix.sigma()
              << " r=" << ix.runs() << " bytes=" << std::filesystem::file_size(out_path)
              << " build_seconds=" << ix.build_seconds() << "\n";
    return 0;
}

int cmd_query(const std::string& index_path, const std::string& pattern_path, const std::string& mode) {
    self_index ix = load_index_file(index_path);
    pattern_set ps = load_patterns_file(pattern_path);
    std::ostringstream out;
    for (const std::string& p : ps.patterns) {
        if (mode == "count") {
            out << ix.count(p) << "\n";
        } else {
            std::vector<u32> occ = ix.locate(p);
            for (u64 i = 0; i < occ.size(); ++i) out << (i ? " " : "") << occ[i];
            out << "\n";
        }
    }
    std::cout << out.str();
    return 0;
}

int cmd_gen_patterns(const std::string& text_path, const std::string& out_path, u64 n, u64 m,
                     const std::string& target, u64 seed) {
    std::vector<u8> text = read_byte_file(text_path);
    pattern_regime regime;
    if (target == "medium")
        regime = pattern_regime::medium;
    else if (target == "frequent")
        regime = pattern_regime::frequent;
    else {
        std::cerr << "unknown target: " << target << " (expected medium|frequent)\n";
        return 1;
    }
    pattern_gen_result res = generate_patterns(text, n, m, regime, seed);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    res.set.save(out);
    std::cout << "wrote " << res.set.count << " patterns of length " << res.set.length << " to " << out_path
              << "\n";
    if (!res.complete) {
        std::cerr << "warning: " << res.diagnostic << "\n";
        return 2;
    }
    return 0;
}

struct bench_row {
    std::string scheme, regime;
    u64 n_patterns, m;
    double avg_occ, build_seconds;
    u64 index_bytes;
    double bits_per_symbol, count_per_ms, locate_per_ms, occ_per_ms;
};

void write_csv(std::ostream& os, const std::vector<bench_row>& rows) {
    os << "scheme,pattern_regime,N,m,avg_occ,build_seconds,index_bytes,bits_per_symbol,"
          "count_queries_per_ms,locate_queries_per_ms,occ_per_ms\n";
    for (const bench_row& r : rows) {
        os << r.scheme << ',' << r.regime << ',' << r.n_patterns << ',' << r.m << ',' << r.avg_occ << ','
           << r.build_seconds << ',' << r.index_bytes << ',' << r.bits_per_symbol << ',' << r.count_per_ms
           << ',' << r.locate_per_ms << ',' << r.occ_per_ms << "\n";
    }
}

int cmd_bench(const std::vector<std::string>& index_paths, const std::vector<std::string>& pattern_paths,
              u64 reps, u64 threads, const std::string& out_path) {
    std::vector<bench_row> rows;
    for (const std::string& ixp : index_paths) {
        self_index ix = load_index_file(ixp);
        u64 index_bytes = std::filesystem::file_size(ixp);
        for (const std::string& pp : pattern_paths) {
            pattern_set ps = load_patterns_file(pp);
            const std::vector<std::string>& pats = ps.patterns;
            if (pats.empty()) continue;

            auto run_batch = [&](auto&& fn) -> double { // wall milliseconds per rep
                auto t0 = std::chrono::steady_clock::now();
                for (u64 rep = 0; rep < reps; ++rep) {
                    if (threads <= 1) {
                        for (const std::string& p : pats) fn(p);
                    } else {
                        std::vector<std::thread> pool;
                        u64 chunk = (pats.size() + threads - 1) / threads;
                        for (u64 t = 0; t < threads; ++t) {
                            u64 lo = t * chunk, hi = std::min<u64>(pats.size(), lo + chunk);
                            if (lo >= hi) break;
                            pool.emplace_back([&, lo, hi] {
                                for (u64 i = lo; i < hi; ++i) fn(pats[i]);
                            });
                        }
                        for (std::thread& th : pool) th.join();
                    }
                }
                double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                return ms / static_cast<double>(reps);
            };

            std::atomic<u64> total_occ{0};
            double count_ms = run_batch([&](const std::string& p) { ix.count(p); });
            double locate_ms = run_batch([&](const std::string& p) {
                total_occ.fetch_add(ix.locate(p).size(), std::memory_order_relaxed);
            });
            u64 occ_per_rep = total_occ.load() / reps;

            bench_row row;
            row.scheme = scheme_name(ix.scheme());
            row.regime = regime_of(pp);
            row.n_patterns = pats.size();
            row.m = ps.length;
            row.avg_occ = static_cast<double>(occ_per_rep) / static_cast<double>(pats.size());
            row.build_seconds = ix.build_seconds();
            row.index_bytes = index_bytes;
            row.bits_per_symbol = 8.0 * static_cast<double>(index_bytes) / static_cast<double>(ix.n());
            row.count_per_ms = static_cast<double>(pats.size()) / count_ms;
            row.locate_per_ms = static_cast<double>(pats.size()) / locate_ms;
            row.occ_per_ms = static_cast<double>(occ_per_rep) / locate_ms;
            rows.push_back(row);
        }
    }
    if (out_path.empty()) {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        write_csv(out, rows);
        std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    }
    return 0;
}

int cmd_inspect(const std::string& path, bool as_i64) {
    if (as_i64) {
        std::vector<i64> seq = read_i64_file(path);
        if (seq.empty()) {
            std::cout << "empty sequence\n";
            return 0;
        }
        std::vector<i64> sorted(seq);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        lzend_parsing parsing = lzend_parse(seq, lzend_sa_store::kDefaultMaxPhrase);
        std::cout << "int64 sequence: n=" << seq.size() << " distinct=" << sorted.size()
                  << " z_end(h=2^13)=" << parsing.z() << "\n";
        return 0;
    }
    container_header h = read_header(path);
    std::cout << "scheme=" << scheme_name(static_cast<sa_scheme>(h.scheme)) << " n=" << h.n
              << " sigma=" << h.sigma << " r=" << h.r << " h=" << h.h << " a=" << h.a
              << " ref_target=" << h.ref_target << " seed=" << h.seed << " build_seconds=" << h.build_seconds
              << "\n";
    if (h.z) std::cout << "z=" << h.z << " z_l=" << h.z_l << " z_c=" << h.z_c << " ref_size=" << h.ref_size << "\n";
    std::cout << "bytes=" << std::filesystem::file_size(path) << " bits_per_symbol="
              << 8.0 * static_cast<double>(std::filesystem::file_size(path)) / static_cast<double>(h.n) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"compressed suffix array self-index toolkit"};
    app.require_subcommand(1);

    std::string text_path, out_path, index_path, pattern_path, scheme = "rlzsa", mode = "count",
                target = "medium";
    std::vector<std::string> index_paths, pattern_paths;
    u64 h = lzend_sa_store::kDefaultMaxPhrase, a = rlzsa_store::kDefaultSampling, ref_size = 0, seed = 0;
    u64 n_patterns = 1000, m = 8, reps = 1, threads = 1;
    bool as_i64 = false;

    CLI::App* build = app.add_subcommand("build", "build an index from a byte text file");
    build->add_option("text", text_path)->required();
    build->add_option("--output,-o", out_path)->required();
    build->add_option("--scheme", scheme)->check(CLI::IsMember({"phi", "lzend", "rlzsa", "rlzsa-legacy"}));
    build->add_option("--h", h, "maximum LZ-End phrase length");
    build->add_option("--a", a, "copy-phrase sampling parameter");
    build->add_option("--ref-size", ref_size, "RLZ reference size (0 = min(5.2r, n/3))");
    build->add_option("--seed", seed);

    CLI::App* query = app.add_subcommand("query", "run count or locate queries from a pattern file");
    query->add_option("index", index_path)->required();
    query->add_option("patterns", pattern_path)->required();
    query->add_option("--mode", mode)->check(CLI::IsMember({"count", "locate"}));

    CLI::App* gen = app.add_subcommand("gen-patterns", "sample query patterns from a text");
    gen->add_option("text", text_path)->required();
    gen->add_option("--output,-o", out_path)->required();
    gen->add_option("--count,-n", n_patterns);
    gen->add_option("--length,-m", m);
    gen->add_option("--target", target)->check(CLI::IsMember({"medium", "frequent"}));
    gen->add_option("--seed", seed);

    CLI::App* bench = app.add_subcommand("bench", "benchmark count/locate throughput, CSV output");
    bench->add_option("--index", index_paths)->required()->expected(-1);
    bench->add_option("--patterns", pattern_paths)->required()->expected(-1);
    bench->add_option("--reps", reps);
    bench->add_option("--threads", threads);
    bench->add_option("--output,-o", out_path);

    CLI::App* inspect = app.add_subcommand("inspect", "print container header or int64 sequence stats");
    inspect->add_option("file", index_path)->required();
    inspect->add_flag("--int64", as_i64, "treat the file as little-endian signed 64-bit integers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(text_path, out_path, scheme, h, a, ref_size, seed);
        if (query->parsed()) return cmd_query(index_path, pattern_path, mode);
        if (gen->parsed()) return cmd_gen_patterns(text_path, out_path, n_patterns, m, target, seed);
        if (bench->parsed()) return cmd_bench(index_paths, pattern_paths, reps, threads, out_path);
        if (inspect->parsed()) return cmd_inspect(index_path, as_i64);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
