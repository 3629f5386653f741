#pragma once

#include <csai/common.hpp>

#include <iosfwd>

namespace csai {

// Pattern set file: a "# count=N length=m seed=S" header line, then one
// byte-escaped pattern per line, all of the same length.
struct pattern_set {
    u64 count = 0;
    u64 length = 0;
    u64 seed = 0;
    std::vector<std::string> patterns;

    void save(std::ostream& os) const;
    static pattern_set load(std::istream& is);
};

enum class pattern_regime { medium, frequent };

struct pattern_gen_result {
    pattern_set set;
    bool complete = true;     // false when the retry budget ran out
    std::string diagnostic;   // set when incomplete
};

// medium: random length-m substrings with occ in [m/4, 4m];
// frequent: substrings with occ >= 100*m, lowering m until satisfiable.
pattern_gen_result generate_patterns(std::span<const u8> text, u64 n_patterns, u64 length,
                                     pattern_regime regime, u64 seed);

std::string escape_pattern(std::string_view raw);
std::string unescape_pattern(std::string_view escaped);

} // namespace csai
