#pragma once

#include <csai/common.hpp>

#include <map>
#include <sstream>

namespace csai {

// Index file layout: magic "CSAI", a fixed header, a section table
// (name, offset, length) and the section payloads. All integers are
// little-endian fixed width. Unknown sections are skipped by readers.
inline constexpr char kContainerMagic[4] = {'C', 'S', 'A', 'I'};
inline constexpr u32 kContainerVersion = 1;

struct container_header {
    u32 version = kContainerVersion;
    u64 n = 0;
    u32 sigma = 0;
    u64 r = 0;
    u32 scheme = 0;
    u64 h = 0, a = 0, ref_target = 0, seed = 0;
    double build_seconds = 0.0;
    u64 z = 0, z_l = 0, z_c = 0, ref_size = 0; // scheme statistics, 0 when n/a
};

class container_writer {
public:
    explicit container_writer(container_header header) : header_(header) {}

    std::ostringstream& section(const std::string& name) {
        sections_.emplace_back(name, std::ostringstream(std::ios::binary));
        return sections_.back().second;
    }

    void finish(std::ostream& os) const;

private:
    container_header header_;
    std::vector<std::pair<std::string, std::ostringstream>> sections_;
};

class container_reader {
public:
    explicit container_reader(std::istream& is);

    const container_header& header() const { return header_; }
    bool has(const std::string& name) const { return sections_.count(name) > 0; }
    std::istringstream open(const std::string& name) const;

private:
    container_header header_;
    std::map<std::string, std::string> sections_;
};

} // namespace csai
