#include <csai/container.hpp>

#include <bit>

namespace csai {

namespace {

void put_header(std::ostream& os, const container_header& h) {
    io::put_u32(os, h.version);
    io::put_u64(os, h.n);
    io::put_u32(os, h.sigma);
    io::put_u64(os, h.r);
    io::put_u32(os, h.scheme);
    io::put_u64(os, h.h);
    io::put_u64(os, h.a);
    io::put_u64(os, h.ref_target);
    io::put_u64(os, h.seed);
    io::put_u64(os, std::bit_cast<u64>(h.build_seconds));
    io::put_u64(os, h.z);
    io::put_u64(os, h.z_l);
    io::put_u64(os, h.z_c);
    io::put_u64(os, h.ref_size);
}

container_header get_header(std::istream& is) {
    container_header h;
    h.version = io::get_u32(is);
    h.n = io::get_u64(is);
    h.sigma = io::get_u32(is);
    h.r = io::get_u64(is);
    h.scheme = io::get_u32(is);
    h.h = io::get_u64(is);
    h.a = io::get_u64(is);
    h.ref_target = io::get_u64(is);
    h.seed = io::get_u64(is);
    h.build_seconds = std::bit_cast<double>(io::get_u64(is));
    h.z = io::get_u64(is);
    h.z_l = io::get_u64(is);
    h.z_c = io::get_u64(is);
    h.ref_size = io::get_u64(is);
    return h;
}

constexpr u64 kHeaderBytes = 4 + 4 + 8 + 4 + 8 + 4 + 8 * 4 + 8 + 8 * 4;

} // namespace

void container_writer::finish(std::ostream& os) const {
    os.write(kContainerMagic, 4);
    put_header(os, header_);
    io::put_u32(os, static_cast<u32>(sections_.size()));
    // table: 4-byte name, offset, length
    u64 table_bytes = sections_.size() * (4 + 8 + 8);
    u64 offset = kHeaderBytes + 4 + table_bytes;
    std::vector<std::string> payloads;
    payloads.reserve(sections_.size());
    for (const auto& [name, stream] : sections_) payloads.push_back(stream.str());
    for (u64 i = 0; i < sections_.size(); ++i) {
        char name4[4] = {0, 0, 0, 0};
        for (u64 k = 0; k < 4 && k < sections_[i].first.size(); ++k) name4[k] = sections_[i].first[k];
        os.write(name4, 4);
        io::put_u64(os, offset);
        io::put_u64(os, payloads[i].size());
        offset += payloads[i].size();
    }
    for (const std::string& p : payloads) os.write(p.data(), static_cast<std::streamsize>(p.size()));
}

container_reader::container_reader(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kContainerMagic, 4) != 0)
        throw std::runtime_error("not an index container (bad magic)");
    header_ = get_header(is);
    if (header_.version != kContainerVersion) throw std::runtime_error("unsupported container version");
    u32 count = io::get_u32(is);
    std::vector<std::pair<std::string, std::pair<u64, u64>>> table(count);
    for (u32 i = 0; i < count; ++i) {
        char name4[4];
        is.read(name4, 4);
        u64 off = io::get_u64(is);
        u64 len = io::get_u64(is);
        std::string name(name4, name4 + 4);
        while (!name.empty() && name.back() == '\0') name.pop_back();
        table[i] = {name, {off, len}};
    }
    u64 payload_start = kHeaderBytes + 4 + u64(count) * 20;
    u64 cursor = payload_start;
    for (auto& [name, range] : table) {
        if (range.first != cursor) throw std::runtime_error("container section offset out of order");
        cursor += range.second;
        std::string bytes(range.second, '\0');
        is.read(bytes.data(), static_cast<std::streamsize>(range.second));
        if (!is) throw std::runtime_error("container truncated in section " + name);
        sections_[name] = std::move(bytes);
    }
}

std::istringstream container_reader::open(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end()) throw std::runtime_error("container missing section " + name);
    return std::istringstream(it->second, std::ios::binary);
}

} // namespace csai
