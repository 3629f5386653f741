#pragma once

#include <cstdint>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csai {

using u8 = uint8_t;
using u16 = uint16_t;
using u32 = uint32_t;
using u64 = uint64_t;
using i64 = int64_t;

// number of bits needed to store v (at least 1)
inline u32 bit_width_for(u64 v) {
    u32 w = 1;
    while (v >> w) ++w;
    return w;
}

namespace io {

inline void put_u32(std::ostream& os, u32 v) {
    u8 b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<u8>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 4);
}

inline void put_u64(std::ostream& os, u64 v) {
    u8 b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<u8>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline void put_i64(std::ostream& os, i64 v) { put_u64(os, static_cast<u64>(v)); }

inline u32 get_u32(std::istream& is) {
    u8 b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("unexpected end of stream");
    u32 v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<u32>(b[i]) << (8 * i);
    return v;
}

inline u64 get_u64(std::istream& is) {
    u8 b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) throw std::runtime_error("unexpected end of stream");
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<u64>(b[i]) << (8 * i);
    return v;
}

inline i64 get_i64(std::istream& is) { return static_cast<i64>(get_u64(is)); }

template <typename T>
void put_vec_u64(std::ostream& os, const std::vector<T>& v) {
    put_u64(os, v.size());
    for (const T& x : v) put_u64(os, static_cast<u64>(x));
}

template <typename T>
std::vector<T> get_vec_u64(std::istream& is) {
    u64 m = get_u64(is);
    std::vector<T> v(m);
    for (u64 i = 0; i < m; ++i) v[i] = static_cast<T>(get_u64(is));
    return v;
}

} // namespace io

} // namespace csai
