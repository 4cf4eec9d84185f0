#include "polycon/planar_code.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace polycon {

std::string to_planar_code(const PlaneMap& m) {
    require(m.vertex_count() >= 1 && m.vertex_count() <= 255, "MalformedInput",
            "planar_code holds 1..255 vertices, map has " + std::to_string(m.vertex_count()));
    std::string out;
    out.push_back(static_cast<char>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) {
        for (int u : m.neighbors(v)) out.push_back(static_cast<char>(u + 1));
        out.push_back(0);
    }
    return out;
}

std::string to_planar_code_stream(const std::vector<PlaneMap>& maps, bool header) {
    std::string out;
    if (header) out += kPlanarCodeHeader;
    for (const auto& m : maps) out += to_planar_code(m);
    return out;
}

std::vector<PlaneMap> read_planar_code(const std::string& bytes) {
    size_t pos = 0;
    const size_t len = bytes.size();
    const size_t hlen = std::strlen(kPlanarCodeHeader);
    if (len >= hlen && bytes.compare(0, hlen, kPlanarCodeHeader) == 0) pos = hlen;

    auto malformed = [&](const std::string& what) {
        fail("MalformedInput", what + " at byte offset " + std::to_string(pos));
    };

    std::vector<PlaneMap> out;
    while (pos < len) {
        const int n = static_cast<unsigned char>(bytes[pos]);
        if (n == 0) malformed("record with n = 0");
        ++pos;
        std::vector<std::vector<int>> nbrs(n);
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= len) malformed("truncated record");
                const int b = static_cast<unsigned char>(bytes[pos]);
                ++pos;
                if (b == 0) break;
                if (b > n) malformed("neighbor id " + std::to_string(b) + " exceeds n");
                nbrs[v].push_back(b - 1);
            }
        }
        try {
            out.push_back(PlaneMap::from_rotation(nbrs));
        } catch (const Error& e) {
            fail("MalformedInput",
                 std::string(e.what()) + " in record ending at byte offset " + std::to_string(pos));
        }
    }
    return out;
}

std::vector<PlaneMap> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "MalformedInput", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_planar_code(ss.str());
}

void write_planar_code_file(const std::string& path, const std::vector<PlaneMap>& maps,
                            bool header) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "MalformedInput", "cannot open " + path + " for writing");
    const std::string bytes = to_planar_code_stream(maps, header);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

std::string from_hex(const std::string& hex) {
    require(hex.size() % 2 == 0, "MalformedInput", "odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        fail("MalformedInput", std::string("bad hex digit '") + c + "'");
    };
    std::string out;
    out.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2) {
        out.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
    }
    return out;
}

} // namespace polycon
