#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polycon/plane_map.hpp"

namespace polycon {

// planar_code: plantri-compatible binary interchange format. An optional
// ASCII header ">>planar_code<<" opens the stream; each record is one byte n
// (1..255) followed, for every vertex 1..n, by its neighbours as 1-based
// bytes in rotation order, each list terminated by a 0 byte.

inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

/// Single-record encoding of one map (no header).
std::string to_planar_code(const PlaneMap& m);

/// Whole-stream encoding; writes the header first unless header=false.
std::string to_planar_code_stream(const std::vector<PlaneMap>& maps, bool header = true);

/// Parse a stream of records. Throws MalformedInput with the byte offset of
/// the violation in the message.
std::vector<PlaneMap> read_planar_code(const std::string& bytes);

std::vector<PlaneMap> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<PlaneMap>& maps,
                            bool header = true);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

} // namespace polycon
