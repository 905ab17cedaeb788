#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "drdlab/digraph.hpp"

namespace drdlab {

// Line-oriented text format:
//   # comment
//   digraph <n>
//   e <u> <v>
// Edges are 0-indexed; writers emit them sorted lexicographically.

std::string to_edge_list(const digraph& g, std::string_view comment = {});
digraph parse_edge_list(std::string_view text);
digraph read_edge_list_file(const std::string& path);
void write_edge_list_file(const digraph& g, const std::string& path, std::string_view comment = {});

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t file_hash(const std::string& path);
std::string hash_hex(std::uint64_t h);

}  // namespace drdlab
