#include "drdlab/edgelist_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace drdlab {

namespace {

bool parse_int(std::string_view tok, int& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

std::string to_edge_list(const digraph& g, std::string_view comment) {
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "digraph " << g.order() << "\n";
  for (const edge& e : g.edges()) os << "e " << e.from << " " << e.to << "\n";
  return os.str();
}

digraph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<edge> edges;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++lineno;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (n < 0) {
      if (toks.size() != 2 || toks[0] != "digraph" || !parse_int(toks[1], n) || n < 1)
        fail(errc::parse, "line " + std::to_string(lineno) + ": expected 'digraph <n>'");
      continue;
    }
    int u = 0, v = 0;
    if (toks.size() != 3 || toks[0] != "e" || !parse_int(toks[1], u) || !parse_int(toks[2], v))
      fail(errc::parse, "line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
    edges.push_back({u, v});
  }
  if (n < 0) fail(errc::parse, "missing 'digraph <n>' header");
  return digraph::from_edges(n, edges);
}

digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list_file(const digraph& g, const std::string& path, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::io, "cannot open " + path + " for writing");
  out << to_edge_list(g, comment);
  if (!out) fail(errc::io, "write failed: " + path);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace drdlab
