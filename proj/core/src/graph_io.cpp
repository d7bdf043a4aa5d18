#include "burnlab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "burnlab/errors.hpp"

namespace burnlab {
namespace {

template <class Range>
std::string write(char kind, std::size_t n, const Range& pairs) {
  std::string out;
  out.reserve(16 + pairs.size() * 12);
  out += kind;
  out += ' ';
  out += std::to_string(n);
  out += ' ';
  out += std::to_string(pairs.size());
  out += '\n';
  for (const auto& [a, b] : pairs) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(pos_, end - pos_);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      pos_ = end + 1;
      ++number_;
      if (line.find_first_not_of(" \t") != std::string_view::npos) return true;
    }
    return false;
  }
  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view s, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw InvalidInput("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string to_text(const UndirectedGraph& g) { return write('u', g.vertex_count(), g.edges()); }
std::string to_text(const DirectedTree& t) { return write('d', t.vertex_count(), t.arcs()); }
std::string to_text(const AnyGraph& g) {
  return std::visit([](const auto& x) { return to_text(x); }, g);
}

AnyGraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw InvalidInput("empty graph file");
  const auto header = fields(line);
  if (header.size() != 3 || (header[0] != "u" && header[0] != "d")) {
    throw InvalidInput("line " + std::to_string(reader.number()) + ": header must be 'u|d n m'");
  }
  const bool directed = header[0] == "d";
  const auto n = static_cast<std::size_t>(to_int(header[1], reader.number()));
  const auto m = static_cast<std::size_t>(to_int(header[2], reader.number()));
  if (n > static_cast<std::size_t>(std::numeric_limits<VertexId>::max())) {
    throw InvalidInput("vertex count too large");
  }
  std::vector<Edge> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw InvalidInput("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    }
    const auto f = fields(line);
    if (f.size() != 2) {
      throw InvalidInput("line " + std::to_string(reader.number()) + ": expected 'a b'");
    }
    const auto a = to_int(f[0], reader.number());
    const auto b = to_int(f[1], reader.number());
    if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
      throw InvalidInput("line " + std::to_string(reader.number()) + ": vertex id out of range");
    }
    pairs.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  if (reader.next(line)) {
    throw InvalidInput("line " + std::to_string(reader.number()) + ": trailing content after " +
                       std::to_string(m) + " edges");
  }
  if (directed) return DirectedTree(n, std::move(pairs));
  return UndirectedGraph(n, std::move(pairs));
}

AnyGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::filesystem::path& path, const AnyGraph& g) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << to_text(g);
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

}  // namespace burnlab
