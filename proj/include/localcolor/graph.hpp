#ifndef LOCALCOLOR_GRAPH_HPP
#define LOCALCOLOR_GRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace localcolor {

// Undirected simple graph on vertices 0..n-1. Adjacency lists stay sorted.
// Build with add_edge, then treat as immutable; algorithms take const refs
// and never mutate, so sharing across threads is safe after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++edge_count_;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  int max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
    return best;
  }

  // edges as (u,v) with u < v, lexicographic
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
      for (int w : adj_[static_cast<std::size_t>(u)])
        if (w > u) out.emplace_back(u, w);
    return out;
  }

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  }

  static void insert_sorted(std::vector<int>& list, int v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) throw std::invalid_argument("add_edge: duplicate edge");
    list.insert(it, v);
  }

  std::vector<std::vector<int>> adj_;
  std::int64_t edge_count_ = 0;
};

// Induced subgraph plus the relabeling back to the host graph.
struct Subgraph {
  Graph graph;                   // vertices 0..k-1
  std::vector<int> to_original;  // local id -> original id, ascending
};

// Induced subgraph on the vertex set `keep` (duplicates rejected).
// Local ids follow ascending original id.
inline Subgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Subgraph out;
  out.to_original = keep;
  std::sort(out.to_original.begin(), out.to_original.end());
  if (std::adjacent_find(out.to_original.begin(), out.to_original.end()) != out.to_original.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    const int v = out.to_original[i];
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    local[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  out.graph = Graph(static_cast<int>(out.to_original.size()));
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    for (int w : g.neighbors(out.to_original[i])) {
      const int lw = local[static_cast<std::size_t>(w)];
      if (lw > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), lw);
    }
  return out;
}

inline Subgraph delete_vertices(const Graph& g, const std::vector<int>& remove) {
  std::vector<char> gone(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : remove) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("delete_vertices: vertex out of range");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Components listed by smallest contained vertex; vertices ascending inside.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

namespace detail {

inline bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

}  // namespace detail

// Text format: first significant line is the vertex count, every following
// significant line is "u v" with 0 <= u < v < n. Lines whose first non-space
// character is '#' and blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    if (line[start] == '#') continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(start, end - start + 1);

    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (t < line.size()) {
      std::size_t ws = line.find_first_of(" \t", t);
      if (ws == std::string_view::npos) ws = line.size();
      if (ws > t) tokens.push_back(line.substr(t, ws - t));
      t = ws + 1;
    }

    if (!have_header) {
      int n = 0;
      if (tokens.size() != 1 || !detail::parse_int(tokens[0], n) || n < 0)
        throw ParseError(line_number, "expected vertex count");
      g = Graph(n);
      have_header = true;
      continue;
    }

    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !detail::parse_int(tokens[0], u) || !detail::parse_int(tokens[1], v))
      throw ParseError(line_number, "expected edge 'u v'");
    if (u == v) throw ParseError(line_number, "self-loop");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
      throw ParseError(line_number, "endpoint out of range");
    if (u > v) throw ParseError(line_number, "edge must be written with u < v");
    if (g.has_edge(u, v)) throw ParseError(line_number, "duplicate edge");
    g.add_edge(u, v);
  }
  if (!have_header) throw ParseError(line_number, "missing vertex count");
  return g;
}

// Header line, then edges sorted lexicographically, newline terminated.
// parse(serialize(g)) == g bit-exactly.
inline std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count());
  out.push_back('\n');
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out.push_back(' ');
    out += std::to_string(v);
    out.push_back('\n');
  }
  return out;
}

}  // namespace localcolor

#endif
