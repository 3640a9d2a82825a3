#include "iecp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace iecp {

VertexSet VertexSet::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::span<const int>(labels.begin(), labels.size()));
}

VertexSet VertexSet::from_labels(std::span<const int> labels) {
  VertexSet s;
  for (int label : labels) {
    if (label < 1 || label > kMaxVertices) throw ValidationError("vertex label out of range");
    s = s.with(label - 1);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> VertexSet::labels() const {
  auto out = members();
  for (int& v : out) ++v;
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int label : labels()) {
    if (!first) out += ',';
    out += std::to_string(label);
    first = false;
  }
  return out + "}";
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  // Compare sorted member lists lexicographically: the first differing
  // position decides; a proper prefix comes first.
  std::uint64_t x = a.bits_, y = b.bits_;
  while (x != 0 && y != 0) {
    int fx = std::countr_zero(x), fy = std::countr_zero(y);
    if (fx != fy) return fx < fy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::string Edge::label() const { return std::to_string(u + 1) + "-" + std::to_string(v + 1); }

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 2) throw ValidationError("graph needs at least 2 vertices");
  if (n > kMaxVertices)
    throw ValidationError("graph has " + std::to_string(n) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " supported");
  adjacency_.resize(n);
  masks_.resize(n);
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw ValidationError("edge " + e.label() + " has a vertex out of range 1.." + std::to_string(n));
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u + 1));
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw ValidationError("duplicate edge " + dup->label());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    masks_[e.u] = masks_[e.u].with(e.v);
    masks_[e.v] = masks_[e.v].with(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  if (!is_connected_subset(*this, vertices())) throw ValidationError("graph is disconnected");
}

int Graph::edge_index(int a, int b) const {
  Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexSet external_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (int v : s.members()) out = out | g.neighbor_set(v);
  return out - s;
}

bool is_stable(const Graph& g, VertexSet s) {
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1)
    if (g.neighbor_set(std::countr_zero(b)).intersects(s)) return false;
  return true;
}

namespace {

VertexSet reach(const Graph& g, VertexSet within, int start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (std::uint64_t b = frontier.bits(); b != 0; b &= b - 1)
      next = next | g.neighbor_set(std::countr_zero(b));
    next = (next & within) - seen;
    seen = seen | next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected_subset(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reach(g, s, s.first()) == s;
}

std::vector<VertexSet> induced_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  while (!s.empty()) {
    VertexSet comp = reach(g, s, s.first());
    out.push_back(comp);
    s = s - comp;
  }
  return out;
}

bool two_colour(const Graph& g, VertexSet s, std::pair<VertexSet, VertexSet>* sides) {
  VertexSet left, right, remaining = s;
  while (!remaining.empty()) {
    int root = remaining.first();
    VertexSet frontier = VertexSet::single(root);
    VertexSet comp_left = frontier, comp_right;
    bool on_left = true;
    while (!frontier.empty()) {
      VertexSet next;
      for (std::uint64_t b = frontier.bits(); b != 0; b &= b - 1)
        next = next | g.neighbor_set(std::countr_zero(b));
      next = next & s;
      VertexSet& same = on_left ? comp_left : comp_right;
      VertexSet& other = on_left ? comp_right : comp_left;
      if (next.intersects(same)) return false;
      frontier = next - other;
      other = other | frontier;
      on_left = !on_left;
    }
    left = left | comp_left;
    right = right | comp_right;
    remaining = remaining - (comp_left | comp_right);
  }
  if (sides) *sides = {left, right};
  return true;
}

bool is_connected_subgraph_nonbipartite(const Graph& g, VertexSet s) {
  if (!is_connected_subset(g, s))
    throw PreconditionError("induced subgraph on " + s.to_string() + " is disconnected");
  return !two_colour(g, s);
}

CentralityTarget::CentralityTarget(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw ValidationError("centrality vector is empty");
  squares_.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (sgn(values_[i]) <= 0)
      throw ValidationError("centrality entry " + std::to_string(i + 1) + " is not positive: " +
                            to_string(values_[i]));
    squares_.emplace_back(values_[i] * values_[i]);
  }
}

CentralityTarget CentralityTarget::scaled(const Rational& alpha) const {
  std::vector<Rational> out(values_.begin(), values_.end());
  for (auto& v : out) v *= alpha;
  return CentralityTarget(std::move(out));
}

Rational CentralityTarget::sum_squares(VertexSet s) const {
  Rational total = 0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) total += squares_[std::countr_zero(b)];
  return total;
}

void require_matching(const Graph& g, const CentralityTarget& c) {
  if (c.size() != g.order())
    throw ValidationError("centrality vector has " + std::to_string(c.size()) +
                          " entries but the graph has " + std::to_string(g.order()) + " vertices");
}

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (parsed.tokens.empty() || parsed.tokens.front().front() == '#') continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

long parse_count(std::string_view token, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                     std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty graph document");
  const Line& header = lines.front();
  if (header.tokens.size() != 2)
    throw ParseError("line " + std::to_string(header.number) + ": header must be 'n m'");
  long n = parse_count(header.tokens[0], header.number);
  long m = parse_count(header.tokens[1], header.number);
  if (n < 1 || m < 0) throw ParseError("line " + std::to_string(header.number) + ": invalid n or m");
  if (n > kMaxVertices)
    throw ValidationError("graph has " + std::to_string(n) + " vertices; at most " +
                          std::to_string(kMaxVertices) + " supported");
  if (static_cast<long>(lines.size()) - 1 != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " edge lines follow");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.tokens.size() != 2)
      throw ParseError("line " + std::to_string(line.number) + ": edge must be 'i j'");
    long i = parse_count(line.tokens[0], line.number);
    long j = parse_count(line.tokens[1], line.number);
    if (i < 1 || j < 1 || i > n || j > n)
      throw ValidationError("line " + std::to_string(line.number) + ": vertex out of range 1.." +
                            std::to_string(n));
    edges.push_back(Edge{static_cast<int>(i) - 1, static_cast<int>(j) - 1});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

CentralityTarget parse_centrality(std::string_view text) {
  std::vector<Rational> values;
  for (const Line& line : content_lines(text)) {
    if (line.tokens.size() != 1)
      throw ParseError("line " + std::to_string(line.number) + ": expected one rational per line");
    try {
      values.push_back(parse_rational(line.tokens.front()));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
    }
  }
  return CentralityTarget(std::move(values));
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::string format_centrality(const CentralityTarget& c) {
  std::string out;
  for (const auto& v : c.values()) out += to_string(v) + '\n';
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace iecp
