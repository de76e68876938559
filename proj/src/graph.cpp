#include "neutro/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro::graph {

namespace {

std::string edge_name(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::size_t parse_count(std::string_view word, std::size_t line_offset, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError("expected " + std::string(what) + ", got '" + std::string(word) + "'", line_offset);
  return value;
}

/// Non-empty, non-comment lines split into words.
struct WordLine {
  std::vector<std::string_view> words;
  std::size_t offset;
  std::size_t number;
};

std::vector<WordLine> word_lines(std::string_view text) {
  std::vector<WordLine> out;
  for (const auto& line : detail::split_lines(text)) {
    std::string_view body = line.text;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto words = detail::split_words(body);
    if (!words.empty()) out.push_back({std::move(words), line.offset, line.number});
  }
  return out;
}

std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }
std::size_t lowest_bit(std::uint64_t x) { return static_cast<std::size_t>(__builtin_ctzll(x)); }

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

// reach[mask * n + v]: a path starting at lowest_bit(mask), visiting exactly
// mask, ends at v. Only vertices above the start are used.
std::vector<char> path_table(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n);
  std::vector<char> reach(static_cast<std::size_t>(full) * n, 0);
  for (std::size_t s = 0; s < n; ++s) reach[(std::uint64_t{1} << s) * n + s] = 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    const std::size_t start = lowest_bit(mask);
    for (std::size_t v = 0; v < n; ++v) {
      if (!reach[mask * n + v]) continue;
      std::uint64_t next = adj[v] & ~mask & ~((std::uint64_t{1} << start) - 1);
      while (next) {
        std::size_t w = lowest_bit(next);
        next &= next - 1;
        reach[(mask | (std::uint64_t{1} << w)) * n + w] = 1;
      }
    }
  }
  return reach;
}

std::vector<Vertex> reconstruct_path(const std::vector<char>& reach, const std::vector<std::uint64_t>& adj,
                                     std::uint64_t mask, Vertex end) {
  const std::size_t n = adj.size();
  std::vector<Vertex> path{end};
  while (popcount(mask) > 1) {
    std::uint64_t prev_mask = mask & ~(std::uint64_t{1} << end);
    std::uint64_t cand = adj[end] & prev_mask;
    Vertex prev = n;
    while (cand) {
      Vertex w = lowest_bit(cand);
      cand &= cand - 1;
      if (reach[prev_mask * n + w]) {
        prev = w;
        break;
      }
    }
    path.push_back(prev);
    mask = prev_mask;
    end = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, GraphOptions options)
    : n_(vertex_count), edges_(std::move(edges)), options_(options) {
  for (const auto& e : edges_) {
    if (e.v >= n_)
      throw DomainError("edge " + edge_name(e) + " references a vertex outside 0.." +
                        (n_ ? std::to_string(n_ - 1) : std::string("(empty)")));
    if (e.is_loop() && !options_.allow_loops) throw DomainError("loop " + edge_name(e) + " in a loopless graph");
  }
  std::sort(edges_.begin(), edges_.end());
  if (!options_.allow_multi) {
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw DomainError("duplicate edge " + edge_name(*dup) + " in a graph without multi-edges");
  }
}

bool Graph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_parallel_edges() const { return std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end(); }

bool Graph::is_simple() const { return !has_loops() && !has_parallel_edges(); }

bool Graph::has_edge(Vertex a, Vertex b) const { return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b)); }

std::size_t Graph::multiplicity(Vertex a, Vertex b) const {
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), Edge(a, b));
  return static_cast<std::size_t>(hi - lo);
}

std::size_t Graph::degree(Vertex x) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.u == x) ++d;
    if (e.v == x) ++d;
  }
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(n_, 0);
  for (const auto& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<std::vector<Vertex>> Graph::neighbours() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    if (!e.is_loop()) adj[e.v].push_back(e.u);
  }
  return adj;
}

std::string Graph::to_edge_list() const {
  std::string out = std::to_string(n_) + " " + std::to_string(edges_.size()) + "\n";
  for (const auto& e : edges_) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph Graph::parse_edge_list(std::string_view text, GraphOptions options) {
  auto lines = word_lines(text);
  if (lines.empty()) throw ParseError("empty edge list", 0);
  const auto& head = lines[0];
  if (head.words.size() != 2) throw ParseError("header must be 'n m'", head.offset);
  std::size_t n = parse_count(head.words[0], head.offset, "vertex count");
  std::size_t m = parse_count(head.words[1], head.offset, "edge count");
  if (lines.size() - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow",
                     head.offset);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.words.size() != 2) throw ParseError("edge line " + std::to_string(l.number) + " must be 'u v'", l.offset);
    edges.emplace_back(parse_count(l.words[0], l.offset, "vertex"), parse_count(l.words[1], l.offset, "vertex"));
  }
  return Graph(n, std::move(edges), options);
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs) : n_(vertex_count), arcs_(std::move(arcs)) {
  for (const auto& a : arcs_)
    if (a.tail >= n_ || a.head >= n_)
      throw DomainError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") out of range");
}

std::size_t Digraph::in_degree(Vertex x) const {
  return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(), [x](const Arc& a) { return a.head == x; }));
}

std::size_t Digraph::out_degree(Vertex x) const {
  return static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(), [x](const Arc& a) { return a.tail == x; }));
}

Graph Digraph::underlying(GraphOptions options) const {
  std::vector<Edge> edges;
  for (const auto& a : arcs_) edges.emplace_back(a.tail, a.head);
  return Graph(n_, std::move(edges), options);
}

std::string Digraph::to_edge_list() const {
  std::string out = std::to_string(n_) + " " + std::to_string(arcs_.size()) + "\n";
  for (const auto& a : arcs_) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

Digraph Digraph::parse_edge_list(std::string_view text) {
  Graph g = Graph::parse_edge_list(text, {true, true});
  // Re-read to keep arc orientation (Graph normalises u <= v).
  auto lines = word_lines(text);
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i)
    arcs.push_back({parse_count(lines[i].words[0], lines[i].offset, "vertex"),
                    parse_count(lines[i].words[1], lines[i].offset, "vertex")});
  return Digraph(g.vertex_count(), std::move(arcs));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { normalize(); }

Polynomial Polynomial::monomial(std::size_t degree) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = 1;
  return Polynomial(std::move(c));
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<BigInt> c(std::max(c_.size(), other.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (std::size_t i = 0; i < other.c_.size(); ++i) c[i] -= other.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (c_.empty() || other.c_.empty()) return {};
  std::vector<BigInt> c(c_.size() + other.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const BigInt& coef = c_[k];
    if (coef == 0) continue;
    BigInt mag = coef < 0 ? BigInt(-coef) : coef;
    if (out.empty()) {
      if (coef < 0) out += "-";
    } else {
      out += coef < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

FamilySpec FamilySpec::parse(std::string_view text) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ':', ' ');
  auto words = detail::split_words(normalized);
  if (words.empty()) throw ParseError("empty graph family", 0);
  std::string_view name = words[0];
  auto arg = [&](std::size_t i) -> std::size_t {
    if (i >= words.size()) throw ParseError("family '" + std::string(name) + "' needs more size parameters", 0);
    return parse_count(words[i], 0, "size parameter");
  };
  auto expect_words = [&](std::size_t count) {
    if (words.size() != count) throw ParseError("wrong number of parameters for '" + std::string(name) + "'", 0);
  };
  FamilySpec spec;
  if (name == "complete" || name == "K") {
    expect_words(2);
    spec = {Family::Complete, arg(1), 0};
  } else if (name == "complete-bipartite") {
    expect_words(3);
    spec = {Family::CompleteBipartite, arg(1), arg(2)};
  } else if (name == "cycle") {
    expect_words(2);
    spec = {Family::Cycle, arg(1), 0};
  } else if (name == "path") {
    expect_words(2);
    spec = {Family::Path, arg(1), 0};
  } else if (name == "star") {
    expect_words(2);
    spec = {Family::Star, arg(1), 0};
  } else if (name == "wheel") {
    expect_words(2);
    spec = {Family::Wheel, arg(1), 0};
  } else if (name == "petersen") {
    expect_words(1);
    spec = {Family::Petersen, 0, 0};
  } else {
    throw ParseError("unknown graph family '" + std::string(name) + "'", 0);
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  switch (family) {
    case Family::Complete: return "complete:" + std::to_string(a);
    case Family::CompleteBipartite: return "complete-bipartite:" + std::to_string(a) + ":" + std::to_string(b);
    case Family::Cycle: return "cycle:" + std::to_string(a);
    case Family::Path: return "path:" + std::to_string(a);
    case Family::Star: return "star:" + std::to_string(a);
    case Family::Wheel: return "wheel:" + std::to_string(a);
    case Family::Petersen: return "petersen";
  }
  return "";
}

Graph generate(const FamilySpec& spec) {
  std::vector<Edge> edges;
  auto need = [&](std::size_t value, std::size_t minimum, const char* what) {
    if (value < minimum)
      throw DomainError(std::string(what) + " needs size >= " + std::to_string(minimum) + ", got " +
                        std::to_string(value));
  };
  switch (spec.family) {
    case Family::Complete: {
      need(spec.a, 1, "complete graph");
      for (Vertex i = 0; i < spec.a; ++i)
        for (Vertex j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
      return Graph(spec.a, std::move(edges));
    }
    case Family::CompleteBipartite: {
      need(spec.a, 1, "complete bipartite graph");
      need(spec.b, 1, "complete bipartite graph");
      for (Vertex i = 0; i < spec.a; ++i)
        for (Vertex j = 0; j < spec.b; ++j) edges.emplace_back(i, spec.a + j);
      return Graph(spec.a + spec.b, std::move(edges));
    }
    case Family::Cycle: {
      need(spec.a, 3, "cycle");
      for (Vertex i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
      return Graph(spec.a, std::move(edges));
    }
    case Family::Path: {
      need(spec.a, 1, "path");
      for (Vertex i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
      return Graph(spec.a, std::move(edges));
    }
    case Family::Star: {
      need(spec.a, 1, "star");
      for (Vertex i = 1; i <= spec.a; ++i) edges.emplace_back(0, i);
      return Graph(spec.a + 1, std::move(edges));
    }
    case Family::Wheel: {
      need(spec.a, 3, "wheel");
      for (Vertex i = 1; i <= spec.a; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % spec.a + 1);
      }
      return Graph(spec.a + 1, std::move(edges));
    }
    case Family::Petersen: {
      for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 2) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
      }
      return Graph(10, std::move(edges));
    }
  }
  throw DomainError("unknown family");
}

// ---------------------------------------------------------------------------
// Degrees and connectivity

DegreeReport degree_report(const Graph& g) {
  DegreeReport r;
  r.degrees = g.degrees();
  r.sequence = r.degrees;
  std::sort(r.sequence.rbegin(), r.sequence.rend());
  if (!r.degrees.empty()) {
    r.min_degree = *std::min_element(r.degrees.begin(), r.degrees.end());
    r.max_degree = *std::max_element(r.degrees.begin(), r.degrees.end());
  }
  return r;
}

namespace {

std::vector<std::size_t> component_labels(std::size_t n, const std::vector<Edge>& edges, std::size_t skip_edge,
                                          std::size_t skip_vertex, std::size_t* count) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip_edge) continue;
    const Edge& e = edges[i];
    if (e.touches(skip_vertex)) continue;
    parent[find(e.u)] = find(e.v);
  }
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == skip_vertex) continue;
    std::size_t root = find(v);
    if (label[root] == n) label[root] = next++;
    label[v] = label[root];
  }
  if (count) *count = next;
  return label;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::size_t count = 0;
  auto label = component_labels(g.vertex_count(), g.edges(), kNone, kNone, &count);
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
  return out;
}

ConnectivityReport connectivity(const Graph& g) {
  ConnectivityReport r;
  r.components = components(g);
  r.connected = r.components.size() == 1;
  const std::size_t base = r.components.size();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t count = 0;
    component_labels(g.vertex_count(), g.edges(), kNone, v, &count);
    if (count > base) r.cut_vertices.push_back(v);
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    std::size_t count = 0;
    component_labels(g.vertex_count(), g.edges(), i, kNone, &count);
    if (count > base) r.cut_edges.push_back(g.edges()[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Metrics

namespace {

std::vector<std::optional<std::size_t>> bfs(const std::vector<std::vector<Vertex>>& adj, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(adj.size());
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u])
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::optional<std::size_t> simple_girth(const Graph& g) {
  // Shortest cycle through BFS trees; exact when minimised over all roots.
  const std::size_t n = g.vertex_count();
  auto adj = g.neighbours();
  std::optional<std::size_t> best;
  for (Vertex root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, kNone), parent(n, kNone);
    std::queue<Vertex> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u]) {
        if (dist[w] == kNone) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace

MetricsReport metrics(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 63)
    throw SizeGuardError("metrics computes the circumference exactly and is limited to " +
                         std::to_string(std::min<std::size_t>(max_vertices, 63)) + " vertices (graph has " +
                         std::to_string(n) + ")");
  MetricsReport r;
  auto adj = g.neighbours();
  for (Vertex v = 0; v < n; ++v) r.distance.push_back(bfs(adj, v));

  bool all_finite = n > 0;
  std::size_t diameter = 0;
  for (const auto& row : r.distance)
    for (const auto& d : row) {
      if (!d) all_finite = false;
      else diameter = std::max(diameter, *d);
    }
  if (all_finite) r.diameter = diameter;

  if (g.has_loops()) {
    r.girth = 1;
  } else if (g.has_parallel_edges()) {
    r.girth = 2;
  } else {
    r.girth = simple_girth(g);
  }

  std::optional<std::size_t> longest;
  if (g.has_loops()) longest = 1;
  if (g.has_parallel_edges()) longest = 2;
  if (n >= 3) {
    auto masks = adjacency_masks(g);
    auto reach = path_table(masks);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::size_t size = popcount(mask);
      if (size < 3 || (longest && size <= *longest)) continue;
      std::size_t start = lowest_bit(mask);
      for (Vertex v = 0; v < n; ++v)
        if (reach[mask * n + v] && (masks[v] >> start & 1)) {
          longest = size;
          break;
        }
    }
  }
  r.circumference = longest;
  return r;
}

BipartiteReport is_bipartite(const Graph& g) {
  BipartiteReport r;
  const std::size_t n = g.vertex_count();
  for (const auto& e : g.edges())
    if (e.is_loop()) {
      r.odd_cycle = {e.u};
      return r;
    }
  auto adj = g.neighbours();
  std::vector<int> side(n, -1);
  std::vector<std::size_t> parent(n, kNone), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : adj[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (side[w] == side[u]) {
          // Both ends at equal parity: climb to the common ancestor.
          std::vector<Vertex> left{u}, right{w};
          Vertex a = u, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();  // common ancestor already in `left`
          r.odd_cycle = left;
          r.odd_cycle.insert(r.odd_cycle.end(), right.rbegin(), right.rend());
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? r.part_a : r.part_b).push_back(v);
  return r;
}

// ---------------------------------------------------------------------------
// Operations

Graph combine(CombineKind kind, const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count(), n2 = g2.vertex_count();
  GraphOptions opts{g1.options().allow_multi || g2.options().allow_multi,
                    g1.options().allow_loops || g2.options().allow_loops};
  std::vector<Edge> edges;
  switch (kind) {
    case CombineKind::Union: {
      std::set<Edge> merged(g1.edges().begin(), g1.edges().end());
      merged.insert(g2.edges().begin(), g2.edges().end());
      return Graph(std::max(n1, n2), {merged.begin(), merged.end()}, opts);
    }
    case CombineKind::Intersection: {
      if (n1 == 0 || n2 == 0) throw DomainError("intersection needs overlapping vertex sets");
      std::set<Edge> second(g2.edges().begin(), g2.edges().end());
      for (const auto& e : std::set<Edge>(g1.edges().begin(), g1.edges().end()))
        if (second.count(e) && e.v < std::min(n1, n2)) edges.push_back(e);
      return Graph(std::min(n1, n2), std::move(edges), opts);
    }
    case CombineKind::Sum:
    case CombineKind::Join: {
      edges = g1.edges();
      for (const auto& e : g2.edges()) edges.emplace_back(e.u + n1, e.v + n1);
      if (kind == CombineKind::Join)
        for (Vertex a = 0; a < n1; ++a)
          for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a, n1 + b);
      return Graph(n1 + n2, std::move(edges), opts);
    }
    case CombineKind::CartesianProduct: {
      // (u1,u2) ~ (v1,v2) iff u1 = v1 and u2 ~ v2, or u2 = v2 and u1 ~ v1.
      for (Vertex a = 0; a < n1; ++a)
        for (const auto& e : g2.edges()) edges.emplace_back(a * n2 + e.u, a * n2 + e.v);
      for (Vertex b = 0; b < n2; ++b)
        for (const auto& e : g1.edges()) edges.emplace_back(e.u * n2 + b, e.v * n2 + b);
      return Graph(n1 * n2, std::move(edges), opts);
    }
  }
  throw DomainError("unknown combine kind");
}

Graph complement(const Graph& g) {
  if (!g.is_simple()) throw DomainError("complement is defined for simple graphs");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b = a + 1; b < g.vertex_count(); ++b)
      if (!g.has_edge(a, b)) edges.emplace_back(a, b);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph line_graph(const Graph& g) {
  if (g.has_loops()) throw DomainError("line graph is defined for loopless graphs");
  const auto& es = g.edges();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].touches(es[j].u) || es[i].touches(es[j].v)) edges.emplace_back(i, j);
  return Graph(es.size(), std::move(edges));
}

Graph delete_vertices(const Graph& g, const std::vector<Vertex>& doomed) {
  std::vector<bool> gone(g.vertex_count(), false);
  for (Vertex v : doomed) {
    if (v >= g.vertex_count()) throw NotFoundError("vertex " + std::to_string(v) + " does not exist");
    gone[v] = true;
  }
  std::vector<std::size_t> index(g.vertex_count(), kNone);
  std::size_t next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) index[v] = next++;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) edges.emplace_back(index[e.u], index[e.v]);
  return Graph(next, std::move(edges), g.options());
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& doomed) {
  std::vector<Edge> edges = g.edges();
  for (const auto& d : doomed) {
    auto it = std::find(edges.begin(), edges.end(), d);
    if (it == edges.end()) throw NotFoundError("edge " + edge_name(d) + " does not exist");
    edges.erase(it);
  }
  return Graph(g.vertex_count(), std::move(edges), g.options());
}

Graph contract_edge(const Graph& g, Edge e) {
  std::vector<Edge> edges = g.edges();
  auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end()) throw NotFoundError("edge " + edge_name(e) + " does not exist");
  edges.erase(it);
  const Vertex keep = e.u, drop = e.v;
  auto relabel = [&](Vertex x) {
    if (x == drop) x = keep;
    return x > drop ? x - 1 : x;
  };
  std::vector<Edge> out;
  for (const auto& f : edges) out.emplace_back(relabel(f.u), relabel(f.v));
  if (e.is_loop()) return Graph(g.vertex_count(), std::move(edges), g.options());
  return Graph(g.vertex_count() - 1, std::move(out), {true, true});
}

// ---------------------------------------------------------------------------
// Euler tours

EulerReport eulerian(const Graph& g) {
  EulerReport r;
  auto deg = g.degrees();
  std::size_t start = kNone;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] % 2 != 0) return r;
    if (deg[v] > 0 && start == kNone) start = v;
  }
  if (start == kNone) return r;
  // Connected once isolated vertices are ignored.
  auto label = component_labels(g.vertex_count(), g.edges(), kNone, kNone, nullptr);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (deg[v] > 0 && label[v] != label[start]) return r;

  // Hierholzer over edge indices.
  std::vector<std::vector<std::size_t>> incident(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    incident[g.edges()[i].u].push_back(i);
    if (!g.edges()[i].is_loop()) incident[g.edges()[i].v].push_back(i);
  }
  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack{{start, kNone}};
  std::vector<std::pair<Vertex, std::size_t>> circuit;
  while (!stack.empty()) {
    Vertex v = stack.back().first;
    auto& cur = cursor[v];
    while (cur < incident[v].size() && used[incident[v][cur]]) ++cur;
    if (cur == incident[v].size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      std::size_t ei = incident[v][cur];
      used[ei] = true;
      stack.push_back({g.edges()[ei].other(v), ei});
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  r.eulerian = true;
  for (const auto& [v, ei] : circuit) {
    r.tour_vertices.push_back(v);
    if (ei != kNone) r.tour_edges.push_back(ei);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hamiltonicity

Graph closure(const Graph& g, std::optional<std::uint64_t> shuffle_seed) {
  if (!g.is_simple()) throw DomainError("closure is defined for simple graphs");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  auto deg = g.degrees();
  std::vector<Edge> pairs;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  bool changed = true;
  while (changed) {
    changed = false;
    if (shuffle_seed) std::shuffle(pairs.begin(), pairs.end(), rng);
    for (const auto& p : pairs) {
      if (adj[p.u][p.v] || deg[p.u] + deg[p.v] < n) continue;
      adj[p.u][p.v] = adj[p.v][p.u] = true;
      ++deg[p.u];
      ++deg[p.v];
      changed = true;
    }
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (adj[a][b]) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

HamiltonReport hamiltonian(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw DomainError("Hamiltonicity needs at least 3 vertices (graph has " + std::to_string(n) + ")");
  if (n > max_vertices || n > 30)
    throw SizeGuardError("Hamiltonicity check is limited to " + std::to_string(std::min<std::size_t>(max_vertices, 30)) +
                         " vertices (graph has " + std::to_string(n) + ")");
  HamiltonReport r;
  r.closure = closure(g);
  r.closure_complete = r.closure.edge_count() == n * (n - 1) / 2;

  auto masks = adjacency_masks(g);
  auto reach = path_table(masks);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (Vertex v = 1; v < n; ++v)
    if (reach[full * n + v] && (masks[v] & 1)) {
      r.hamiltonian = true;
      r.cycle = reconstruct_path(reach, masks, full, v);
      break;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Colouring

std::optional<std::vector<std::size_t>> k_coloring(const std::vector<std::vector<Vertex>>& adjacency,
                                                   std::size_t k) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> color(n, kNone);
  if (n == 0) return color;
  if (k == 0) return std::nullopt;

  // Most-constrained-first (saturation, then degree) backtracking.
  std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t placed, std::size_t used) -> bool {
    if (placed == n) return true;
    Vertex best = kNone;
    std::size_t best_sat = 0, best_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != kNone) continue;
      std::uint64_t seen = 0;
      for (Vertex w : adjacency[v])
        if (color[w] != kNone) seen |= std::uint64_t{1} << color[w];
      std::size_t sat = popcount(seen);
      if (best == kNone || sat > best_sat || (sat == best_sat && adjacency[v].size() > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = adjacency[v].size();
      }
    }
    std::uint64_t forbidden = 0;
    for (Vertex w : adjacency[best])
      if (color[w] != kNone) forbidden |= std::uint64_t{1} << color[w];
    const std::size_t limit = std::min(k, used + 1);  // new colours are interchangeable
    for (std::size_t c = 0; c < limit; ++c) {
      if (forbidden >> c & 1) continue;
      color[best] = c;
      if (place(placed + 1, std::max(used, c + 1))) return true;
    }
    color[best] = kNone;
    return false;
  };
  if (k > 63) k = 63;
  if (!place(0, 0)) return std::nullopt;
  return color;
}

VertexColoring vertex_coloring(const Graph& g, const ColoringLimits& limits) {
  if (g.has_loops()) throw DomainError("graphs with loops have no proper colouring");
  if (g.vertex_count() > limits.max_vertices)
    throw SizeGuardError("vertex colouring is limited to " + std::to_string(limits.max_vertices) +
                         " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
  auto adj = g.neighbours();
  for (std::size_t k = g.vertex_count() == 0 ? 0 : 1;; ++k)
    if (auto colors = k_coloring(adj, k)) return {k, *colors};
}

EdgeColoring edge_coloring(const Graph& g, const ColoringLimits& limits) {
  if (g.has_loops()) throw DomainError("edge colouring is defined for loopless graphs");
  if (g.edge_count() > limits.max_edges)
    throw SizeGuardError("edge colouring is limited to " + std::to_string(limits.max_edges) +
                         " edges (graph has " + std::to_string(g.edge_count()) + ")");
  Graph line = line_graph(g);
  auto adj = line.neighbours();
  std::size_t k = degree_report(g).max_degree;
  for (;; ++k)
    if (auto colors = k_coloring(adj, k)) return {k, *colors};
}

ColoringReport coloring(const Graph& g, const ColoringLimits& limits) {
  return {vertex_coloring(g, limits), edge_coloring(g, limits)};
}

// ---------------------------------------------------------------------------
// Chromatic polynomial

namespace {

struct MaskGraph {
  std::vector<std::uint64_t> adj;

  std::size_t size() const { return adj.size(); }
  bool edgeless() const {
    return std::all_of(adj.begin(), adj.end(), [](std::uint64_t m) { return m == 0; });
  }
  MaskGraph without_edge(Vertex a, Vertex b) const {
    MaskGraph out = *this;
    out.adj[a] &= ~(std::uint64_t{1} << b);
    out.adj[b] &= ~(std::uint64_t{1} << a);
    return out;
  }
  MaskGraph without_vertex(Vertex x) const {
    MaskGraph out;
    for (Vertex v = 0; v < adj.size(); ++v) {
      if (v == x) continue;
      std::uint64_t m = adj[v];
      std::uint64_t low = m & ((std::uint64_t{1} << x) - 1);
      std::uint64_t high = (m >> (x + 1)) << x;
      out.adj.push_back(low | high);
    }
    return out;
  }
  // Merge b into a (a < b) without keeping the a-b edge.
  MaskGraph contracted(Vertex a, Vertex b) const {
    MaskGraph out = *this;
    std::uint64_t merged = (adj[a] | adj[b]) & ~(std::uint64_t{1} << a) & ~(std::uint64_t{1} << b);
    out.adj[a] = merged;
    for (Vertex v = 0; v < adj.size(); ++v) {
      if (v == a || v == b) continue;
      if (adj[v] >> b & 1) out.adj[v] |= std::uint64_t{1} << a;
    }
    return out.without_vertex(b);
  }
};

class ChromaticSolver {
 public:
  Polynomial solve(const MaskGraph& g) {
    const std::size_t n = g.size();
    if (g.edgeless()) return Polynomial::monomial(n);
    auto it = memo_.find(g.adj);
    if (it != memo_.end()) return it->second;

    Polynomial result;
    std::size_t edges = 0;
    for (auto m : g.adj) edges += popcount(m);
    edges /= 2;
    Vertex leaf = kNone, isolated = kNone;
    for (Vertex v = 0; v < n; ++v) {
      if (g.adj[v] == 0 && isolated == kNone) isolated = v;
      if (popcount(g.adj[v]) == 1 && leaf == kNone) leaf = v;
    }
    if (edges == n * (n - 1) / 2) {
      // Complete graph: x (x-1) ... (x-n+1).
      result = Polynomial::monomial(0);
      for (std::size_t i = 0; i < n; ++i) result = result * Polynomial({BigInt(-static_cast<long long>(i)), 1});
    } else if (isolated != kNone) {
      result = Polynomial::monomial(1) * solve(g.without_vertex(isolated));
    } else if (leaf != kNone) {
      result = Polynomial({-1, 1}) * solve(g.without_vertex(leaf));
    } else {
      Vertex a = 0;
      while (g.adj[a] == 0) ++a;
      Vertex b = lowest_bit(g.adj[a]);
      Vertex lo = std::min(a, b), hi = std::max(a, b);
      result = solve(g.without_edge(lo, hi)) - solve(g.contracted(lo, hi));
    }
    memo_.emplace(g.adj, result);
    return result;
  }

 private:
  std::map<std::vector<std::uint64_t>, Polynomial> memo_;
};

}  // namespace

Polynomial chromatic_polynomial(const Graph& g, std::size_t max_vertices) {
  if (!g.is_simple()) throw DomainError("chromatic polynomial is computed for simple graphs");
  if (g.vertex_count() > max_vertices || g.vertex_count() > 63)
    throw SizeGuardError("chromatic polynomial is limited to " + std::to_string(max_vertices) +
                         " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
  ChromaticSolver solver;
  return solver.solve(MaskGraph{adjacency_masks(g)});
}

// ---------------------------------------------------------------------------
// Spanning trees

namespace {

// Weighted multigraph: w[i][j] parallel-edge count between i and j.
using Weights = std::vector<std::vector<unsigned>>;

class TreeCounter {
 public:
  BigInt count(const Weights& w) {
    const std::size_t n = w.size();
    if (n <= 1) return 1;
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    BigInt result = compute(w);
    memo_.emplace(w, result);
    return result;
  }

 private:
  static bool connected(const Weights& w) {
    const std::size_t n = w.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (w[u][v] && !seen[v]) {
          seen[v] = true;
          ++visited;
          stack.push_back(v);
        }
    }
    return visited == n;
  }

  static Weights remove_vertex(const Weights& w, std::size_t x) {
    Weights out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == x) continue;
      std::vector<unsigned> row;
      for (std::size_t j = 0; j < w.size(); ++j)
        if (j != x) row.push_back(w[i][j]);
      out.push_back(std::move(row));
    }
    return out;
  }

  BigInt compute(const Weights& w) {
    const std::size_t n = w.size();
    if (!connected(w)) return 0;
    // A vertex with a single neighbour class contributes its multiplicity.
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t neighbours = 0, other = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (w[v][u]) {
          ++neighbours;
          other = u;
        }
      if (neighbours == 1) return BigInt(w[v][other]) * count(remove_vertex(w, v));
    }
    // tau(G) = tau(G - e) + tau(G . e), applied to a whole parallel class.
    std::size_t a = n - 1, b = 0;
    while (w[a][b] == 0) ++b;
    Weights deleted = w;
    deleted[a][b] = deleted[b][a] = 0;
    Weights merged = w;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == a || u == b) continue;
      merged[b][u] += merged[a][u];
      merged[u][b] = merged[b][u];
    }
    merged[a][b] = merged[b][a] = 0;
    return count(deleted) + BigInt(w[a][b]) * count(remove_vertex(merged, a));
  }

  std::map<Weights, BigInt> memo_;
};

}  // namespace

BigInt spanning_tree_count(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices)
    throw SizeGuardError("spanning-tree count is limited to " + std::to_string(max_vertices) +
                         " vertices (graph has " + std::to_string(n) + ")");
  if (n == 0) return 0;
  Weights w(n, std::vector<unsigned>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    ++w[e.u][e.v];
    ++w[e.v][e.u];
  }
  TreeCounter counter;
  return counter.count(w);
}

// ---------------------------------------------------------------------------
// Tutte matrix

std::string TutteMatrix::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out += ", ";
      const auto& t = (*this)(r, c);
      if (t.sign == 0) {
        out += "0";
      } else {
        out += (t.sign < 0 ? "-x_" : "x_") + std::to_string(t.i + 1) + "_" + std::to_string(t.j + 1);
      }
    }
    out += '\n';
  }
  return out;
}

TutteMatrix tutte_matrix(const Graph& g) {
  if (!g.is_simple()) throw DomainError("the Tutte matrix is defined for simple graphs");
  TutteMatrix t;
  t.n = g.vertex_count();
  t.entries.resize(t.n * t.n);
  for (const auto& e : g.edges()) {
    t.entries[e.u * t.n + e.v] = {+1, e.u, e.v};
    t.entries[e.v * t.n + e.u] = {-1, e.u, e.v};
  }
  return t;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

bool has_perfect_matching(std::uint64_t remaining, const std::vector<std::uint64_t>& adj) {
  if (remaining == 0) return true;
  Vertex v = lowest_bit(remaining);
  std::uint64_t cand = adj[v] & remaining & ~(std::uint64_t{1} << v);
  while (cand) {
    Vertex w = lowest_bit(cand);
    cand &= cand - 1;
    if (has_perfect_matching(remaining & ~(std::uint64_t{1} << v) & ~(std::uint64_t{1} << w), adj)) return true;
  }
  return false;
}

}  // namespace

std::uint64_t determinant_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  const std::size_t n = m.size();
  std::uint64_t det = 1 % p;
  for (auto& row : m)
    for (auto& x : row) x %= p;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = (p - det) % p;
    }
    det = mul_mod(det, m[c][c], p);
    std::uint64_t inv = pow_mod(m[c][c], p - 2, p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      std::uint64_t factor = mul_mod(m[r][c], inv, p);
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - mul_mod(factor, m[c][k], p)) % p;
    }
  }
  return det;
}

TutteReport tutte(const Graph& g, const TutteOptions& options) {
  if (options.prime < 3) throw DomainError("Tutte test needs a prime field of size >= 3");
  TutteReport r;
  r.matrix = tutte_matrix(g);
  const std::size_t n = g.vertex_count();
  if (n <= options.brute_force_limit && n <= 63)
    r.brute_force = n % 2 == 0 && has_perfect_matching(n == 0 ? 0 : (std::uint64_t{1} << n) - 1, adjacency_masks(g));
  if (n % 2 == 1) return r;
  if (n == 0) {
    r.has_one_factor = true;
    return r;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> draw(0, options.prime - 1);
  const std::uint64_t p = options.prime;
  for (unsigned trial = 0; trial < options.repetitions; ++trial) {
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : g.edges()) {
      std::uint64_t x = draw(rng);
      m[e.u][e.v] = x;
      m[e.v][e.u] = (p - x) % p;
    }
    ++r.trials;
    if (determinant_mod(std::move(m), p) != 0) {
      ++r.nonzero_trials;
      r.has_one_factor = true;
      break;
    }
  }
  return r;
}

}  // namespace neutro::graph
