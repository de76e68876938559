#include "neutro/neutro_graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>

#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro::ngraph {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

NEdge normalized(NEdge e, bool directed) {
  if (!directed && e.u > e.v) std::swap(e.u, e.v);
  return e;
}

char tag_char(Tag t) { return t == Tag::Real ? 'R' : 'I'; }

std::size_t parse_index(std::string_view word, std::size_t offset) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(word) + "'", offset);
  return value;
}

std::vector<std::vector<Vertex>> undirected_neighbours(const NeutroGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    if (!e.is_loop()) adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex source) {
  std::vector<std::size_t> dist(adj.size(), kNone);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj[u])
      if (dist[w] == kNone) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

// ---------------------------------------------------------------------------
// NeutroGraph

NeutroGraph::NeutroGraph(std::size_t real_count, std::size_t indet_count, std::vector<NEdge> edges, bool directed,
                         graph::GraphOptions options)
    : real_(real_count), indet_(indet_count), directed_(directed), options_(options) {
  const std::size_t n = order();
  for (auto e : edges) {
    if (e.u >= n || e.v >= n)
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") references a vertex outside 0.." +
                        (n ? std::to_string(n - 1) : std::string("(empty)")));
    if (e.is_loop() && !options_.allow_loops)
      throw DomainError("loop at " + vertex_name(e.u) + " in a graph without loops");
    edges_.push_back(normalized(e, directed_));
  }
  if (!options_.allow_multi) {
    std::vector<std::pair<Vertex, Vertex>> ends;
    for (const auto& e : edges_) ends.emplace_back(e.u, e.v);
    std::sort(ends.begin(), ends.end());
    auto dup = std::adjacent_find(ends.begin(), ends.end());
    if (dup != ends.end())
      throw DomainError("repeated edge " + vertex_name(dup->first) + "-" + vertex_name(dup->second) +
                        " in a graph without multi-edges");
  }
}

bool NeutroGraph::has_indeterminate_edge() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const NEdge& e) { return e.indeterminate(); });
}

std::size_t NeutroGraph::indeterminate_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const NEdge& e) { return e.indeterminate(); }));
}

bool NeutroGraph::is_simple() const {
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    ends.emplace_back(e.u, e.v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

std::string NeutroGraph::vertex_name(Vertex x) const {
  return x < real_ ? "v" + std::to_string(x + 1) : "N" + std::to_string(x - real_ + 1);
}

Vertex NeutroGraph::vertex_by_name(std::string_view name) const {
  auto fail = [&]() -> Vertex { throw NotFoundError("no vertex named '" + std::string(name) + "'"); };
  if (name.empty()) return fail();
  std::size_t offset = 0;
  bool indet = false;
  bool by_index = true;
  if (name[0] == 'v' || name[0] == 'N') {
    indet = name[0] == 'N';
    offset = 1;
    by_index = false;
  }
  std::size_t value = 0;
  auto digits = name.substr(offset);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return fail();
  if (by_index) return value < order() ? value : fail();
  if (value == 0) return fail();
  if (indet) return value <= indet_ ? real_ + value - 1 : fail();
  return value <= real_ ? value - 1 : fail();
}

graph::Graph NeutroGraph::underlying() const {
  std::vector<graph::Edge> edges;
  for (const auto& e : edges_) edges.emplace_back(e.u, e.v);
  return graph::Graph(order(), std::move(edges), {true, true});
}

std::string NeutroGraph::to_edge_list() const {
  std::string out = std::to_string(real_) + " " + std::to_string(indet_) + " " + std::to_string(edges_.size()) + " " +
                    (directed_ ? "1" : "0") + "\n";
  for (const auto& e : edges_) out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + tag_char(e.tag) + "\n";
  return out;
}

NeutroGraph NeutroGraph::parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::vector<std::string_view>, std::size_t>> lines;
  for (const auto& line : detail::split_lines(text)) {
    std::string_view body = line.text;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto words = detail::split_words(body);
    if (!words.empty()) lines.emplace_back(std::move(words), line.offset);
  }
  if (lines.empty()) throw ParseError("empty neutrosophic edge list", 0);
  const auto& [head, head_offset] = lines[0];
  if (head.size() != 4) throw ParseError("header must be 'n_real n_indet m directed'", head_offset);
  std::size_t real = parse_index(head[0], head_offset);
  std::size_t indet = parse_index(head[1], head_offset);
  std::size_t m = parse_index(head[2], head_offset);
  bool directed;
  if (head[3] == "1" || head[3] == "directed") directed = true;
  else if (head[3] == "0" || head[3] == "undirected") directed = false;
  else throw ParseError("directed flag must be 0 or 1", head_offset);
  if (lines.size() - 1 != m)
    throw ParseError("header announces " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow",
                     head_offset);
  std::vector<NEdge> edges;
  bool loops = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [words, offset] = lines[i];
    if (words.size() != 3) throw ParseError("edge line must be 'u v R|I'", offset);
    NEdge e{parse_index(words[0], offset), parse_index(words[1], offset), Tag::Real};
    if (words[2] == "I") e.tag = Tag::Indeterminate;
    else if (words[2] != "R") throw ParseError("edge tag must be R or I, got '" + std::string(words[2]) + "'", offset);
    loops = loops || e.is_loop();
    edges.push_back(e);
  }
  // Multi-edges and loops are accepted from files; the options record them.
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (const auto& e : edges) {
    NEdge n = normalized(e, directed);
    ends.emplace_back(n.u, n.v);
  }
  std::sort(ends.begin(), ends.end());
  const bool multi = std::adjacent_find(ends.begin(), ends.end()) != ends.end();
  return NeutroGraph(real, indet, std::move(edges), directed, {multi, loops});
}

bool operator==(const NeutroGraph& a, const NeutroGraph& b) {
  if (a.real_ != b.real_ || a.indet_ != b.indet_ || a.directed_ != b.directed_) return false;
  auto ea = a.edges_, eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

// ---------------------------------------------------------------------------
// Classification and subgraphs

const char* classification_name(Classification c) noexcept {
  switch (c) {
    case Classification::Plain: return "plain";
    case Classification::VertexNeutrosophic: return "vertex-neutrosophic";
    case Classification::EdgeNeutrosophic: return "edge-neutrosophic";
    case Classification::Strong: return "strong";
  }
  return "unknown";
}

Classification classify(const NeutroGraph& g) {
  const bool iv = g.indet_count() > 0;
  const bool ie = g.has_indeterminate_edge();
  if (iv && ie) return Classification::Strong;
  if (iv) return Classification::VertexNeutrosophic;
  if (ie) return Classification::EdgeNeutrosophic;
  return Classification::Plain;
}

NeutroGraph induced(const NeutroGraph& g, const std::vector<Vertex>& keep) {
  std::vector<Vertex> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> index(g.order(), kNone);
  std::size_t real = 0, indet = 0;
  for (Vertex v : sorted) {
    if (v >= g.order()) throw NotFoundError("vertex " + std::to_string(v) + " does not exist");
    if (!g.is_indeterminate(v)) index[v] = real++;
  }
  for (Vertex v : sorted)
    if (g.is_indeterminate(v)) index[v] = real + indet++;
  std::vector<NEdge> edges;
  for (const auto& e : g.edges())
    if (index[e.u] != kNone && index[e.v] != kNone) edges.push_back({index[e.u], index[e.v], e.tag});
  return NeutroGraph(real, indet, std::move(edges), g.directed(), g.options());
}

NeutroMatrix adjacency(const NeutroGraph& g) {
  if (g.order() == 0) throw ShapeError("adjacency matrix of an empty graph");
  NeutroMatrix m(g.order(), g.order());
  for (const auto& e : g.edges()) {
    NeutroNumber value = e.indeterminate() ? NeutroNumber::indeterminate() : NeutroNumber(1);
    if (!m(e.u, e.v).is_zero())
      throw DomainError("parallel edges " + g.vertex_name(e.u) + "-" + g.vertex_name(e.v) +
                        " have no {0, 1, I} adjacency entry");
    m(e.u, e.v) = value;
    if (!g.directed()) m(e.v, e.u) = value;
  }
  return m;
}

NeutroGraph from_adjacency(const NeutroMatrix& m, std::size_t indet_count, bool directed) {
  if (!m.is_square()) throw ShapeError("adjacency matrix must be square, got " + m.shape());
  const std::size_t n = m.rows();
  if (indet_count > n) throw DomainError("more indeterminate vertices than rows");
  const NeutroNumber one(1), indet = NeutroNumber::indeterminate();
  std::vector<NEdge> edges;
  bool loops = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) continue;
      if (x != one && x != indet)
        throw DomainError("adjacency entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " +
                          x.to_string() + ", expected 0, 1 or I");
      if (!directed && m(j, i) != x)
        throw DomainError("undirected adjacency matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + ")");
      if (!directed && j < i) continue;
      loops = loops || i == j;
      edges.push_back({i, j, x == indet ? Tag::Indeterminate : Tag::Real});
    }
  return NeutroGraph(n - indet_count, indet_count, std::move(edges), directed, {false, loops});
}

NeutroGraph strip_indeterminates(const NeutroGraph& g) {
  std::vector<Vertex> reals(g.real_count());
  for (Vertex v = 0; v < g.real_count(); ++v) reals[v] = v;
  return induced(g, reals);
}

// ---------------------------------------------------------------------------
// Degrees

NeutroDegreeReport neutro_degree_report(const NeutroGraph& g) {
  NeutroDegreeReport r;
  r.degrees.assign(g.order(), 0);
  for (const auto& e : g.edges()) {
    ++r.degrees[e.u];
    ++r.degrees[e.v];
  }
  for (Vertex v = g.real_count(); v < g.order(); ++v) {
    std::size_t d = r.degrees[v];
    r.indet_degrees.push_back(d);
    if (d == 0) r.isolated.push_back(v);
    if (d == 1) r.pendent.push_back(v);
  }
  if (!r.indet_degrees.empty()) {
    r.min_degree = *std::min_element(r.indet_degrees.begin(), r.indet_degrees.end());
    r.max_degree = *std::max_element(r.indet_degrees.begin(), r.indet_degrees.end());
    if (*r.min_degree == *r.max_degree) {
      r.k_neutro_regular = r.min_degree;
      r.strongly_regular =
          std::all_of(r.degrees.begin(), r.degrees.end(), [&](std::size_t d) { return d == *r.min_degree; });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Walks

const char* walk_kind_name(WalkKind k) noexcept {
  switch (k) {
    case WalkKind::Walk: return "walk";
    case WalkKind::Trail: return "trail";
    case WalkKind::Path: return "path";
    case WalkKind::Cycle: return "cycle";
    case WalkKind::Invalid: return "invalid";
  }
  return "unknown";
}

WalkReport classify_walk(const NeutroGraph& g, const std::vector<Vertex>& vertices,
                         const std::vector<std::size_t>& edges) {
  WalkReport r;
  auto invalid = [&](std::string why) {
    r.kind = WalkKind::Invalid;
    r.reason = std::move(why);
    return r;
  };
  if (vertices.empty()) return invalid("empty sequence");
  for (Vertex v : vertices)
    if (v >= g.order()) return invalid("vertex " + std::to_string(v) + " does not exist");
  const std::size_t steps = vertices.size() - 1;
  if (!edges.empty() && edges.size() != steps) return invalid("edge count does not match the vertex sequence");

  auto joins = [&](const NEdge& e, Vertex a, Vertex b) {
    if (g.directed()) return e.u == a && e.v == b;
    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
  };
  std::vector<std::size_t> used;
  for (std::size_t s = 0; s < steps; ++s) {
    Vertex a = vertices[s], b = vertices[s + 1];
    std::size_t chosen = kNone;
    if (!edges.empty()) {
      if (edges[s] >= g.edges().size() || !joins(g.edges()[edges[s]], a, b))
        return invalid("edge " + std::to_string(edges[s]) + " does not join " + g.vertex_name(a) + " and " +
                       g.vertex_name(b));
      chosen = edges[s];
    } else {
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!joins(g.edges()[i], a, b)) continue;
        if (chosen != kNone) return invalid("several edges join " + g.vertex_name(a) + " and " + g.vertex_name(b));
        chosen = i;
      }
      if (chosen == kNone) return invalid(g.vertex_name(a) + " and " + g.vertex_name(b) + " are not adjacent");
    }
    used.push_back(chosen);
  }

  r.closed = steps > 0 && vertices.front() == vertices.back();
  auto sorted_edges = used;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  const bool distinct_edges = std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) == sorted_edges.end();
  std::vector<Vertex> points(vertices.begin(), r.closed ? vertices.end() - 1 : vertices.end());
  std::sort(points.begin(), points.end());
  const bool distinct_points = std::adjacent_find(points.begin(), points.end()) == points.end();

  if (r.closed && distinct_points && distinct_edges && steps >= 3) r.kind = WalkKind::Cycle;
  else if (!r.closed && distinct_points) r.kind = WalkKind::Path;
  else if (distinct_edges) r.kind = WalkKind::Trail;
  else r.kind = WalkKind::Walk;

  const bool iv = std::any_of(vertices.begin(), vertices.end(), [&](Vertex v) { return g.is_indeterminate(v); });
  const bool ie = std::any_of(used.begin(), used.end(), [&](std::size_t i) { return g.edges()[i].indeterminate(); });
  switch (classify(g)) {
    case Classification::Plain: r.neutrosophic = false; break;
    case Classification::VertexNeutrosophic: r.neutrosophic = iv; break;
    case Classification::EdgeNeutrosophic: r.neutrosophic = ie; break;
    case Classification::Strong: r.neutrosophic = iv && ie; break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Components, trees, tours

NeutroComponents neutro_components(const NeutroGraph& g) {
  NeutroComponents r;
  r.components = graph::components(g.underlying());
  r.connected = r.components.size() == 1;
  for (std::size_t i = 0; i < r.components.size(); ++i)
    if (classify(induced(g, r.components[i])) != Classification::Plain) r.neutrosophic.push_back(i);
  r.neutro_disconnected = r.neutrosophic.size() >= 2;
  return r;
}

NeutroTreeReport neutro_tree(const NeutroGraph& g) {
  NeutroTreeReport r;
  const std::size_t n = g.order();
  auto comps = graph::components(g.underlying());
  const bool connected = comps.size() == 1;
  const bool acyclic = g.is_simple() && g.edges().size() + comps.size() == n;
  r.is_neutro_tree = connected && acyclic && classify(g) != Classification::Plain;
  if (!connected || g.indet_count() == 0) return r;

  auto adj = undirected_neighbours(g);
  std::vector<std::size_t> ecc;
  for (Vertex a = g.real_count(); a < n; ++a) {
    auto dist = bfs_distances(adj, a);
    std::size_t e = 0;
    for (Vertex b = g.real_count(); b < n; ++b) e = std::max(e, dist[b]);
    ecc.push_back(e);
  }
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  r.diameter = *std::max_element(ecc.begin(), ecc.end());
  for (std::size_t i = 0; i < ecc.size(); ++i)
    if (ecc[i] == *r.radius) r.center.push_back(g.real_count() + i);
  r.eccentricity = std::move(ecc);
  return r;
}

NeutroEulerReport neutro_eulerian(const NeutroGraph& g) {
  NeutroEulerReport r;
  r.eulerian = graph::eulerian(g.underlying()).eulerian;
  const bool iv = g.indet_count() > 0, ie = g.has_indeterminate_edge();
  r.neutro_eulerian = r.eulerian && (iv || ie);
  r.strong_neutro_eulerian = r.eulerian && iv && ie;
  return r;
}

// ---------------------------------------------------------------------------
// Colouring

NeutroColoring neutro_coloring(const NeutroGraph& g, const graph::ColoringLimits& limits) {
  for (const auto& e : g.edges())
    if (e.is_loop()) throw DomainError("graphs with loops have no proper colouring");
  if (g.real_count() > limits.max_vertices)
    throw SizeGuardError("vertex colouring is limited to " + std::to_string(limits.max_vertices) +
                         " real vertices (graph has " + std::to_string(g.real_count()) + ")");
  NeutroColoring r;

  std::vector<std::vector<Vertex>> real_adj(g.real_count());
  for (const auto& e : g.edges())
    if (!e.indeterminate() && !g.is_indeterminate(e.u) && !g.is_indeterminate(e.v)) {
      real_adj[e.u].push_back(e.v);
      real_adj[e.v].push_back(e.u);
    }
  r.vertex_assignment.assign(g.order(), 0);
  if (g.order() > 0) {
    for (std::size_t k = 1;; ++k)
      if (auto colors = graph::k_coloring(real_adj, k)) {
        std::copy(colors->begin(), colors->end(), r.vertex_assignment.begin());
        r.vertex_colors = k;
        break;
      }
  }

  std::vector<std::size_t> real_edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (!g.edges()[i].indeterminate()) real_edges.push_back(i);
  if (real_edges.size() > limits.max_edges)
    throw SizeGuardError("edge colouring is limited to " + std::to_string(limits.max_edges) +
                         " real edges (graph has " + std::to_string(real_edges.size()) + ")");
  std::vector<std::vector<Vertex>> line(real_edges.size());
  for (std::size_t a = 0; a < real_edges.size(); ++a)
    for (std::size_t b = a + 1; b < real_edges.size(); ++b) {
      const auto& x = g.edges()[real_edges[a]];
      const auto& y = g.edges()[real_edges[b]];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) {
        line[a].push_back(b);
        line[b].push_back(a);
      }
    }
  r.edge_assignment.assign(g.edges().size(), 0);
  if (!g.edges().empty()) {
    for (std::size_t k = 1;; ++k)
      if (auto colors = graph::k_coloring(line, k)) {
        for (std::size_t i = 0; i < real_edges.size(); ++i) r.edge_assignment[real_edges[i]] = (*colors)[i];
        r.edge_colors = k;
        break;
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Petersen variants

NeutroGraph neutro_petersen(PetersenKind kind, std::size_t vertex_k, std::size_t edge_k) {
  const bool want_vertices = kind != PetersenKind::Edge;
  const bool want_edges = kind != PetersenKind::Vertex;
  if (!want_vertices) vertex_k = 0;
  if (!want_edges) edge_k = 0;
  if (want_vertices && (vertex_k < 1 || vertex_k > 10))
    throw DomainError("indeterminate vertex count must be in 1..10, got " + std::to_string(vertex_k));
  if (want_edges && (edge_k < 1 || edge_k > 15))
    throw DomainError("indeterminate edge count must be in 1..15, got " + std::to_string(edge_k));

  const std::size_t real = 10 - vertex_k;
  auto relabel = [&](Vertex c) { return c < vertex_k ? real + c : c - vertex_k; };
  std::vector<std::pair<Vertex, Vertex>> canonical;
  for (Vertex i = 0; i < 5; ++i) canonical.emplace_back(i, (i + 2) % 5);
  for (Vertex i = 0; i < 5; ++i) canonical.emplace_back(i, i + 5);
  for (Vertex i = 0; i < 5; ++i) canonical.emplace_back(5 + i, 5 + (i + 1) % 5);
  std::vector<NEdge> edges;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    edges.push_back({relabel(canonical[i].first), relabel(canonical[i].second),
                     i < edge_k ? Tag::Indeterminate : Tag::Real});
  return NeutroGraph(real, vertex_k, std::move(edges));
}

// ---------------------------------------------------------------------------
// Isomorphism

IsomorphismReport neutro_isomorphic(const NeutroGraph& g1, const NeutroGraph& g2, std::size_t max_order) {
  if (g1.order() > max_order || g2.order() > max_order)
    throw SizeGuardError("isomorphism search is limited to order " + std::to_string(max_order));
  IsomorphismReport r;
  if (g1.real_count() != g2.real_count() || g1.indet_count() != g2.indet_count() ||
      g1.directed() != g2.directed() || g1.edges().size() != g2.edges().size() ||
      g1.indeterminate_edge_count() != g2.indeterminate_edge_count())
    return r;
  const std::size_t n = g1.order();
  // count[tag][a][b]: number of edges a->b (both orientations when undirected)
  auto counts = [n](const NeutroGraph& g) {
    std::vector<std::vector<std::vector<unsigned>>> c(2, std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(n, 0)));
    for (const auto& e : g.edges()) {
      auto& m = c[e.indeterminate() ? 1 : 0];
      ++m[e.u][e.v];
      if (!g.directed() && !e.is_loop()) ++m[e.v][e.u];
    }
    return c;
  };
  const auto c1 = counts(g1), c2 = counts(g2);
  auto d1 = neutro_degree_report(g1).degrees, d2 = neutro_degree_report(g2).degrees;

  std::vector<Vertex> map(n, kNone);
  std::vector<bool> taken(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (v == n) return true;
    const bool indet = g1.is_indeterminate(v);
    for (Vertex w = 0; w < n; ++w) {
      if (taken[w] || g2.is_indeterminate(w) != indet || d1[v] != d2[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u <= v && ok; ++u) {
        Vertex mu = u == v ? w : map[u];
        for (int t = 0; t < 2 && ok; ++t)
          ok = c1[t][v][u] == c2[t][w][mu] && c1[t][u][v] == c2[t][mu][w];
      }
      if (!ok) continue;
      map[v] = w;
      taken[w] = true;
      if (extend(v + 1)) return true;
      taken[w] = false;
      map[v] = kNone;
    }
    return false;
  };
  if (extend(0)) {
    r.isomorphic = true;
    r.map = std::move(map);
  }
  return r;
}

bool is_neutro_oriented(const NeutroGraph& g) {
  if (!g.directed()) return false;
  for (const auto& a : g.edges()) {
    if (!a.indeterminate()) continue;
    for (const auto& b : g.edges())
      if (b.indeterminate() && b.u == a.v && b.v == a.u && !a.is_loop()) return false;
  }
  return true;
}

}  // namespace neutro::ngraph
