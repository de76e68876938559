#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/core.hpp"
#include "neutro/graph.hpp"

namespace neutro::ngraph {

using graph::Vertex;

enum class Tag { Real, Indeterminate };

/// Edge of a neutrosophic graph. Undirected edges are stored with u <= v;
/// directed edges keep tail u and head v.
struct NEdge {
  Vertex u = 0;
  Vertex v = 0;
  Tag tag = Tag::Real;

  bool indeterminate() const noexcept { return tag == Tag::Indeterminate; }
  bool is_loop() const noexcept { return u == v; }
  friend auto operator<=>(const NEdge&, const NEdge&) = default;
};

/// Vertices 0..real_count-1 are real; the remaining indet_count vertices are
/// indeterminate and named N1..Nk. Edge order is preserved as given.
class NeutroGraph {
 public:
  NeutroGraph() = default;
  NeutroGraph(std::size_t real_count, std::size_t indet_count, std::vector<NEdge> edges, bool directed = false,
              graph::GraphOptions options = {});

  std::size_t real_count() const noexcept { return real_; }
  std::size_t indet_count() const noexcept { return indet_; }
  std::size_t order() const noexcept { return real_ + indet_; }
  bool directed() const noexcept { return directed_; }
  const graph::GraphOptions& options() const noexcept { return options_; }
  const std::vector<NEdge>& edges() const noexcept { return edges_; }

  bool is_indeterminate(Vertex x) const noexcept { return x >= real_; }
  bool has_indeterminate_edge() const;
  std::size_t indeterminate_edge_count() const;
  bool is_simple() const;

  /// "v1".."vn" for real vertices, "N1".."Nk" for indeterminate ones.
  std::string vertex_name(Vertex x) const;
  /// Accepts a vertex name or a 0-based index.
  Vertex vertex_by_name(std::string_view name) const;

  /// Undirected multigraph on all vertices and all edges, tags forgotten.
  graph::Graph underlying() const;

  /// Header "n_real n_indet m directed", then one "u v R|I" line per edge.
  std::string to_edge_list() const;
  static NeutroGraph parse_edge_list(std::string_view text);

  /// Equal vertex partition, direction and edge multiset.
  friend bool operator==(const NeutroGraph& a, const NeutroGraph& b);

 private:
  std::size_t real_ = 0;
  std::size_t indet_ = 0;
  std::vector<NEdge> edges_;
  bool directed_ = false;
  graph::GraphOptions options_;
};

enum class Classification { Plain, VertexNeutrosophic, EdgeNeutrosophic, Strong };

const char* classification_name(Classification c) noexcept;
Classification classify(const NeutroGraph& g);

/// Induced subgraph on `keep` (vertex kinds preserved, reals renumbered first).
NeutroGraph induced(const NeutroGraph& g, const std::vector<Vertex>& keep);

/// {0, 1, I} adjacency matrix; parallel edges are not representable.
NeutroMatrix adjacency(const NeutroGraph& g);
/// The last `indet_count` rows/columns become indeterminate vertices.
NeutroGraph from_adjacency(const NeutroMatrix& m, std::size_t indet_count = 0, bool directed = false);

NeutroGraph strip_indeterminates(const NeutroGraph& g);

struct NeutroDegreeReport {
  std::vector<std::size_t> degrees;        // all vertices
  std::vector<std::size_t> indet_degrees;  // indeterminate vertices in order
  std::optional<std::size_t> min_degree;   // over indeterminate vertices
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> k_neutro_regular;
  bool strongly_regular = false;
  std::vector<Vertex> isolated;  // indeterminate vertices of degree 0
  std::vector<Vertex> pendent;   // indeterminate vertices of degree 1
};

NeutroDegreeReport neutro_degree_report(const NeutroGraph& g);

enum class WalkKind { Walk, Trail, Path, Cycle, Invalid };

const char* walk_kind_name(WalkKind k) noexcept;

struct WalkReport {
  WalkKind kind = WalkKind::Invalid;
  bool neutrosophic = false;
  bool closed = false;
  std::string reason;  // set when invalid
};

/// `vertices` lists the points visited. `edges`, when non-empty, gives the
/// edge index used for each step; otherwise each step must have exactly one
/// joining edge.
WalkReport classify_walk(const NeutroGraph& g, const std::vector<Vertex>& vertices,
                         const std::vector<std::size_t>& edges = {});

struct NeutroComponents {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> neutrosophic;  // indices into components
  bool connected = false;
  bool neutro_disconnected = false;
};

NeutroComponents neutro_components(const NeutroGraph& g);

struct NeutroTreeReport {
  bool is_neutro_tree = false;
  /// Present when the graph is connected and has indeterminate vertices.
  std::optional<std::vector<std::size_t>> eccentricity;  // per indeterminate vertex
  std::optional<std::size_t> radius;
  std::optional<std::size_t> diameter;
  std::vector<Vertex> center;
};

NeutroTreeReport neutro_tree(const NeutroGraph& g);

struct NeutroEulerReport {
  bool eulerian = false;
  bool neutro_eulerian = false;
  bool strong_neutro_eulerian = false;
};

NeutroEulerReport neutro_eulerian(const NeutroGraph& g);

struct NeutroColoring {
  std::size_t vertex_colors = 0;
  std::vector<std::size_t> vertex_assignment;
  std::size_t edge_colors = 0;
  std::vector<std::size_t> edge_assignment;  // parallel to g.edges()
};

/// Only real vertices joined by real edges constrain the vertex colouring;
/// only adjacent real edges constrain the edge colouring.
NeutroColoring neutro_coloring(const NeutroGraph& g, const graph::ColoringLimits& limits = {});

enum class PetersenKind { Vertex, Edge, Strong };

/// Canonical Petersen numbering c = 0..9 (inner pentagram 0..4, outer cycle
/// 5..9); edge order is pentagram {i, i+2}, spokes {i, i+5}, outer {5+i, 5+(i+1)%5}.
/// Canonical vertices 0..k-1 become N1..Nk, the rest v1..v(10-k) in order.
/// The first `edge_k` canonical edges are indeterminate.
NeutroGraph neutro_petersen(PetersenKind kind, std::size_t vertex_k, std::size_t edge_k);

struct IsomorphismReport {
  bool isomorphic = false;
  std::vector<Vertex> map;  // map[v of g1] = vertex of g2
};

IsomorphismReport neutro_isomorphic(const NeutroGraph& g1, const NeutroGraph& g2, std::size_t max_order = 10);

/// Directed graph without a pair of opposite indeterminate arcs.
bool is_neutro_oriented(const NeutroGraph& g);

}  // namespace neutro::ngraph
