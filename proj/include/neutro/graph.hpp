#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/rational.hpp"

namespace neutro::graph {

using Vertex = std::size_t;

/// Unordered vertex pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool is_loop() const noexcept { return u == v; }
  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct GraphOptions {
  bool allow_multi = false;
  bool allow_loops = false;
};

/// Undirected graph on vertices 0..n-1. Edges are kept sorted, so two graphs
/// with the same edge multiset compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {}, GraphOptions options = {});

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const GraphOptions& options() const noexcept { return options_; }

  bool is_simple() const;
  bool has_loops() const;
  bool has_parallel_edges() const;
  bool has_edge(Vertex a, Vertex b) const;
  std::size_t multiplicity(Vertex a, Vertex b) const;

  /// Loops count twice.
  std::size_t degree(Vertex x) const;
  std::vector<std::size_t> degrees() const;

  /// Neighbour lists (with multiplicity; a loop lists the vertex once).
  std::vector<std::vector<Vertex>> neighbours() const;

  /// Edge-list text: "n m" then one "u v" line per edge.
  std::string to_edge_list() const;
  static Graph parse_edge_list(std::string_view text, GraphOptions options = {});

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  GraphOptions options_;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t in_degree(Vertex x) const;
  std::size_t out_degree(Vertex x) const;

  /// Forgets direction; keeps one edge per arc.
  Graph underlying(GraphOptions options = {true, true}) const;

  std::string to_edge_list() const;
  static Digraph parse_edge_list(std::string_view text);

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// Integer polynomial, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial monomial(std::size_t degree);

  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  /// Degree of the zero polynomial is reported as 0.
  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  BigInt coefficient(std::size_t power) const { return power < c_.size() ? c_[power] : BigInt(0); }
  BigInt evaluate(const BigInt& x) const;
  bool is_zero() const noexcept { return c_.empty(); }

  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;

  /// Human form in x, e.g. "x^3 - 3x^2 + 2x".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

// ---------------------------------------------------------------------------
// Generators

enum class Family { Complete, CompleteBipartite, Cycle, Path, Star, Wheel, Petersen };

struct FamilySpec {
  Family family = Family::Complete;
  std::size_t a = 0;
  std::size_t b = 0;

  /// "complete:4", "complete-bipartite:3:4", "cycle:5", "path:4", "star:8",
  /// "wheel:5", "petersen". Spaces may replace the colons.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

/// Canonical instances. The wheel W_n is K_1 joined with C_n (hub is vertex 0).
/// Petersen: inner pentagram on 0..4 (i ~ i+2 mod 5), spokes i ~ i+5, outer
/// 5-cycle on 5..9.
Graph generate(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Invariants

struct DegreeReport {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> sequence;  // non-increasing
};

DegreeReport degree_report(const Graph& g);

std::vector<std::vector<Vertex>> components(const Graph& g);

struct ConnectivityReport {
  std::vector<std::vector<Vertex>> components;
  bool connected = false;
  std::vector<Vertex> cut_vertices;
  std::vector<Edge> cut_edges;
};

ConnectivityReport connectivity(const Graph& g);

struct MetricsReport {
  /// distance[u][v]; absent across components.
  std::vector<std::vector<std::optional<std::size_t>>> distance;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> circumference;
  std::optional<std::size_t> diameter;
};

/// Circumference is computed exactly; graphs above `max_vertices` are refused.
MetricsReport metrics(const Graph& g, std::size_t max_vertices = 16);

struct BipartiteReport {
  bool bipartite = false;
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
  std::vector<Vertex> odd_cycle;  // closed walk listed without repeating the start
};

BipartiteReport is_bipartite(const Graph& g);

enum class CombineKind { Union, Sum, Join, CartesianProduct, Intersection };

/// Union and intersection work on the shared index space 0..n-1. Sum and join
/// place G2 after G1 (vertex v of G2 becomes n1 + v). The Cartesian product
/// maps (u1, u2) to u1 * n2 + u2.
Graph combine(CombineKind kind, const Graph& g1, const Graph& g2);

Graph complement(const Graph& g);

/// Vertex i of the result is edge i of g (in g's sorted edge order).
Graph line_graph(const Graph& g);

/// Remaining vertices are renumbered in increasing order.
Graph delete_vertices(const Graph& g, const std::vector<Vertex>& doomed);
/// Removes one occurrence of each listed edge.
Graph delete_edges(const Graph& g, const std::vector<Edge>& doomed);
/// Identifies the ends of e into min(u, v); parallel copies of e become loops.
Graph contract_edge(const Graph& g, Edge e);

struct EulerReport {
  bool eulerian = false;
  std::vector<std::size_t> tour_edges;  // indices into g.edges()
  std::vector<Vertex> tour_vertices;    // closed: first == last
};

EulerReport eulerian(const Graph& g);

/// Repeatedly joins non-adjacent u, v with deg(u) + deg(v) >= n. With a seed,
/// candidate pairs are visited in a shuffled order.
Graph closure(const Graph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct HamiltonReport {
  Graph closure;
  bool closure_complete = false;
  bool hamiltonian = false;
  std::vector<Vertex> cycle;  // spanning cycle without the repeated start
};

HamiltonReport hamiltonian(const Graph& g, std::size_t max_vertices = 14);

struct VertexColoring {
  std::size_t colors = 0;
  std::vector<std::size_t> assignment;
};

struct EdgeColoring {
  std::size_t colors = 0;
  std::vector<std::size_t> assignment;  // parallel to g.edges()
};

struct ColoringLimits {
  std::size_t max_vertices = 14;
  std::size_t max_edges = 20;
};

VertexColoring vertex_coloring(const Graph& g, const ColoringLimits& limits = {});
EdgeColoring edge_coloring(const Graph& g, const ColoringLimits& limits = {});

struct ColoringReport {
  VertexColoring vertex;
  EdgeColoring edge;
};

ColoringReport coloring(const Graph& g, const ColoringLimits& limits = {});

/// Generic exact k-colouring of an adjacency structure; empty when impossible.
std::optional<std::vector<std::size_t>> k_coloring(const std::vector<std::vector<Vertex>>& adjacency,
                                                   std::size_t k);

/// f(G; x) by deletion minus contraction. Simple graphs only.
Polynomial chromatic_polynomial(const Graph& g, std::size_t max_vertices = 16);

/// Number of spanning trees by the deletion-contraction recursion on
/// parallel-edge classes. Loops are ignored.
BigInt spanning_tree_count(const Graph& g, std::size_t max_vertices = 16);

// ---------------------------------------------------------------------------
// Tutte matrix

/// Entry t_ij of the Tutte matrix: sign * x_{min(i,j),max(i,j)}, or 0.
struct TutteEntry {
  int sign = 0;
  Vertex i = 0;
  Vertex j = 0;
};

struct TutteMatrix {
  std::size_t n = 0;
  std::vector<TutteEntry> entries;  // row-major n x n

  const TutteEntry& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  /// Rows like "0, x_1_3, -x_2_4" (1-based variable subscripts).
  std::string to_text() const;
};

TutteMatrix tutte_matrix(const Graph& g);

struct TutteOptions {
  unsigned repetitions = 20;
  std::uint64_t prime = 2147483647ULL;
  std::uint64_t seed = 20240611ULL;
  std::size_t brute_force_limit = 10;
};

struct TutteReport {
  TutteMatrix matrix;
  bool has_one_factor = false;
  unsigned nonzero_trials = 0;
  unsigned trials = 0;
  std::optional<bool> brute_force;  // present when n <= brute_force_limit
};

/// Randomised identity test: det T is evaluated at uniform points of GF(p).
/// A nonzero evaluation proves a 1-factor exists; r zero evaluations are
/// reported as "no 1-factor".
TutteReport tutte(const Graph& g, const TutteOptions& options = {});

/// det of an integer matrix mod p (entries reduced first).
std::uint64_t determinant_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace neutro::graph
