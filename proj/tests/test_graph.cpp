#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <random>

#include "neutro/error.hpp"
#include "neutro/graph.hpp"
#include "support.hpp"

using namespace neutro;
using namespace neutro::graph;

namespace {

Graph family(const char* text) { return generate(FamilySpec::parse(text)); }

Polynomial falling(std::size_t n) {
  // x(x-1)...(x-n+1)
  Polynomial p({BigInt(1)});
  for (std::size_t k = 0; k < n; ++k) p = p * Polynomial({BigInt(-static_cast<long long>(k)), BigInt(1)});
  return p;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(family("complete:5").edge_count() == 10);
  CHECK(family("complete-bipartite:3:4").edge_count() == 12);
  CHECK(family("cycle:6").edge_count() == 6);
  CHECK(family("path:4").edge_count() == 3);
  CHECK(family("star:5").vertex_count() == 6);
  auto w = family("wheel:5");
  CHECK(w.vertex_count() == 6);
  CHECK(w.degree(0) == 5);
  auto p = family("petersen");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(FamilySpec::parse("complete-bipartite 3 3").to_string() == FamilySpec::parse("complete-bipartite:3:3").to_string());
  CHECK_THROWS_AS(FamilySpec::parse("hypercube:3"), Error);
}

TEST_CASE("edge list round trip") {
  auto g = family("petersen");
  CHECK(Graph::parse_edge_list(g.to_edge_list()) == g);
  auto multi = Graph::parse_edge_list("2 2\n0 1\n0 1\n", {true, false});
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK_FALSE(multi.is_simple());
  CHECK_THROWS(Graph::parse_edge_list("2 2\n0 1\n0 1\n"));
  CHECK_THROWS(Graph::parse_edge_list("2 1\n0 5\n"));
}

TEST_CASE("degrees, connectivity and cuts") {
  auto d = degree_report(family("star:4"));
  CHECK(d.max_degree == 4);
  CHECK(d.min_degree == 1);
  CHECK(d.sequence == std::vector<std::size_t>{4, 1, 1, 1, 1});

  auto c = connectivity(family("path:4"));
  CHECK(c.connected);
  CHECK(c.cut_vertices == std::vector<Vertex>{1, 2});
  CHECK(c.cut_edges.size() == 3);

  auto cyc = connectivity(family("cycle:5"));
  CHECK(cyc.cut_vertices.empty());
  CHECK(cyc.cut_edges.empty());

  Graph two(4, {{0, 1}, {2, 3}});
  CHECK(components(two).size() == 2);
  CHECK_FALSE(connectivity(two).connected);
}

TEST_CASE("degree sum is twice the edge count") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    auto g = test::random_simple_graph(rng, 1 + rng() % 9, 0.4);
    std::size_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("metrics") {
  auto p = metrics(family("petersen"));
  CHECK(p.girth == 5);
  CHECK(p.diameter == 2);
  CHECK(p.circumference == 9);

  auto t = metrics(family("path:5"));
  CHECK_FALSE(t.girth.has_value());
  CHECK(t.diameter == 4);

  auto k4 = metrics(family("complete:4"));
  CHECK(k4.girth == 3);
  CHECK(k4.circumference == 4);

  Graph two(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(metrics(two).diameter.has_value());
}

TEST_CASE("bipartite test") {
  auto b = is_bipartite(family("complete-bipartite:2:3"));
  CHECK(b.bipartite);
  CHECK(b.part_a.size() + b.part_b.size() == 5);
  auto odd = is_bipartite(family("cycle:5"));
  CHECK_FALSE(odd.bipartite);
  CHECK(odd.odd_cycle.size() % 2 == 1);
  CHECK(is_bipartite(family("cycle:6")).bipartite);
}

TEST_CASE("operations") {
  auto k4 = family("complete:4");
  CHECK(complement(k4).edge_count() == 0);
  CHECK(complement(complement(family("petersen"))) == family("petersen"));

  // Line graph of K4 is the octahedron: 6 vertices, 4-regular.
  auto l = line_graph(k4);
  CHECK(l.vertex_count() == 6);
  CHECK(l.edge_count() == 12);

  auto p2 = family("path:2");
  auto prod = combine(CombineKind::CartesianProduct, p2, p2);
  CHECK(prod.vertex_count() == 4);
  CHECK(prod.edge_count() == 4);

  auto join = combine(CombineKind::Join, Graph(2), Graph(3));
  CHECK(join.edge_count() == 6);
  auto sum = combine(CombineKind::Sum, k4, k4);
  CHECK(sum.edge_count() == 12);
  CHECK(combine(CombineKind::Union, Graph(3, {{0, 1}}), Graph(3, {{1, 2}})).edge_count() == 2);
  CHECK(combine(CombineKind::Intersection, Graph(3, {{0, 1}}), Graph(3, {{1, 2}})).edge_count() == 0);

  auto c = contract_edge(family("cycle:4"), Edge(0, 1));
  CHECK(c.vertex_count() == 3);
  CHECK(c.edge_count() == 3);
  CHECK(delete_vertices(k4, {0}).edge_count() == 3);
  CHECK(delete_edges(k4, {Edge(0, 1)}).edge_count() == 5);
}

TEST_CASE("Euler tours") {
  auto e = eulerian(family("complete:5"));
  CHECK(e.eulerian);
  CHECK(e.tour_edges.size() == 10);
  CHECK(e.tour_vertices.front() == e.tour_vertices.back());
  CHECK_FALSE(eulerian(family("complete:4")).eulerian);
}

TEST_CASE("Hamiltonicity and closure") {
  auto h = hamiltonian(family("wheel:5"));
  CHECK(h.hamiltonian);
  CHECK(h.cycle.size() == 6);
  CHECK_FALSE(hamiltonian(family("petersen")).hamiltonian);
  CHECK_FALSE(hamiltonian(family("complete-bipartite:2:3")).hamiltonian);

  // Closure is independent of the order of insertion.
  std::mt19937_64 rng(5);
  auto g = test::random_simple_graph(rng, 8, 0.6);
  auto base = closure(g);
  for (std::uint64_t s = 1; s <= 5; ++s) CHECK(closure(g, s) == base);
  CHECK(closure(family("cycle:5")) == family("cycle:5"));
  CHECK(hamiltonian(family("complete:6")).closure_complete);
}

TEST_CASE("colouring suite") {
  CHECK(vertex_coloring(family("complete:4")).colors == 4);
  CHECK(edge_coloring(family("complete:4")).colors == 3);
  CHECK(edge_coloring(family("complete:5")).colors == 5);
  CHECK(vertex_coloring(family("cycle:5")).colors == 3);
  CHECK(edge_coloring(family("cycle:5")).colors == 3);
  CHECK(vertex_coloring(family("complete-bipartite:3:3")).colors == 2);

  auto start = std::chrono::steady_clock::now();
  auto p = coloring(family("petersen"));
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(p.vertex.colors == 3);
  CHECK(p.edge.colors == 4);
  CHECK(secs < 5.0);

  auto g = family("petersen");
  for (const auto& e : g.edges()) CHECK(p.vertex.assignment[e.u] != p.vertex.assignment[e.v]);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
      const auto &a = g.edges()[i], &b = g.edges()[j];
      if (a.touches(b.u) || a.touches(b.v)) CHECK(p.edge.assignment[i] != p.edge.assignment[j]);
    }
}

TEST_CASE("edge chromatic number of complete graphs follows parity") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto k = family(("complete:" + std::to_string(n)).c_str());
    CHECK(edge_coloring(k).colors == (n % 2 == 0 ? n - 1 : n));
  }
}

TEST_CASE("chromatic polynomial suite") {
  CHECK(chromatic_polynomial(family("complete:3")) == falling(3));
  CHECK(chromatic_polynomial(family("complete:5")) == falling(5));

  std::mt19937_64 rng(17);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      auto t = test::random_tree(rng, n);
      Polynomial expect({BigInt(0), BigInt(1)});
      for (std::size_t k = 1; k < n; ++k) expect = expect * Polynomial({BigInt(-1), BigInt(1)});
      CHECK(chromatic_polynomial(t) == expect);
    }

  for (int s = 0; s < 200; ++s) {
    std::size_t n = 1 + rng() % 6;
    auto g = test::random_simple_graph(rng, n, 0.5);
    CAPTURE(g.to_edge_list());
    auto f = chromatic_polynomial(g);
    for (unsigned k = 1; k <= 4; ++k) CHECK(f.evaluate(k) == test::count_colorings(g, k));
    CHECK(f.coefficient(n) == 1);
    CHECK(f.coefficient(n - 1) == -static_cast<long long>(g.edge_count()));
  }
  CHECK_THROWS_AS(chromatic_polynomial(Graph::parse_edge_list("2 2\n0 1\n0 1\n", {true, false})), DomainError);
}

TEST_CASE("polynomial text") {
  CHECK(chromatic_polynomial(family("complete:3")).to_string() == "x^3 - 3x^2 + 2x");
  CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(family("complete:5")) == 125);
  CHECK(spanning_tree_count(family("petersen")) == 2000);
  CHECK(spanning_tree_count(family("cycle:7")) == 7);
  CHECK(spanning_tree_count(Graph(3, {{0, 1}})) == 0);
  auto multi = Graph::parse_edge_list("3 4\n0 1\n0 1\n1 2\n2 0\n", {true, false});
  CHECK(spanning_tree_count(multi) == 5);

  std::mt19937_64 rng(23);
  for (int s = 0; s < 100; ++s) {
    auto g = test::random_simple_graph(rng, 1 + rng() % 8, 0.55);
    CAPTURE(g.to_edge_list());
    CHECK(Rational(spanning_tree_count(g)) == test::matrix_tree_count(g));
  }
}

TEST_CASE("Tutte matrix and perfect matchings") {
  auto t = tutte_matrix(Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(t.n == 4);
  CHECK(t(0, 2).sign == 1);
  CHECK(t(2, 0).sign == -1);
  CHECK(t(0, 1).sign == 0);
  CHECK(t.to_text().find("x_1_3") != std::string::npos);

  CHECK(tutte(family("petersen")).has_one_factor);
  CHECK_FALSE(tutte(family("star:3")).has_one_factor);
  CHECK_FALSE(tutte(family("complete:5")).has_one_factor);

  std::mt19937_64 rng(29);
  int disagreements = 0;
  for (int s = 0; s < 200; ++s) {
    auto g = test::random_simple_graph(rng, 1 + rng() % 8, 0.45);
    auto r = tutte(g);
    if (r.has_one_factor != test::has_perfect_matching_brute(g)) ++disagreements;
    if (r.brute_force) CHECK(*r.brute_force == test::has_perfect_matching_brute(g));
  }
  CHECK(disagreements == 0);
}

TEST_CASE("determinant modulo a prime") {
  CHECK(determinant_mod({{1, 2}, {3, 4}}, 7) == 5);  // -2 mod 7
  CHECK(determinant_mod({{2, 4}, {1, 2}}, 11) == 0);
}

TEST_CASE("digraph degrees") {
  auto d = Digraph::parse_edge_list("3 3\n0 1\n1 2\n2 0\n");
  CHECK(d.out_degree(0) == 1);
  CHECK(d.in_degree(0) == 1);
  CHECK(d.underlying().edge_count() == 3);
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(chromatic_polynomial(family("complete:17")), SizeGuardError);
  CHECK_THROWS_AS(metrics(family("complete:17")), SizeGuardError);
  CHECK_THROWS_AS(edge_coloring(family("complete:7")), SizeGuardError);
}
