#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "neutro/error.hpp"
#include "neutro/neutro_graph.hpp"
#include "support.hpp"

using namespace neutro;
using namespace neutro::ngraph;

namespace {

constexpr Tag R = Tag::Real;
constexpr Tag Ind = Tag::Indeterminate;

NeutroGraph fixture_graph() {
  return std::get<NeutroGraph>(test::load_fixture("neutro-adjacency.model").payload);
}

NeutroGraph random_ngraph(std::mt19937_64& rng, std::size_t real, std::size_t indet) {
  std::vector<NEdge> edges;
  std::size_t n = real + indet;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % 5 < 2) edges.push_back({u, v, rng() % 3 == 0 ? Ind : R});
  return NeutroGraph(real, indet, edges);
}

// Relabels reals among reals and indeterminates among indeterminates.
NeutroGraph shuffle(std::mt19937_64& rng, const NeutroGraph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.begin() + g.real_count(), rng);
  std::shuffle(p.begin() + g.real_count(), p.end(), rng);
  std::vector<NEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({std::min(p[e.u], p[e.v]), std::max(p[e.u], p[e.v]), e.tag});
  std::shuffle(edges.begin(), edges.end(), rng);
  return NeutroGraph(g.real_count(), g.indet_count(), edges);
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(NeutroGraph(3, 0, {{0, 1, R}, {1, 2, R}})) == Classification::Plain);
  CHECK(classify(NeutroGraph(3, 0, {{0, 1, Ind}})) == Classification::EdgeNeutrosophic);
  CHECK(classify(NeutroGraph(2, 1, {{0, 2, R}})) == Classification::VertexNeutrosophic);
  CHECK(classify(NeutroGraph(2, 1, {{0, 2, Ind}})) == Classification::Strong);
  CHECK(std::string(classification_name(Classification::Strong)).size() > 0);
  CHECK(classify(fixture_graph()) == Classification::EdgeNeutrosophic);
}

TEST_CASE("adjacency of the five vertex graph") {
  auto g = fixture_graph();
  auto a = adjacency(g);
  auto expected = NeutroMatrix::parse(test::read_file(test::fixture_path("neutro-adjacency.expected")));
  CHECK(a == expected);
  CHECK(nm_transpose(a) == a);
  for (std::size_t i = 0; i < a.rows(); ++i) CHECK(a(i, i).is_zero());
  std::size_t indet = 0;
  for (const auto& x : a.entries())
    if (x == NeutroNumber::indeterminate()) ++indet;
  CHECK(indet == 2 * g.indeterminate_edge_count());
}

TEST_CASE("adjacency round trip on random graphs") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 50; ++k) {
    auto g = random_ngraph(rng, 1 + rng() % 5, rng() % 3);
    CHECK(from_adjacency(adjacency(g), g.indet_count()) == g);
  }
}

TEST_CASE("edge list text round trip") {
  auto g = NeutroGraph(3, 2, {{0, 1, R}, {1, 3, Ind}, {2, 4, R}});
  CHECK(NeutroGraph::parse_edge_list(g.to_edge_list()) == g);
  CHECK(g.vertex_name(0) == "v1");
  CHECK(g.vertex_name(3) == "N1");
  CHECK(g.vertex_by_name("N2") == 4);
  CHECK(g.vertex_by_name("2") == 2);
  CHECK_THROWS(g.vertex_by_name("N9"));
  CHECK_THROWS_AS(NeutroGraph::parse_edge_list("2 0 1 0\n0 1 X\n"), ParseError);
}

TEST_CASE("neutrosophic degrees and regularity") {
  // N1 and N2 both of degree 2; v1 of degree 2.
  NeutroGraph tri(1, 2, {{0, 1, R}, {1, 2, Ind}, {0, 2, R}});
  auto d = neutro_degree_report(tri);
  CHECK(d.indet_degrees == std::vector<std::size_t>{2, 2});
  CHECK(d.k_neutro_regular == 2);
  CHECK(d.strongly_regular);

  NeutroGraph star(3, 1, {{0, 3, R}, {1, 3, R}, {2, 3, R}});
  auto s = neutro_degree_report(star);
  CHECK(s.k_neutro_regular == 3);
  CHECK_FALSE(s.strongly_regular);

  NeutroGraph loose(1, 2, {{0, 1, R}});
  auto l = neutro_degree_report(loose);
  CHECK(l.isolated == std::vector<Vertex>{2});
  CHECK(l.pendent == std::vector<Vertex>{1});
  CHECK_FALSE(l.k_neutro_regular.has_value());

  CHECK_FALSE(neutro_degree_report(NeutroGraph(2, 0, {{0, 1, R}})).min_degree.has_value());
}

TEST_CASE("walks, trails, paths and cycles") {
  // Square 0-1-2-3 with an indeterminate chord 0-2.
  NeutroGraph g(4, 0, {{0, 1, R}, {1, 2, R}, {2, 3, R}, {0, 3, R}, {0, 2, Ind}});
  CHECK(classify_walk(g, {0, 1, 2}).kind == WalkKind::Path);
  CHECK_FALSE(classify_walk(g, {0, 1, 2}).neutrosophic);
  CHECK(classify_walk(g, {0, 2, 3}).neutrosophic);
  auto cyc = classify_walk(g, {0, 1, 2, 0});
  CHECK(cyc.kind == WalkKind::Cycle);
  CHECK(cyc.closed);
  CHECK(cyc.neutrosophic);
  CHECK(classify_walk(g, {0, 1, 2, 3, 0, 2}).kind == WalkKind::Trail);
  CHECK(classify_walk(g, {0, 1, 0}).kind == WalkKind::Walk);
  auto bad = classify_walk(g, {1, 3});
  CHECK(bad.kind == WalkKind::Invalid);
  CHECK_FALSE(bad.reason.empty());

  NeutroGraph multi(2, 0, {{0, 1, R}, {0, 1, Ind}}, false, {true, false});
  CHECK(classify_walk(multi, {0, 1}).kind == WalkKind::Invalid);
  CHECK(classify_walk(multi, {0, 1}, {1}).neutrosophic);
  CHECK(classify_walk(multi, {0, 1, 0}, {0, 1}).kind == WalkKind::Trail);
}

TEST_CASE("components") {
  NeutroGraph g(4, 2, {{0, 1, Ind}, {2, 3, R}, {4, 5, R}});
  auto c = neutro_components(g);
  CHECK(c.components.size() == 3);
  CHECK_FALSE(c.connected);
  // {0,1} carries an I edge and {4,5} are indeterminate vertices; {2,3} is plain.
  CHECK(c.neutrosophic.size() == 2);
  CHECK(c.neutro_disconnected);

  NeutroGraph one(4, 0, {{0, 1, Ind}, {2, 3, R}});
  CHECK_FALSE(neutro_components(one).neutro_disconnected);

  NeutroGraph h(4, 0, {{0, 1, Ind}, {2, 3, Ind}});
  CHECK(neutro_components(h).neutro_disconnected);
}

TEST_CASE("trees, eccentricity and centre") {
  // Path N1 - v1 - N2 - v2 - N3 (reals first: v1=0, v2=1, N1=2, N2=3, N3=4).
  NeutroGraph path(2, 3, {{0, 2, R}, {0, 3, R}, {1, 3, R}, {1, 4, R}});
  auto t = neutro_tree(path);
  CHECK(t.is_neutro_tree);
  REQUIRE(t.eccentricity.has_value());
  CHECK(*t.eccentricity == std::vector<std::size_t>{4, 2, 4});
  CHECK(t.radius == 2);
  CHECK(t.diameter == 4);
  CHECK(t.center == std::vector<Vertex>{3});

  CHECK_FALSE(neutro_tree(NeutroGraph(3, 0, {{0, 1, R}, {1, 2, R}})).is_neutro_tree);
  CHECK_FALSE(neutro_tree(NeutroGraph(3, 0, {{0, 1, R}, {1, 2, Ind}, {0, 2, R}})).is_neutro_tree);
  CHECK(neutro_tree(NeutroGraph(3, 0, {{0, 1, R}, {1, 2, Ind}})).is_neutro_tree);
}

TEST_CASE("neutrosophic Euler") {
  NeutroGraph tri_edge(3, 0, {{0, 1, R}, {1, 2, Ind}, {0, 2, R}});
  auto e = neutro_eulerian(tri_edge);
  CHECK(e.eulerian);
  CHECK(e.neutro_eulerian);
  CHECK_FALSE(e.strong_neutro_eulerian);

  NeutroGraph tri_strong(2, 1, {{0, 1, R}, {1, 2, Ind}, {0, 2, R}});
  CHECK(neutro_eulerian(tri_strong).strong_neutro_eulerian);

  NeutroGraph plain(3, 0, {{0, 1, R}, {1, 2, R}, {0, 2, R}});
  CHECK_FALSE(neutro_eulerian(plain).neutro_eulerian);
  CHECK_FALSE(neutro_eulerian(NeutroGraph(2, 0, {{0, 1, Ind}})).eulerian);
}

TEST_CASE("neutrosophic colourings") {
  auto c = neutro_coloring(fixture_graph());
  CHECK(c.vertex_colors == 3);
  CHECK(c.edge_colors == 3);

  // Indeterminate edges do not constrain: K3 with one I edge needs 2 colours.
  NeutroGraph k3(3, 0, {{0, 1, R}, {1, 2, R}, {0, 2, Ind}});
  auto k = neutro_coloring(k3);
  CHECK(k.vertex_colors == 2);
  CHECK(k.edge_colors == 2);

  auto g = fixture_graph();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (e.tag == R && !g.is_indeterminate(e.u) && !g.is_indeterminate(e.v))
      CHECK(c.vertex_assignment[e.u] != c.vertex_assignment[e.v]);
  }
}

TEST_CASE("Petersen generators") {
  auto v = neutro_petersen(PetersenKind::Vertex, 3, 0);
  CHECK(v.order() == 10);
  CHECK(v.indet_count() == 3);
  CHECK(v.edges().size() == 15);
  CHECK(classify(v) == Classification::VertexNeutrosophic);

  auto e = neutro_petersen(PetersenKind::Edge, 0, 4);
  CHECK(e.indeterminate_edge_count() == 4);
  CHECK(classify(e) == Classification::EdgeNeutrosophic);

  auto s = neutro_petersen(PetersenKind::Strong, 2, 5);
  CHECK(classify(s) == Classification::Strong);

  for (const auto& g : {v, e, s}) {
    auto u = g.underlying();
    for (auto d : u.degrees()) CHECK(d == 3);
    CHECK(graph::metrics(u).girth == 5);
  }
  CHECK_THROWS(neutro_petersen(PetersenKind::Vertex, 0, 0));
  CHECK_THROWS(neutro_petersen(PetersenKind::Edge, 0, 16));
}

TEST_CASE("isomorphism respects vertex kinds and edge tags") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 40; ++k) {
    auto g = random_ngraph(rng, 2 + rng() % 4, rng() % 3);
    auto h = shuffle(rng, g);
    auto r = neutro_isomorphic(g, h);
    REQUIRE(r.isomorphic);
    // The returned map carries every edge of g onto an edge of h with the same tag.
    for (const auto& edge : g.edges()) {
      Vertex a = r.map[edge.u], b = r.map[edge.v];
      bool found = std::any_of(h.edges().begin(), h.edges().end(), [&](const NEdge& f) {
        return f.tag == edge.tag && ((f.u == a && f.v == b) || (f.u == b && f.v == a));
      });
      CHECK(found);
    }
  }
  NeutroGraph a(3, 0, {{0, 1, R}, {1, 2, Ind}});
  NeutroGraph b(3, 0, {{0, 1, Ind}, {1, 2, Ind}});
  CHECK_FALSE(neutro_isomorphic(a, b).isomorphic);
  NeutroGraph c(2, 1, {{0, 1, R}, {1, 2, Ind}});
  CHECK_FALSE(neutro_isomorphic(a, c).isomorphic);
}

TEST_CASE("induced subgraphs and stripping") {
  auto g = fixture_graph();
  auto sub = induced(g, {2, 3, 4});
  CHECK(sub.order() == 3);
  CHECK(sub.edges().size() == 3);
  CHECK(classify(sub) == Classification::Plain);

  NeutroGraph mixed(2, 1, {{0, 1, Ind}, {1, 2, R}});
  auto reals = strip_indeterminates(mixed);
  CHECK(reals.order() == 2);
  CHECK(reals.indet_count() == 0);
  CHECK(classify(reals) == Classification::EdgeNeutrosophic);
}

TEST_CASE("orientation") {
  NeutroGraph d(2, 0, {{0, 1, Ind}, {1, 0, Ind}}, true, {true, false});
  CHECK_FALSE(is_neutro_oriented(d));
  NeutroGraph o(2, 0, {{0, 1, Ind}, {1, 0, R}}, true, {true, false});
  CHECK(is_neutro_oriented(o));
}
