// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "neutro/cognitive.hpp"
#include "neutro/core.hpp"
#include "neutro/graph.hpp"
#include "neutro/model.hpp"
#include "neutro/neutro_graph.hpp"
#include "neutro/relation.hpp"
#include "support.hpp"

using namespace neutro;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

using cognitive::Activation;
using cognitive::State;

State unit(std::size_t n, std::size_t k) {
  State s(n, Activation::Off);
  s[k] = Activation::On;
  return s;
}

std::string pattern_text(const cognitive::CmRun& r) {
  if (r.pattern.kind == cognitive::PatternKind::FixedPoint)
    return "fixed point " + cognitive::state_to_string(r.pattern.states.front());
  return "limit cycle of length " + std::to_string(r.pattern.states.size());
}

cognitive::ConceptModel concept_model(const char* name) {
  return std::get<cognitive::ConceptModel>(test::load_fixture(name).payload);
}

void expect_fixed(Check& c, const char* fixture, std::size_t start, const std::string& expected,
                  std::size_t max_iterations) {
  auto run = cognitive::cm_run(concept_model(fixture), unit(concept_model(fixture).size(), start));
  std::string got = pattern_text(run);
  c.expect(got == "fixed point " + expected, std::string(fixture) + ": got " + got + ", expected fixed point " + expected);
  c.expect(run.iterations() <= max_iterations, std::string(fixture) + ": " + std::to_string(run.iterations()) +
                                                   " iterations, bound " + std::to_string(max_iterations));
  c.note(std::string(fixture) + " -> " + got + " after " + std::to_string(run.iterations()) + " iterations");
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  auto a = NeutroMatrix::parse(test::read_file(test::fixture_path("product-a.matrix")));
  auto b = NeutroMatrix::parse(test::read_file(test::fixture_path("product-b.matrix")));
  auto ab = nm_mul(a, b);
  NeutroMatrix expected{{{2, -6}, {-1, 4}, {-2, -3}, {0, 1}}, {{0, 4}, {3, 1}, 6, {12, 2}}};
  c.expect(ab == expected, "product differs from the expected matrix");
  c.expect(ab == test::split_product(a, b), "product differs from the split-component oracle");
  c.expect(ab == NeutroMatrix::parse(test::read_file(test::fixture_path("product-ab.matrix"))),
           "product differs from the stored result file");
  c.expect(ab(1, 0) == NeutroNumber(0, 4), "entry (2,1) is " + ab(1, 0).to_string() + ", expected 4I");
  c.note("entry (2,1) = " + ab(1, 0).to_string());
}

void criterion2(Check& c) { expect_fixed(c, "childlabor-fcm.model", 0, "1 0 0 1 1 1 0", 3); }

void criterion3(Check& c) { expect_fixed(c, "childlabor-ncm.model", 0, "1 I 0 1 1 0 0", 3); }

void criterion4(Check& c) {
  auto fcm = cognitive::cm_run(concept_model("childlabor-expert2-fcm.model"), unit(7, 0));
  c.expect(pattern_text(fcm) == "fixed point 1 1 0 1 0 1 0", "second FCM: " + pattern_text(fcm));
  // "= A4 = A3": the fixed point is first produced at step 3.
  c.expect(fcm.pattern.steps_to_enter + 1 == fcm.iterations() && fcm.iterations() == 3,
           "second FCM entered its fixed point after " + std::to_string(fcm.iterations()) + " iterations");
  auto ncm = cognitive::cm_run(concept_model("childlabor-expert2-ncm.model"), unit(7, 0));
  c.expect(pattern_text(ncm) == "fixed point 1 1 0 1 1 0 0", "second NCM: " + pattern_text(ncm));
  c.note("FCM -> " + pattern_text(fcm) + "; NCM -> " + pattern_text(ncm));
}

void criterion5(Check& c) {
  expect_fixed(c, "hacking-ncm.model", 6, "I I I 0 I I 1 1", 5);
  auto degraded = cognitive::cm_run(cognitive::degrade(concept_model("hacking-ncm.model")), unit(8, 6));
  // Oracle: with I removed, C7 reaches only C2, C5 and C8 with weight I (now 0) or 1.
  // Row C7 = (0 0 0 0 0 0 0 1) after degrading, and C8 has no outgoing arcs.
  c.expect(pattern_text(degraded) == "fixed point 0 0 0 0 0 0 1 1", "degraded run: " + pattern_text(degraded));
  c.note("degraded -> " + pattern_text(degraded));
}

void criterion6(Check& c) {
  auto cg = std::get<cognitive::RelationalModel>(test::load_fixture("linked-cg.model").payload).weights();
  auto cp = std::get<cognitive::RelationalModel>(test::load_fixture("linked-cp.model").payload).weights();
  auto printed = std::get<cognitive::RelationalModel>(test::load_fixture("linked-gp-printed.model").payload).weights();
  auto res = cognitive::link({cg, cp});
  c.expect(res.raw.rows() == 4 && res.raw.cols() == 5, "raw product has shape " + res.raw.shape());
  auto hand = NeutroMatrix::parse(
      "-2I, 0, I, -1+I, 0\n"
      "3, 4+I, -2, -3-I, 4\n"
      "-5, -6-I, 4, 5+I, -6\n"
      "5, 4+I, -3, -3-I, 4\n");
  c.expect(res.raw == hand, "raw product differs from the hand expansion");
  c.expect(res.raw == test::split_product(nm_transpose(cg), cp), "raw product differs from the split oracle");
  std::size_t agree = 0;
  for (std::size_t k = 0; k < printed.entries().size(); ++k)
    if (res.signed_matrix.entries()[k] == printed.entries()[k]) ++agree;
  c.note(std::to_string(agree) + " of 20 signed entries agree with the printed matrix (reported only)");
}

void criterion7(Check& c) {
  auto g = std::get<ngraph::NeutroGraph>(test::load_fixture("neutro-adjacency.model").payload);
  auto a = ngraph::adjacency(g);
  auto expected = NeutroMatrix::parse(test::read_file(test::fixture_path("neutro-adjacency.expected")));
  c.expect(a == expected, "adjacency differs from the expected matrix");
  c.expect(nm_transpose(a) == a, "adjacency is not symmetric");
  for (std::size_t i = 0; i < a.rows(); ++i) c.expect(a(i, i).is_zero(), "nonzero diagonal");
}

void criterion8(Check& c) {
  using namespace graph;
  auto k4 = generate(FamilySpec::parse("complete:4"));
  auto k5 = generate(FamilySpec::parse("complete:5"));
  c.expect(vertex_coloring(k4).colors == 4, "chromatic number of K4");
  c.expect(edge_coloring(k4).colors == 3, "chromatic index of K4");
  c.expect(edge_coloring(k5).colors == 5, "chromatic index of K5");
  auto p = generate(FamilySpec::parse("petersen"));
  bool cubic = true;
  for (auto d : p.degrees()) cubic = cubic && d == 3;
  c.expect(cubic, "Petersen is not 3-regular");
  c.expect(metrics(p).girth == 5, "Petersen girth");
  auto start = std::chrono::steady_clock::now();
  auto idx = edge_coloring(p).colors;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(idx == 4, "Petersen chromatic index is " + std::to_string(idx));
  c.expect(secs < 5.0, "Petersen edge colouring took " + std::to_string(secs) + " s");
  c.expect(!hamiltonian(p).hamiltonian, "Petersen reported Hamiltonian");
  std::ostringstream t;
  t << "Petersen edge colouring in " << secs * 1000 << " ms";
  c.note(t.str());
}

void criterion9(Check& c) {
  using namespace graph;
  std::mt19937_64 rng(9);
  Polynomial k3({BigInt(0), BigInt(2), BigInt(-3), BigInt(1)});
  c.expect(chromatic_polynomial(generate(FamilySpec::parse("complete:3"))) == k3, "f(K3)");
  for (std::size_t n = 1; n <= 8; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      auto t = test::random_tree(rng, n);
      Polynomial expect({BigInt(0), BigInt(1)});
      for (std::size_t k = 1; k < n; ++k) expect = expect * Polynomial({BigInt(-1), BigInt(1)});
      c.expect(chromatic_polynomial(t) == expect, "tree polynomial on " + t.to_edge_list());
    }
  for (int s = 0; s < 200; ++s) {
    std::size_t n = 1 + rng() % 6;
    auto g = test::random_simple_graph(rng, n, 0.5);
    auto f = chromatic_polynomial(g);
    for (unsigned k = 1; k <= 4; ++k)
      c.expect(f.evaluate(k) == test::count_colorings(g, k), "f(G;" + std::to_string(k) + ") on " + g.to_edge_list());
    c.expect(f.coefficient(n - 1) == -static_cast<long long>(g.edge_count()), "second coefficient on " + g.to_edge_list());
  }
}

void criterion10(Check& c) {
  using namespace relation;
  auto rel = [](const char* name) { return std::get<Relation>(test::load_fixture(name).payload); };
  auto comp = properties(rel("compatibility7.model"));
  c.expect(comp.reflexive == Truth::True && comp.symmetric == Truth::True, "7x7 matrix not reflexive and symmetric");
  auto five = properties(rel("neutro-relation5.model"));
  c.expect(five.irreflexive == Truth::True, "5x5 matrix not irreflexive");
  c.expect(five.symmetric == Truth::False, "5x5 matrix symmetric flag is " + std::string(truth_name(five.symmetric)));

  std::mt19937_64 rng(10);
  auto xs = test::labels("x", 3), ys = test::labels("y", 4), zs = test::labels("z", 3), ws = test::labels("w", 2);
  for (int k = 0; k < 100; ++k) {
    auto p = test::random_relation(rng, xs, ys, false);
    auto q = test::random_relation(rng, ys, zs, false);
    auto r = test::random_relation(rng, zs, ws, false);
    c.expect(inverse(maxmin_compose(p, q)) == maxmin_compose(inverse(q), inverse(p)), "inverse law");
    c.expect(maxmin_compose(maxmin_compose(p, q), r) == maxmin_compose(p, maxmin_compose(q, r)), "associativity");
  }
  auto fs = test::labels("x", 4);
  for (int k = 0; k < 50; ++k) {
    auto crisp = test::random_relation(rng, fs, fs, false, true);
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < 16; ++i)
      if (!crisp.values()[i].is_zero()) bits |= 1u << i;
    std::uint32_t brute = test::crisp_closure_brute(bits, 4);
    auto closed = transitive_closure(crisp);
    for (std::size_t i = 0; i < 16; ++i)
      c.expect(closed.values()[i] == FuzzyValue(static_cast<long long>(brute >> i & 1)), "crisp closure");
    auto fuzzy = test::random_relation(rng, fs, fs, false);
    c.expect(transitive_closure(fuzzy) == test::fuzzy_closure_by_cuts(fuzzy), "fuzzy closure");
  }
}

void criterion11(Check& c) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    auto x = test::random_number(rng), y = test::random_number(rng), z = test::random_number(rng);
    c.expect(x + y == y + x && x * y == y * x, "commutativity");
    c.expect((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), "associativity");
    c.expect(x * (y + z) == x * y + x * z, "distributivity");
    c.expect(x + NeutroNumber(0) == x && x * NeutroNumber(1) == x && x + (-x) == NeutroNumber(0), "identities");
    auto sx = split(x), sy = split(y);
    c.expect(split(x + y) == SplitPair{sx.first + sy.first, sx.second + sy.second}, "split of a sum");
    c.expect(split(x * y) == SplitPair{sx.first * sy.first, sx.second * sy.second}, "split of a product");
  }
  for (int k = 0; k < 100; ++k) {
    auto g = test::random_simple_graph(rng, 1 + rng() % 8, 0.55);
    c.expect(Rational(graph::spanning_tree_count(g)) == test::matrix_tree_count(g), "spanning trees on " + g.to_edge_list());
  }
  std::size_t disagreements = 0;
  for (int k = 0; k < 200; ++k) {
    auto g = test::random_simple_graph(rng, 1 + rng() % 8, 0.45);
    if (graph::tutte(g).has_one_factor != test::has_perfect_matching_brute(g)) ++disagreements;
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " Tutte disagreements");
}

void criterion12(Check& c) {
  std::size_t runs = 0;
  for (const char* name : test::concept_fixtures) {
    auto m = concept_model(name);
    const std::size_t n = m.size();
    if (n > 8) continue;
    std::size_t bound = 1;
    for (std::size_t k = 0; k < n; ++k) bound *= 3;
    auto w = test::integer_weights(m.weights());
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      State s0(n, Activation::Off);
      std::vector<int> plain(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (bits >> i & 1) {
          s0[i] = Activation::On;
          plain[i] = 1;
        }
      auto run = cognitive::cm_run(m, s0);
      ++runs;
      c.expect(run.iterations() <= bound, std::string(name) + ": run exceeded 3^n");
      if (run.pattern.kind == cognitive::PatternKind::FixedPoint) {
        const auto& f = run.pattern.states.front();
        c.expect(test::step_oracle(m.weights(), f, run.clamp) == f, std::string(name) + ": fixed point equation");
      }
      if (m.is_fuzzy()) {
        auto ref = test::plain_fcm_run(w, plain, run.clamp);
        bool same = ref.trajectory.size() == run.trajectory.size();
        for (std::size_t t = 0; same && t < ref.trajectory.size(); ++t)
          same = test::to_state(ref.trajectory[t]) == run.trajectory[t];
        c.expect(same, std::string(name) + ": differs from the plain FCM engine");
      }
      // Degraded models are I-free, so the same comparison applies to them.
      auto d = cognitive::degrade(m);
      auto drun = cognitive::cm_run(d, s0);
      auto dref = test::plain_fcm_run(test::integer_weights(d.weights()), plain, drun.clamp);
      bool same = dref.trajectory.size() == drun.trajectory.size();
      for (std::size_t t = 0; same && t < dref.trajectory.size(); ++t)
        same = test::to_state(dref.trajectory[t]) == drun.trajectory[t];
      c.expect(same, std::string(name) + " (degraded): differs from the plain FCM engine");
    }
  }
  c.note(std::to_string(runs) + " runs checked");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"neutrosophic matrix product", criterion1},
      {"child labour FCM from C1", criterion2},
      {"child labour NCM from C1", criterion3},
      {"second expert FCM and NCM from C1", criterion4},
      {"hacking NCM from C7, plain and degraded", criterion5},
      {"linked relational maps", criterion6},
      {"neutrosophic adjacency matrix", criterion7},
      {"colouring suite", criterion8},
      {"chromatic polynomial suite", criterion9},
      {"fuzzy relation suite", criterion10},
      {"property-based core", criterion11},
      {"dynamics properties", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = c.failures.empty();
    if (!ok) ++failed;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " " << criteria[i].first << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::size_t shown = 0;
    for (const auto& f : c.failures) {
      if (++shown > 5) {
        std::cout << "    ... " << c.failures.size() - 5 << " more\n";
        break;
      }
      std::cout << "    failure: " << f << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
