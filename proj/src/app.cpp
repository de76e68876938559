#include "app.hpp"

#include <algorithm>

#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro::app {

Report& Report::field(std::string key, std::string value) {
  items_.push_back({std::move(key), std::move(value), {}, false});
  return *this;
}

Report& Report::matrix(std::string key, std::vector<std::string> rows) {
  items_.push_back({std::move(key), {}, std::move(rows), true});
  return *this;
}

std::string Report::render(Format f) const {
  std::string out;
  for (const auto& it : items_) {
    if (f == Format::Plain) {
      if (!it.is_matrix) {
        out += it.key + ": " + it.value + "\n";
        continue;
      }
      out += it.key + ":" + (it.rows.empty() ? " (none)\n" : "\n");
      for (const auto& r : it.rows) out += "  " + r + "\n";
    } else {
      std::string key = it.key;
      std::replace(key.begin(), key.end(), ' ', '_');
      if (!it.is_matrix) {
        out += key + "=" + it.value + "\n";
        continue;
      }
      out += key + ".rows=" + std::to_string(it.rows.size()) + "\n";
      for (std::size_t i = 0; i < it.rows.size(); ++i)
        out += key + ".row" + std::to_string(i + 1) + "=" + it.rows[i] + "\n";
    }
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_indices(const std::vector<std::size_t>& v, std::size_t base, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + std::to_string(v[i] + base);
  return out.empty() ? "-" : out;
}

namespace {

std::string join_strings(const std::vector<std::string>& v, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(sep) : "") + v[i];
  return out.empty() ? "-" : out;
}

std::string opt_count(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

std::string edge_text(const graph::Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

std::vector<std::string> matrix_rows(const NeutroMatrix& m) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string r;
    for (std::size_t j = 0; j < m.cols(); ++j) r += (j ? " " : "") + m(i, j).to_string();
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Graphs

std::string graph_analyze(const graph::Graph& g, const GraphAnalyzeOptions& options, Format f) {
  using namespace graph;
  Report rep;
  rep.field("vertices", std::to_string(g.vertex_count()))
      .field("edges", std::to_string(g.edge_count()))
      .field("simple", yes_no(g.is_simple()));
  const unsigned s = options.sections;

  if (s & kDegrees) {
    auto d = degree_report(g);
    rep.field("degrees", join_indices(d.degrees))
        .field("degree sequence", join_indices(d.sequence))
        .field("min degree", std::to_string(d.min_degree))
        .field("max degree", std::to_string(d.max_degree))
        .field("regular", d.min_degree == d.max_degree ? "yes (" + std::to_string(d.max_degree) + ")" : "no");
  }
  if (s & kConnectivity) {
    auto c = connectivity(g);
    std::vector<std::string> bridges;
    for (const auto& e : c.cut_edges) bridges.push_back(edge_text(e));
    rep.field("components", std::to_string(c.components.size()))
        .field("connected", yes_no(c.connected))
        .field("cut vertices", join_indices(c.cut_vertices))
        .field("bridges", join_strings(bridges));
  }
  if (s & kMetrics) {
    auto m = metrics(g);
    rep.field("girth", opt_count(m.girth))
        .field("circumference", opt_count(m.circumference))
        .field("diameter", m.diameter ? std::to_string(*m.diameter) : "infinite");
  }
  if (s & kBipartite) {
    auto b = is_bipartite(g);
    rep.field("bipartite", yes_no(b.bipartite));
    if (b.bipartite)
      rep.field("part a", join_indices(b.part_a)).field("part b", join_indices(b.part_b));
    else
      rep.field("odd cycle", join_indices(b.odd_cycle));
  }
  if (s & kEuler) {
    auto e = eulerian(g);
    rep.field("eulerian", yes_no(e.eulerian));
    if (e.eulerian) rep.field("euler tour", join_indices(e.tour_vertices));
  }
  if (s & kHamilton) {
    if (g.vertex_count() < 3) {
      rep.field("hamiltonian", "no (fewer than 3 vertices)");
    } else {
      auto h = hamiltonian(g);
      rep.field("closure complete", yes_no(h.closure_complete)).field("hamiltonian", yes_no(h.hamiltonian));
      if (h.hamiltonian) rep.field("hamilton cycle", join_indices(h.cycle));
    }
  }
  if (s & kColoring) {
    auto c = coloring(g);
    rep.field("chromatic number", std::to_string(c.vertex.colors))
        .field("vertex colours", join_indices(c.vertex.assignment, 1))
        .field("chromatic index", std::to_string(c.edge.colors))
        .field("edge colours", join_indices(c.edge.assignment, 1));
  }
  if (s & kPolynomial) {
    if (g.is_simple())
      rep.field("chromatic polynomial", chromatic_polynomial(g).to_string());
    else
      rep.field("chromatic polynomial", "undefined (not a simple graph)");
  }
  if (s & kSpanningTrees) rep.field("spanning trees", spanning_tree_count(g).str());
  if (s & kTutte) {
    TutteOptions to;
    to.seed = options.seed;
    to.repetitions = options.repetitions;
    auto t = tutte(g, to);
    rep.field("perfect matching", yes_no(t.has_one_factor))
        .field("tutte trials", std::to_string(t.nonzero_trials) + " nonzero of " + std::to_string(t.trials))
        .field("tutte seed", std::to_string(options.seed));
    if (t.brute_force) rep.field("perfect matching (exhaustive)", yes_no(*t.brute_force));
  }
  return rep.render(f);
}

graph::Graph graph_transform(const graph::Graph& g, std::string_view op) {
  if (op == "complement") return graph::complement(g);
  if (op == "line") return graph::line_graph(g);
  if (op == "closure") return graph::closure(g);
  throw UsageError("unknown graph transform '" + std::string(op) + "' (complement, line, closure)");
}

// ---------------------------------------------------------------------------
// Neutrosophic graphs

namespace {

std::string vertex_names(const ngraph::NeutroGraph& g, const std::vector<std::size_t>& vs) {
  std::vector<std::string> names;
  for (auto v : vs) names.push_back(g.vertex_name(v));
  return join_strings(names);
}

}  // namespace

std::string ngraph_report(const ngraph::NeutroGraph& g, unsigned sections, Format f) {
  using namespace ngraph;
  Report rep;
  rep.field("real vertices", std::to_string(g.real_count()))
      .field("indeterminate vertices", std::to_string(g.indet_count()))
      .field("edges", std::to_string(g.edges().size()))
      .field("indeterminate edges", std::to_string(g.indeterminate_edge_count()))
      .field("directed", yes_no(g.directed()));
  if (sections & kClassify) {
    rep.field("classification", classification_name(classify(g)));
    if (g.directed()) rep.field("neutro oriented", yes_no(is_neutro_oriented(g)));
  }
  if (sections & kNDegrees) {
    auto d = neutro_degree_report(g);
    rep.field("degrees", join_indices(d.degrees))
        .field("min neutro degree", opt_count(d.min_degree))
        .field("max neutro degree", opt_count(d.max_degree))
        .field("neutro regular", d.k_neutro_regular ? "yes (" + std::to_string(*d.k_neutro_regular) + ")" : "no")
        .field("strongly neutro regular", yes_no(d.strongly_regular))
        .field("isolated neutro vertices", vertex_names(g, d.isolated))
        .field("pendent neutro vertices", vertex_names(g, d.pendent));
  }
  if (sections & kNComponents) {
    auto c = neutro_components(g);
    std::vector<std::string> comps;
    for (const auto& comp : c.components) comps.push_back(vertex_names(g, comp));
    rep.field("connected", yes_no(c.connected))
        .field("neutro disconnected", yes_no(c.neutro_disconnected))
        .matrix("components", comps);
  }
  if (sections & kNTree) {
    auto t = neutro_tree(g);
    rep.field("neutro tree", yes_no(t.is_neutro_tree));
    if (t.eccentricity) {
      rep.field("neutro eccentricity", join_indices(*t.eccentricity))
          .field("neutro radius", opt_count(t.radius))
          .field("neutro diameter", opt_count(t.diameter))
          .field("neutro center", vertex_names(g, t.center));
    }
  }
  if (sections & kNEuler) {
    auto e = neutro_eulerian(g);
    rep.field("eulerian", yes_no(e.eulerian))
        .field("neutro eulerian", yes_no(e.neutro_eulerian))
        .field("strong neutro eulerian", yes_no(e.strong_neutro_eulerian));
  }
  if (sections & kNColoring) {
    auto c = neutro_coloring(g);
    rep.field("neutro chromatic number", std::to_string(c.vertex_colors))
        .field("vertex colours", join_indices(c.vertex_assignment, 1))
        .field("neutro chromatic index", std::to_string(c.edge_colors))
        .field("edge colours", join_indices(c.edge_assignment, 1));
  }
  if (sections & kAdjacency) {
    if (g.is_simple() || !g.options().allow_multi)
      rep.matrix("adjacency", matrix_rows(adjacency(g)));
    else
      rep.field("adjacency", "undefined (parallel edges)");
  }
  return rep.render(f);
}

std::string ngraph_walk(const ngraph::NeutroGraph& g, std::string_view walk, Format f) {
  std::string text(walk);
  std::replace(text.begin(), text.end(), ',', ' ');
  std::vector<std::size_t> vs;
  for (auto w : detail::split_words(text)) vs.push_back(g.vertex_by_name(w));
  auto r = ngraph::classify_walk(g, vs);
  Report rep;
  rep.field("walk", vertex_names(g, vs)).field("kind", ngraph::walk_kind_name(r.kind));
  if (r.kind == ngraph::WalkKind::Invalid)
    rep.field("reason", r.reason);
  else
    rep.field("closed", yes_no(r.closed)).field("neutrosophic", yes_no(r.neutrosophic));
  return rep.render(f);
}

std::string ngraph_isomorphic(const ngraph::NeutroGraph& a, const ngraph::NeutroGraph& b, Format f) {
  auto r = ngraph::neutro_isomorphic(a, b);
  Report rep;
  rep.field("isomorphic", yes_no(r.isomorphic));
  if (r.isomorphic) {
    std::vector<std::string> pairs;
    for (std::size_t v = 0; v < r.map.size(); ++v) pairs.push_back(a.vertex_name(v) + "->" + b.vertex_name(r.map[v]));
    rep.field("map", join_strings(pairs));
  }
  return rep.render(f);
}

ngraph::PetersenKind parse_petersen_kind(std::string_view text) {
  if (text == "vertex") return ngraph::PetersenKind::Vertex;
  if (text == "edge") return ngraph::PetersenKind::Edge;
  if (text == "strong") return ngraph::PetersenKind::Strong;
  throw UsageError("unknown Petersen variant '" + std::string(text) + "' (vertex, edge, strong)");
}

// ---------------------------------------------------------------------------
// Relations

namespace {

std::vector<std::string> relation_rows(const relation::Relation& r) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::string line = r.row_labels()[i] + ":";
    for (std::size_t j = 0; j < r.cols(); ++j) line += " " + r(i, j).to_string();
    rows.push_back(std::move(line));
  }
  return rows;
}

std::string values_text(const std::vector<relation::FuzzyValue>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(x.to_string());
  return join_strings(parts);
}

}  // namespace

std::string relation_report(const relation::Relation& r, Format f) {
  Report rep;
  rep.field("rows", join_strings(r.row_labels())).field("columns", join_strings(r.col_labels()));
  rep.matrix("matrix", relation_rows(r));
  return rep.render(f);
}

std::string relation_properties(const relation::Relation& r, const Rational& epsilon, Format f) {
  using relation::truth_name;
  auto p = relation::properties(r, epsilon);
  Report rep;
  rep.field("reflexive", truth_name(p.reflexive))
      .field("epsilon", format_rational(epsilon))
      .field("epsilon reflexive", truth_name(p.epsilon_reflexive))
      .field("irreflexive", truth_name(p.irreflexive))
      .field("anti reflexive", truth_name(p.anti_reflexive))
      .field("symmetric", truth_name(p.symmetric))
      .field("asymmetric", truth_name(p.asymmetric))
      .field("antisymmetric", truth_name(p.antisymmetric))
      .field("transitive", truth_name(p.transitive))
      .field("anti transitive", truth_name(p.anti_transitive))
      .field("compatibility", truth_name(p.compatibility))
      .field("partial order", truth_name(p.partial_order));
  return rep.render(f);
}

std::string relation_summary(const relation::Relation& r, Format f) {
  auto d = relation::dom_ran_height(r);
  Report rep;
  rep.field("domain", values_text(d.domain)).field("range", values_text(d.range)).field("height", d.height.to_string());
  return rep.render(f);
}

std::string relation_join(const relation::Relation& p, const relation::Relation& q, Format f) {
  auto t = relation::relational_join(p, q);
  std::vector<std::string> triples;
  for (const auto& line : detail::split_lines(t.to_text()))
    if (!detail::trim(line.text).empty()) triples.emplace_back(line.text);
  Report rep;
  rep.matrix("join", triples).matrix("projection", relation_rows(relation::project_join(t)));
  return rep.render(f);
}

std::string relation_homomorphism(const relation::Relation& r, const relation::Relation& q, std::string_view mapping,
                                  bool strong, Format f) {
  if (!r.is_square() || !q.is_square()) throw ShapeError("homomorphism check needs square relations");
  std::vector<std::optional<std::size_t>> h(r.rows());
  for (const auto& item : detail::split_names(mapping)) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("mapping entries look like 'a=alpha', got '" + item + "'", 0);
    auto from = r.row_index(detail::trim(std::string_view(item).substr(0, eq)));
    h[from] = q.row_index(detail::trim(std::string_view(item).substr(eq + 1)));
  }
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!h[i]) throw NotFoundError("mapping has no image for '" + r.row_labels()[i] + "'");
    map.push_back(*h[i]);
  }
  auto rep_h = relation::check_homomorphism(map, r, q, strong);
  Report rep;
  rep.field("variant", strong ? "strong" : "plain").field("holds", relation::truth_name(rep_h.holds));
  std::vector<std::string> lines;
  for (const auto& v : rep_h.violations) {
    const auto& labels = v.clause == "backward" ? q.row_labels() : r.row_labels();
    lines.push_back(v.clause + " " + labels[v.a] + " " + labels[v.b] + " " + relation::truth_name(v.truth));
  }
  rep.matrix("violations", lines);
  return rep.render(f);
}

// ---------------------------------------------------------------------------
// Cognitive maps

std::vector<std::size_t> resolve_names(const std::vector<std::string>& names, std::string_view list,
                                       std::string_view what) {
  std::vector<std::size_t> out;
  for (const auto& item : detail::split_names(list)) {
    if (item.empty()) continue;
    auto it = std::find(names.begin(), names.end(), item);
    if (it != names.end()) {
      out.push_back(static_cast<std::size_t>(it - names.begin()));
      continue;
    }
    bool digits = std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits && item.size() < 6) {
      std::size_t pos = std::stoul(item);
      if (pos >= 1 && pos <= names.size()) {
        out.push_back(pos - 1);
        continue;
      }
    }
    throw NotFoundError("unknown " + std::string(what) + " '" + item + "'");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

cognitive::State state_with_on(std::size_t n, const std::vector<std::size_t>& on) {
  cognitive::State s(n, cognitive::Activation::Off);
  for (auto i : on) s.at(i) = cognitive::Activation::On;
  return s;
}

namespace {

std::string model_title(const model::Model& m) { return m.name.empty() ? "-" : m.name; }

std::string names_of(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(names[i]);
  return join_strings(out, ", ");
}

void pattern_fields(Report& rep, const std::string& prefix, const cognitive::HiddenPattern& p) {
  if (p.kind == cognitive::PatternKind::FixedPoint) {
    rep.field(prefix + "hidden pattern", "fixed point " + cognitive::state_to_string(p.states.front()));
  } else {
    rep.field(prefix + "hidden pattern", "limit cycle of length " + std::to_string(p.states.size()));
    std::vector<std::string> rows;
    for (const auto& s : p.states) rows.push_back(cognitive::state_to_string(s));
    rep.matrix(prefix + "cycle", rows);
  }
  rep.field(prefix + "steps to enter", std::to_string(p.steps_to_enter));
}

std::vector<std::string> trajectory_rows(const std::vector<cognitive::State>& t, const char* label) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < t.size(); ++i)
    rows.push_back(label + std::to_string(i + 1) + " = " + cognitive::state_to_string(t[i]));
  return rows;
}

std::vector<std::string> note_rows(const std::vector<cognitive::ThresholdNote>& notes,
                                   const std::vector<std::string>& names, const char* label) {
  std::vector<std::string> rows;
  for (const auto& n : notes)
    rows.push_back(label + std::to_string(n.step + 1) + " " + names[n.index] + ": raw " + n.raw.to_string() +
                   " thresholded to " + cognitive::activation_char(n.result));
  return rows;
}

}  // namespace

std::string cm_run_report(const model::Model& m, const cognitive::CmRun& run, bool degraded, Format f) {
  const auto& names = std::get<cognitive::ConceptModel>(m.payload).names();
  Report rep;
  rep.field("model", model_title(m))
      .field("degraded", degraded ? "yes (I replaced by 0)" : "no")
      .field("input", cognitive::state_to_string(run.initial))
      .field("clamp", names_of(names, run.clamp))
      .matrix("trajectory", trajectory_rows(run.trajectory, "A"));
  pattern_fields(rep, "", run.pattern);
  rep.field("iterations", std::to_string(run.iterations())).matrix("notes", note_rows(run.notes, names, "A"));
  return rep.render(f);
}

std::string rm_run_report(const model::Model& m, const cognitive::RmRun& run, Format f) {
  const auto& rm = std::get<cognitive::RelationalModel>(m.payload);
  std::vector<std::string> all = rm.domain();
  all.insert(all.end(), rm.range().begin(), rm.range().end());
  const auto& side_names = run.side == cognitive::Side::Domain ? rm.domain() : rm.range();
  Report rep;
  rep.field("model", model_title(m))
      .field("side", run.side == cognitive::Side::Domain ? "domain" : "range")
      .field("input", cognitive::state_to_string(run.initial))
      .field("clamp", names_of(side_names, run.clamp))
      .matrix("domain trajectory", trajectory_rows(run.domain_trajectory, "A"))
      .matrix("range trajectory", trajectory_rows(run.range_trajectory, "B"));
  pattern_fields(rep, "domain ", run.domain);
  pattern_fields(rep, "range ", run.range);
  std::vector<std::string> notes;
  for (const auto& n : run.notes)
    notes.push_back(note_rows({n}, all, n.index < rm.domain().size() ? "A" : "B").front());
  rep.matrix("notes", notes);
  return rep.render(f);
}

std::string cm_balance_report(const cognitive::ConceptModel& m, Format f) {
  auto b = cognitive::balance(m);
  Report rep;
  rep.field("balanced", yes_no(b.balanced));
  if (b.witness) {
    auto path = [&](const std::vector<std::size_t>& p) {
      std::vector<std::string> out;
      for (auto i : p) out.push_back(m.names()[i]);
      return join_strings(out, " -> ");
    };
    const auto& w = *b.witness;
    rep.field("from", m.names()[w.from])
        .field("to", m.names()[w.to])
        .field("first path", path(w.first) + " (" + cognitive::path_sign_name(w.first_sign) + ")")
        .field("second path", path(w.second) + " (" + cognitive::path_sign_name(w.second_sign) + ")");
  }
  return rep.render(f);
}

std::string cm_convertible_report(const cognitive::ConceptModel& m, Format f) {
  auto c = cognitive::frm_convertible(m);
  Report rep;
  rep.field("convertible", yes_no(c.convertible));
  if (c.convertible)
    rep.field("domain", names_of(m.names(), c.domain)).field("range", names_of(m.names(), c.range));
  else
    rep.field("odd cycle", names_of(m.names(), c.odd_cycle));
  return rep.render(f);
}

std::string cm_sweep_report(const cognitive::ConceptModel& m, const std::vector<cognitive::State>& inputs,
                            const std::vector<cognitive::CmRun>& runs, Format f) {
  (void)m;
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& p = runs[i].pattern;
    std::string result = p.kind == cognitive::PatternKind::FixedPoint
                             ? "fixed point " + cognitive::state_to_string(p.states.front())
                             : "limit cycle of length " + std::to_string(p.states.size());
    rows.push_back(cognitive::state_to_string(inputs[i]) + " => " + result + " after " +
                   std::to_string(runs[i].iterations()) + " iterations");
  }
  Report rep;
  rep.field("runs", std::to_string(runs.size())).matrix("results", rows);
  return rep.render(f);
}

NeutroMatrix model_matrix(const model::Model& m) {
  switch (m.kind()) {
    case model::Kind::ConceptModel: return std::get<cognitive::ConceptModel>(m.payload).weights();
    case model::Kind::RelationalModel: return std::get<cognitive::RelationalModel>(m.payload).weights();
    default:
      throw DomainError(std::string("expected a concept or relational model, got a ") + model::kind_name(m.kind()));
  }
}

std::string link_report(const std::vector<NeutroMatrix>& chain, bool with_signed,
                        const std::optional<NeutroMatrix>& printed, Format f) {
  auto r = cognitive::link(chain);
  std::vector<std::string> shapes, steps;
  for (const auto& m : chain) shapes.push_back(m.shape());
  for (std::size_t i = 0; i < r.transposed.size(); ++i)
    steps.push_back(std::to_string(i + 1) + ": " + (r.transposed[i] ? "transpose(acc) * next" : "acc * next"));
  Report rep;
  rep.field("chain", join_strings(shapes, ", "))
      .matrix("steps", steps)
      .field("shape", r.raw.shape())
      .matrix("raw", matrix_rows(r.raw));
  if (with_signed || printed) rep.matrix("signed", matrix_rows(r.signed_matrix));
  if (printed) {
    if (printed->rows() != r.raw.rows() || printed->cols() != r.raw.cols()) {
      rep.field("comparison", "shape mismatch: computed " + r.raw.shape() + ", printed " + printed->shape());
    } else {
      std::vector<std::string> diffs;
      std::size_t agree = 0;
      for (std::size_t i = 0; i < r.raw.rows(); ++i)
        for (std::size_t j = 0; j < r.raw.cols(); ++j) {
          const auto& p = (*printed)(i, j);
          if (p == r.signed_matrix(i, j)) {
            ++agree;
            continue;
          }
          diffs.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") signed " +
                          r.signed_matrix(i, j).to_string() + " raw " + r.raw(i, j).to_string() + " printed " +
                          p.to_string());
        }
      rep.field("comparison", std::to_string(agree) + " of " + std::to_string(r.raw.entries().size()) +
                                  " signed entries agree with the printed matrix")
          .matrix("differences", diffs);
    }
  }
  return rep.render(f);
}

std::string matrix_product_report(const NeutroMatrix& a, const NeutroMatrix& b, Format f) {
  auto p = nm_mul(a, b);
  Report rep;
  rep.field("shape", p.shape()).matrix("product", matrix_rows(p));
  return rep.render(f);
}

std::string matrix_rank_report(const NeutroMatrix& a, Format f) {
  auto r = nm_rank(a);
  Report rep;
  rep.field("shape", a.shape())
      .field("rank of real part", std::to_string(r.rank_first))
      .field("rank of real plus indeterminate part", std::to_string(r.rank_second))
      .field("invertible", yes_no(r.invertible));
  return rep.render(f);
}

}  // namespace neutro::app
