#include "neutro/model.hpp"

#include <algorithm>

#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro::model {

namespace {

constexpr std::string_view kHeader = "neutro-model";

bool is_comment(std::string_view line) {
  auto t = detail::trim(line);
  return !t.empty() && t[0] == '#';
}

/// Runs `parse` on a block and shifts reported positions to file offsets.
template <typename F>
auto with_offset(std::size_t offset, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), offset + e.position());
  }
}

graph::Graph parse_graph_block(std::string_view text) {
  graph::Graph g = graph::Graph::parse_edge_list(text, {true, true});
  graph::GraphOptions opts{g.has_parallel_edges(), g.has_loops()};
  return graph::Graph(g.vertex_count(), g.edges(), opts);
}

std::vector<std::string> relational_names(const char* prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

Model parse_raw(std::string_view text, Kind kind) {
  Model m{"", graph::Graph{}, std::nullopt};
  switch (kind) {
    case Kind::Graph: m.payload = parse_graph_block(text); break;
    case Kind::NeutroGraph: m.payload = ngraph::NeutroGraph::parse_edge_list(text); break;
    case Kind::Relation: m.payload = relation::Relation::parse(text); break;
    case Kind::ConceptModel: m.payload = cognitive::ConceptModel(NeutroMatrix::parse(text)); break;
    case Kind::RelationalModel: {
      NeutroMatrix w = NeutroMatrix::parse(text);
      m.payload = cognitive::RelationalModel(relational_names("D", w.rows()), relational_names("R", w.cols()), w);
      break;
    }
  }
  return m;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

const char* kind_name(Kind k) noexcept {
  switch (k) {
    case Kind::Graph: return "graph";
    case Kind::NeutroGraph: return "neutro-graph";
    case Kind::Relation: return "relation";
    case Kind::ConceptModel: return "concept-model";
    case Kind::RelationalModel: return "relational-model";
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  for (Kind k : {Kind::Graph, Kind::NeutroGraph, Kind::Relation, Kind::ConceptModel, Kind::RelationalModel})
    if (name == kind_name(k)) return k;
  throw ParseError("unknown model kind '" + std::string(name) + "'", 0);
}

Model parse_model(std::string_view text, std::optional<Kind> hint) {
  auto lines = detail::split_lines(text);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < lines.size() && (detail::trim(lines[i].text).empty() || is_comment(lines[i].text))) ++i;
  };
  skip();
  if (i == lines.size() || detail::split_words(lines[i].text).front() != kHeader) {
    if (!hint) throw ParseError("missing 'neutro-model 1' header and no kind given for raw input", 0);
    return parse_raw(text, *hint);
  }
  {
    auto words = detail::split_words(lines[i].text);
    if (words.size() != 2 || words[1] != "1")
      throw ParseError("unsupported model file version line '" + std::string(detail::trim(lines[i].text)) + "'",
                       lines[i].offset);
    ++i;
  }

  std::optional<Kind> kind;
  std::string name;
  std::optional<std::vector<std::string>> concepts, domain, range, clamp;
  std::optional<std::pair<std::string, std::size_t>> block;  // text, offset

  for (skip(); i < lines.size(); ++i, skip()) {
    const auto& line = lines[i];
    std::string_view body = detail::trim(line.text);
    const std::size_t at = line.offset + detail::leading_space(line.text);
    std::size_t space = body.find_first_of(" \t");
    std::string_view key = body.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : detail::trim(body.substr(space));

    auto need_kind = [&] {
      if (!kind) throw ParseError("'" + std::string(key) + "' before 'kind'", at);
    };
    auto once = [&](bool already) {
      if (already) throw ParseError("repeated '" + std::string(key) + "' line", at);
    };
    if (key == "kind") {
      once(kind.has_value());
      kind = with_offset(at, [&] { return parse_kind(rest); });
    } else if (key == "name") {
      need_kind();
      name = std::string(rest);
    } else if (key == "concepts" || key == "domain" || key == "range" || key == "clamp") {
      need_kind();
      const bool ok = (key == "concepts" || key == "clamp") ? *kind == Kind::ConceptModel
                                                            : *kind == Kind::RelationalModel;
      if (!ok) throw ParseError("'" + std::string(key) + "' is not valid in a " + kind_name(*kind) + " file", at);
      auto& slot = key == "concepts" ? concepts : key == "domain" ? domain : key == "range" ? range : clamp;
      once(slot.has_value());
      slot = detail::split_names(rest);
    } else if (key == "weights" || key == "edges" || key == "matrix") {
      need_kind();
      const char* expected = (*kind == Kind::Graph || *kind == Kind::NeutroGraph) ? "edges"
                             : *kind == Kind::Relation                             ? "matrix"
                                                                                   : "weights";
      if (key != expected)
        throw ParseError("a " + std::string(kind_name(*kind)) + " file needs an '" + expected + "' block", at);
      once(block.has_value());
      if (!rest.empty()) throw ParseError("unexpected text after '" + std::string(key) + "'", at);
      std::string content;
      std::size_t start = i + 1 < lines.size() ? lines[i + 1].offset : text.size();
      for (++i; i < lines.size() && detail::trim(lines[i].text) != "end"; ++i)
        content += std::string(is_comment(lines[i].text) ? std::string_view{} : lines[i].text) + "\n";
      if (i == lines.size()) throw ParseError("block '" + std::string(key) + "' is missing its 'end'", at);
      block = std::pair(std::move(content), start);
    } else {
      throw ParseError("unknown directive '" + std::string(key) + "'", at);
    }
  }

  if (!kind) throw ParseError("model file has no 'kind' line", text.size());
  if (!block) throw ParseError(std::string("model file has no data block for kind ") + kind_name(*kind), text.size());
  const auto& [content, offset] = *block;

  Model m{name, graph::Graph{}, std::nullopt};
  switch (*kind) {
    case Kind::Graph: m.payload = with_offset(offset, [&] { return parse_graph_block(content); }); break;
    case Kind::NeutroGraph:
      m.payload = with_offset(offset, [&] { return ngraph::NeutroGraph::parse_edge_list(content); });
      break;
    case Kind::Relation: m.payload = with_offset(offset, [&] { return relation::Relation::parse(content); }); break;
    case Kind::ConceptModel: {
      NeutroMatrix w = with_offset(offset, [&] { return NeutroMatrix::parse(content); });
      cognitive::ConceptModel cm = concepts ? cognitive::ConceptModel(*concepts, std::move(w))
                                            : cognitive::ConceptModel(std::move(w));
      if (clamp) {
        std::vector<std::size_t> idx;
        for (const auto& c : *clamp) idx.push_back(cm.index_of(c));
        m.clamp = std::move(idx);
      }
      m.payload = std::move(cm);
      break;
    }
    case Kind::RelationalModel: {
      NeutroMatrix w = with_offset(offset, [&] { return NeutroMatrix::parse(content); });
      auto d = domain ? *domain : relational_names("D", w.rows());
      auto r = range ? *range : relational_names("R", w.cols());
      m.payload = cognitive::RelationalModel(std::move(d), std::move(r), std::move(w));
      break;
    }
  }
  return m;
}

std::string serialize(const Model& m) {
  std::string out = std::string(kHeader) + " 1\nkind " + kind_name(m.kind()) + "\n";
  if (!m.name.empty()) out += "name " + m.name + "\n";
  switch (m.kind()) {
    case Kind::Graph: out += "edges\n" + std::get<graph::Graph>(m.payload).to_edge_list(); break;
    case Kind::NeutroGraph: out += "edges\n" + std::get<ngraph::NeutroGraph>(m.payload).to_edge_list(); break;
    case Kind::Relation: out += "matrix\n" + std::get<relation::Relation>(m.payload).to_text(); break;
    case Kind::ConceptModel: {
      const auto& cm = std::get<cognitive::ConceptModel>(m.payload);
      out += "concepts " + join_names(cm.names()) + "\n";
      if (m.clamp) {
        std::vector<std::string> names;
        for (auto i : *m.clamp) names.push_back(cm.names()[i]);
        out += "clamp " + join_names(names) + "\n";
      }
      out += "weights\n" + cm.weights().to_text();
      break;
    }
    case Kind::RelationalModel: {
      const auto& rm = std::get<cognitive::RelationalModel>(m.payload);
      out += "domain " + join_names(rm.domain()) + "\nrange " + join_names(rm.range()) + "\n";
      out += "weights\n" + rm.weights().to_text();
      break;
    }
  }
  return out + "end\n";
}

Model model_from_csv(std::string_view text, Kind kind) {
  if (kind == Kind::Relation) return parse_raw(text, kind);
  if (kind != Kind::ConceptModel && kind != Kind::RelationalModel)
    throw DomainError(std::string("CSV import is not available for ") + kind_name(kind));

  auto parses = [](std::string_view cell) {
    try {
      NeutroNumber::parse(cell);
      return true;
    } catch (const ParseError&) {
      return false;
    }
  };
  std::vector<std::string> header, labels;
  std::string matrix;
  bool first = true;
  for (const auto& line : detail::split_lines(text)) {
    if (detail::trim(line.text).empty() || is_comment(line.text)) continue;
    auto fields = detail::split_fields(line.text, ',');
    if (first) {
      first = false;
      if (!std::all_of(fields.begin(), fields.end(), [&](const auto& f) { return parses(f.text); })) {
        for (const auto& f : fields) header.emplace_back(detail::trim(f.text));
        continue;
      }
    }
    std::size_t skip = 0;
    if (!parses(fields[0].text)) {
      labels.emplace_back(detail::trim(fields[0].text));
      skip = 1;
    }
    for (std::size_t f = skip; f < fields.size(); ++f) matrix += (f > skip ? "," : "") + std::string(fields[f].text);
    matrix += "\n";
  }
  NeutroMatrix w = NeutroMatrix::parse(matrix);
  if (!header.empty() && header.size() == w.cols() + 1) header.erase(header.begin());
  if (!header.empty() && header.size() != w.cols())
    throw ShapeError("CSV header names " + std::to_string(header.size()) + " columns for a " + w.shape() + " matrix");
  if (!labels.empty() && labels.size() != w.rows()) throw ShapeError("CSV rows are only partly labelled");

  Model m{"", graph::Graph{}, std::nullopt};
  if (kind == Kind::ConceptModel) {
    auto names = !header.empty() ? header : labels;
    m.payload = names.empty() ? cognitive::ConceptModel(std::move(w)) : cognitive::ConceptModel(names, std::move(w));
  } else {
    auto d = labels.empty() ? relational_names("D", w.rows()) : labels;
    auto r = header.empty() ? relational_names("R", w.cols()) : header;
    m.payload = cognitive::RelationalModel(std::move(d), std::move(r), std::move(w));
  }
  return m;
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string title(const Model& m) { return quote(m.name.empty() ? kind_name(m.kind()) : m.name); }

std::string weight_attrs(const NeutroNumber& w) {
  if (!w.is_determinate()) return " [style=dotted, label=\"I\"]";
  return w.real() > 0 ? " [label=\"+1\"]" : " [label=\"-1\"]";
}

std::string rank_group(const std::vector<std::string>& ids) {
  std::string out = "  { rank=same;";
  for (const auto& id : ids) out += " " + id + ";";
  return out + " }\n";
}

}  // namespace

std::string export_dot(const Model& m) {
  std::string out;
  switch (m.kind()) {
    case Kind::Graph: {
      const auto& g = std::get<graph::Graph>(m.payload);
      out = "graph " + title(m) + " {\n  node [shape=circle];\n";
      for (std::size_t v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
      for (const auto& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
      break;
    }
    case Kind::NeutroGraph: {
      const auto& g = std::get<ngraph::NeutroGraph>(m.payload);
      const char* arrow = g.directed() ? " -> " : " -- ";
      out = std::string(g.directed() ? "digraph " : "graph ") + title(m) + " {\n";
      for (std::size_t v = 0; v < g.order(); ++v)
        out += "  " + g.vertex_name(v) +
               (g.is_indeterminate(v) ? " [shape=box, style=dashed];\n" : " [shape=circle];\n");
      for (const auto& e : g.edges())
        out += "  " + g.vertex_name(e.u) + arrow + g.vertex_name(e.v) +
               (e.indeterminate() ? " [style=dotted, label=\"I\"];\n" : ";\n");
      break;
    }
    case Kind::ConceptModel: {
      const auto& cm = std::get<cognitive::ConceptModel>(m.payload);
      out = "digraph " + title(m) + " {\n  node [shape=ellipse];\n";
      for (const auto& n : cm.names()) out += "  " + quote(n) + ";\n";
      for (std::size_t i = 0; i < cm.size(); ++i)
        for (std::size_t j = 0; j < cm.size(); ++j)
          if (!cm.weights()(i, j).is_zero())
            out += "  " + quote(cm.names()[i]) + " -> " + quote(cm.names()[j]) + weight_attrs(cm.weights()(i, j)) +
                   ";\n";
      break;
    }
    case Kind::RelationalModel: {
      const auto& rm = std::get<cognitive::RelationalModel>(m.payload);
      out = "digraph " + title(m) + " {\n  rankdir=LR;\n  node [shape=ellipse];\n";
      std::vector<std::string> d, r;
      for (const auto& n : rm.domain()) d.push_back(quote(n));
      for (const auto& n : rm.range()) r.push_back(quote(n));
      out += rank_group(d) + rank_group(r);
      for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
          if (!rm.weights()(i, j).is_zero()) out += "  " + d[i] + " -> " + r[j] + weight_attrs(rm.weights()(i, j)) + ";\n";
      break;
    }
    case Kind::Relation: {
      const auto& rel = std::get<relation::Relation>(m.payload);
      out = "digraph " + title(m) + " {\n  rankdir=LR;\n  node [shape=circle];\n";
      std::vector<std::string> rows, cols;
      for (std::size_t i = 0; i < rel.rows(); ++i) {
        rows.push_back("r" + std::to_string(i + 1));
        out += "  " + rows.back() + " [label=" + quote(rel.row_labels()[i]) + "];\n";
      }
      for (std::size_t j = 0; j < rel.cols(); ++j) {
        cols.push_back("c" + std::to_string(j + 1));
        out += "  " + cols.back() + " [label=" + quote(rel.col_labels()[j]) + "];\n";
      }
      out += rank_group(rows) + rank_group(cols);
      for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j) {
          const auto& v = rel(i, j);
          if (v.is_zero()) continue;
          out += "  " + rows[i] + " -> " + cols[j] + " [label=" + quote(v.to_string()) +
                 (v.is_indeterminate() ? ", style=dotted" : "") + "];\n";
        }
      break;
    }
  }
  return out + "}\n";
}

}  // namespace neutro::model
