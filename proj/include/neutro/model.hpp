#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/cognitive.hpp"
#include "neutro/graph.hpp"
#include "neutro/neutro_graph.hpp"
#include "neutro/relation.hpp"

namespace neutro::model {

enum class Kind { Graph, NeutroGraph, Relation, ConceptModel, RelationalModel };

const char* kind_name(Kind k) noexcept;
Kind parse_kind(std::string_view name);

using Payload = std::variant<graph::Graph, ngraph::NeutroGraph, relation::Relation, cognitive::ConceptModel,
                             cognitive::RelationalModel>;

struct Model {
  std::string name;
  Payload payload;
  /// Default clamp set of a concept model (indices).
  std::optional<std::vector<std::size_t>> clamp;

  Kind kind() const noexcept { return static_cast<Kind>(payload.index()); }

  friend bool operator==(const Model&, const Model&) = default;
};

/// Model file:
///
///   neutro-model 1
///   kind concept-model
///   name optional free text
///   concepts C1, C2, C3
///   clamp C1                 (concept models only, optional)
///   weights
///   0, 1, I
///   ...
///   end
///
/// Relational models list `domain` and `range` names before `weights`.
/// Graphs and neutro graphs carry an `edges` block with their edge list;
/// relations carry a `matrix` block in relation CSV form. Lines starting
/// with '#' are comments.
///
/// Text without the header is read in the raw format of `hint` (edge list,
/// neutro edge list, relation CSV, or a bare weight matrix).
Model parse_model(std::string_view text, std::optional<Kind> hint = std::nullopt);

/// Canonical model-file text; parse_model(serialize(m)) == m.
std::string serialize(const Model& m);

/// Matrix CSV import for concept and relational models. An optional header
/// row names the columns; relational rows may start with a domain label.
Model model_from_csv(std::string_view text, Kind kind);

/// Graphviz text. Indeterminate edges are dotted and labelled "I";
/// indeterminate vertices are drawn as boxes; signed arcs carry +1/-1;
/// relational models and relations are drawn as two ranked columns.
std::string export_dot(const Model& m);

}  // namespace neutro::model
