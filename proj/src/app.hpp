#pragma once

// Report builders shared by the C API. Every function returns finished text.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/cognitive.hpp"
#include "neutro/graph.hpp"
#include "neutro/model.hpp"
#include "neutro/neutro_graph.hpp"
#include "neutro/relation.hpp"

namespace neutro::app {

enum class Format { Plain, Structured };

/// Ordered key/value report. Plain text renders "key: value" and indents
/// matrix rows; the structured form is one "key=value" line per datum, with
/// matrix rows as "key.rowN=...".
class Report {
 public:
  Report& field(std::string key, std::string value);
  Report& matrix(std::string key, std::vector<std::string> rows);
  std::string render(Format f) const;

 private:
  struct Item {
    std::string key;
    std::string value;
    std::vector<std::string> rows;
    bool is_matrix = false;
  };
  std::vector<Item> items_;
};

std::string yes_no(bool b);
std::string join_indices(const std::vector<std::size_t>& v, std::size_t base = 0, std::string_view sep = " ");
std::vector<std::string> matrix_rows(const NeutroMatrix& m);

// Graphs

enum GraphSection : unsigned {
  kDegrees = 1u << 0,
  kConnectivity = 1u << 1,
  kMetrics = 1u << 2,
  kBipartite = 1u << 3,
  kEuler = 1u << 4,
  kHamilton = 1u << 5,
  kColoring = 1u << 6,
  kPolynomial = 1u << 7,
  kSpanningTrees = 1u << 8,
  kTutte = 1u << 9,
  kAllGraphSections = (1u << 10) - 1,
};

struct GraphAnalyzeOptions {
  unsigned sections = kAllGraphSections;
  std::uint64_t seed = graph::TutteOptions{}.seed;
  unsigned repetitions = graph::TutteOptions{}.repetitions;
};

std::string graph_analyze(const graph::Graph& g, const GraphAnalyzeOptions& options, Format f);
/// "complement", "line", "closure".
graph::Graph graph_transform(const graph::Graph& g, std::string_view op);

// Neutrosophic graphs

enum NGraphSection : unsigned {
  kClassify = 1u << 0,
  kNDegrees = 1u << 1,
  kNComponents = 1u << 2,
  kNTree = 1u << 3,
  kNEuler = 1u << 4,
  kNColoring = 1u << 5,
  kAdjacency = 1u << 6,
  kAllNGraphSections = (1u << 7) - 1,
};

std::string ngraph_report(const ngraph::NeutroGraph& g, unsigned sections, Format f);
/// `walk` lists vertex names ("v1 N1 v2" or comma separated).
std::string ngraph_walk(const ngraph::NeutroGraph& g, std::string_view walk, Format f);
std::string ngraph_isomorphic(const ngraph::NeutroGraph& a, const ngraph::NeutroGraph& b, Format f);
ngraph::PetersenKind parse_petersen_kind(std::string_view text);

// Relations

std::string relation_report(const relation::Relation& r, Format f);
std::string relation_properties(const relation::Relation& r, const Rational& epsilon, Format f);
std::string relation_summary(const relation::Relation& r, Format f);
std::string relation_join(const relation::Relation& p, const relation::Relation& q, Format f);
/// `mapping` pairs row labels of r with row labels of q: "a=alpha, b=beta".
std::string relation_homomorphism(const relation::Relation& r, const relation::Relation& q, std::string_view mapping,
                                  bool strong, Format f);

// Cognitive maps

/// Names (or 1-based positions) separated by commas; an empty list gives {}.
std::vector<std::size_t> resolve_names(const std::vector<std::string>& names, std::string_view list,
                                       std::string_view what);
/// State vector with the listed concepts on.
cognitive::State state_with_on(std::size_t n, const std::vector<std::size_t>& on);

std::string cm_run_report(const model::Model& m, const cognitive::CmRun& run, bool degraded, Format f);
std::string rm_run_report(const model::Model& m, const cognitive::RmRun& run, Format f);
std::string cm_balance_report(const cognitive::ConceptModel& m, Format f);
std::string cm_convertible_report(const cognitive::ConceptModel& m, Format f);
std::string cm_sweep_report(const cognitive::ConceptModel& m, const std::vector<cognitive::State>& inputs,
                            const std::vector<cognitive::CmRun>& runs, Format f);

/// Weight matrix of a concept model, relational model or bare matrix model.
NeutroMatrix model_matrix(const model::Model& m);

/// Linked product of the chain. With `printed`, the signed result is diffed
/// against it entry by entry (and always shown).
std::string link_report(const std::vector<NeutroMatrix>& chain, bool with_signed,
                        const std::optional<NeutroMatrix>& printed, Format f);

std::string matrix_product_report(const NeutroMatrix& a, const NeutroMatrix& b, Format f);
std::string matrix_rank_report(const NeutroMatrix& a, Format f);

}  // namespace neutro::app
