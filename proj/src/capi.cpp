#include "neutro/neutro.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <new>
#include <sstream>
#include <variant>

#include "app.hpp"
#include "neutro/error.hpp"
#include "neutro/model.hpp"

using namespace neutro;

struct neutro_model {
  model::Model m;
};

struct neutro_run {
  model::Model model;
  std::variant<cognitive::CmRun, cognitive::RmRun> run;
  bool degraded = false;
};

namespace {

thread_local std::string last_error;

struct NullArgument {
  const char* name;
};

template <typename F>
neutro_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return NEUTRO_OK;
  } catch (const NullArgument& n) {
    last_error = std::string("argument '") + n.name + "' is null";
    return NEUTRO_E_NULL;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<neutro_status>(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NEUTRO_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return NEUTRO_E_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return NEUTRO_E_INTERNAL;
  }
}

template <typename T>
const T& need(const T* p, const char* name) {
  if (!p) throw NullArgument{name};
  return *p;
}

std::string_view arg(const char* p, const char* name) {
  if (!p) throw NullArgument{name};
  return p;
}

void need_out(const void* p) {
  if (!p) throw NullArgument{"out"};
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

app::Format format_of(neutro_format f) {
  if (f == NEUTRO_FORMAT_PLAIN) return app::Format::Plain;
  if (f == NEUTRO_FORMAT_STRUCTURED) return app::Format::Structured;
  throw UsageError("unknown report format " + std::to_string(static_cast<int>(f)));
}

std::optional<model::Kind> kind_of(neutro_kind k) {
  if (k == NEUTRO_KIND_ANY) return std::nullopt;
  if (k < NEUTRO_KIND_GRAPH || k > NEUTRO_KIND_RELATIONAL_MODEL)
    throw UsageError("unknown model kind " + std::to_string(static_cast<int>(k)));
  return static_cast<model::Kind>(k - 1);
}

template <typename T>
const T& payload_of(const neutro_model* m, const char* name, model::Kind want) {
  const auto& model = need(m, name).m;
  if (const T* p = std::get_if<T>(&model.payload)) return *p;
  throw DomainError(std::string("expected a ") + model::kind_name(want) + " for '" + name + "', got a " +
                    model::kind_name(model.kind()));
}

const graph::Graph& graph_of(const neutro_model* m, const char* name) {
  return payload_of<graph::Graph>(m, name, model::Kind::Graph);
}
const ngraph::NeutroGraph& ngraph_of(const neutro_model* m, const char* name) {
  return payload_of<ngraph::NeutroGraph>(m, name, model::Kind::NeutroGraph);
}
const relation::Relation& relation_of(const neutro_model* m, const char* name) {
  return payload_of<relation::Relation>(m, name, model::Kind::Relation);
}
const cognitive::ConceptModel& concept_of(const neutro_model* m, const char* name) {
  return payload_of<cognitive::ConceptModel>(m, name, model::Kind::ConceptModel);
}
const cognitive::RelationalModel& relational_of(const neutro_model* m, const char* name) {
  return payload_of<cognitive::RelationalModel>(m, name, model::Kind::RelationalModel);
}

neutro_model* wrap(model::Model m) { return new neutro_model{std::move(m)}; }

std::string read_source(const char* path) {
  if (std::strcmp(path, "-") == 0) return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFoundError(std::string("cannot open '") + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cognitive::State initial_state(const std::vector<std::string>& names, const char* on, const char* state) {
  if ((on == nullptr) == (state == nullptr)) throw UsageError("give exactly one of an 'on' list and a state vector");
  if (on) return app::state_with_on(names.size(), app::resolve_names(names, on, "concept"));
  return cognitive::parse_state(state);
}

}  // namespace

extern "C" {

const char* neutro_version(void) { return "1.0.0"; }

const char* neutro_last_error(void) { return last_error.c_str(); }

const char* neutro_status_name(neutro_status status) {
  switch (status) {
    case NEUTRO_OK: return "ok";
    case NEUTRO_E_NULL: return "null";
    case NEUTRO_E_INTERNAL: return "internal";
    default:
      if (status >= NEUTRO_E_USAGE && status <= NEUTRO_E_DOMAIN) return error_kind_name(static_cast<ErrorKind>(status));
      return "unknown";
  }
}

void neutro_string_free(char* s) { std::free(s); }

// ---- models

neutro_status neutro_model_load_text(const char* text, neutro_kind hint, neutro_model** out) {
  return guard([&] {
    need_out(out);
    *out = wrap(model::parse_model(arg(text, "text"), kind_of(hint)));
  });
}

neutro_status neutro_model_load_file(const char* path, neutro_kind hint, neutro_model** out) {
  return guard([&] {
    need_out(out);
    std::string text = read_source(std::string(arg(path, "path")).c_str());
    *out = wrap(model::parse_model(text, kind_of(hint)));
  });
}

neutro_status neutro_model_load_csv(const char* text, neutro_kind kind, neutro_model** out) {
  return guard([&] {
    need_out(out);
    auto k = kind_of(kind);
    if (!k) throw UsageError("CSV import needs an explicit model kind");
    *out = wrap(model::model_from_csv(arg(text, "text"), *k));
  });
}

void neutro_model_free(neutro_model* m) { delete m; }

neutro_status neutro_model_kind(const neutro_model* m, neutro_kind* out) {
  return guard([&] {
    need_out(out);
    *out = static_cast<neutro_kind>(static_cast<int>(need(m, "model").m.kind()) + 1);
  });
}

neutro_status neutro_model_serialize(const neutro_model* m, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(model::serialize(need(m, "model").m));
  });
}

neutro_status neutro_model_export_dot(const neutro_model* m, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(model::export_dot(need(m, "model").m));
  });
}

// ---- graphs

neutro_status neutro_graph_generate(const char* family, neutro_model** out) {
  return guard([&] {
    need_out(out);
    auto spec = graph::FamilySpec::parse(arg(family, "family"));
    *out = wrap({spec.to_string(), graph::generate(spec), std::nullopt});
  });
}

neutro_status neutro_graph_analyze(const neutro_model* g, unsigned sections, uint64_t seed, unsigned repetitions,
                                   neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    if (repetitions == 0) throw UsageError("the Tutte test needs at least one repetition");
    app::GraphAnalyzeOptions opts{sections & app::kAllGraphSections, seed, repetitions};
    *out = dup_string(app::graph_analyze(graph_of(g, "graph"), opts, format_of(fmt)));
  });
}

neutro_status neutro_graph_transform(const neutro_model* g, const char* op, neutro_model** out) {
  return guard([&] {
    need_out(out);
    *out = wrap({"", app::graph_transform(graph_of(g, "graph"), arg(op, "op")), std::nullopt});
  });
}

// ---- neutrosophic graphs

neutro_status neutro_ngraph_petersen(const char* kind, size_t vertex_k, size_t edge_k, neutro_model** out) {
  return guard([&] {
    need_out(out);
    auto k = app::parse_petersen_kind(arg(kind, "kind"));
    *out = wrap({"", ngraph::neutro_petersen(k, vertex_k, edge_k), std::nullopt});
  });
}

neutro_status neutro_ngraph_report(const neutro_model* g, unsigned sections, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::ngraph_report(ngraph_of(g, "graph"), sections & app::kAllNGraphSections, format_of(fmt)));
  });
}

neutro_status neutro_ngraph_walk(const neutro_model* g, const char* walk, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::ngraph_walk(ngraph_of(g, "graph"), arg(walk, "walk"), format_of(fmt)));
  });
}

neutro_status neutro_ngraph_isomorphic(const neutro_model* a, const neutro_model* b, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::ngraph_isomorphic(ngraph_of(a, "a"), ngraph_of(b, "b"), format_of(fmt)));
  });
}

// ---- relations

neutro_status neutro_rel_compose(const neutro_model* p, const neutro_model* q, neutro_model** out) {
  return guard([&] {
    need_out(out);
    *out = wrap({"", relation::maxmin_compose(relation_of(p, "p"), relation_of(q, "q")), std::nullopt});
  });
}

neutro_status neutro_rel_inverse(const neutro_model* r, neutro_model** out) {
  return guard([&] {
    need_out(out);
    *out = wrap({"", relation::inverse(relation_of(r, "r")), std::nullopt});
  });
}

neutro_status neutro_rel_closure(const neutro_model* r, neutro_model** out) {
  return guard([&] {
    need_out(out);
    *out = wrap({"", relation::transitive_closure(relation_of(r, "r")), std::nullopt});
  });
}

neutro_status neutro_rel_report(const neutro_model* r, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::relation_report(relation_of(r, "r"), format_of(fmt)));
  });
}

neutro_status neutro_rel_properties(const neutro_model* r, const char* epsilon, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    Rational eps = epsilon ? parse_rational(epsilon) : Rational(1, 2);
    *out = dup_string(app::relation_properties(relation_of(r, "r"), eps, format_of(fmt)));
  });
}

neutro_status neutro_rel_summary(const neutro_model* r, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::relation_summary(relation_of(r, "r"), format_of(fmt)));
  });
}

neutro_status neutro_rel_join(const neutro_model* p, const neutro_model* q, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::relation_join(relation_of(p, "p"), relation_of(q, "q"), format_of(fmt)));
  });
}

neutro_status neutro_rel_homomorphism(const neutro_model* r, const neutro_model* q, const char* mapping, int strong,
                                      neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::relation_homomorphism(relation_of(r, "r"), relation_of(q, "q"), arg(mapping, "mapping"),
                                                 strong != 0, format_of(fmt)));
  });
}

// ---- cognitive maps

neutro_status neutro_cm_run(const neutro_model* m, const char* on, const char* state, const char* clamp, int degrade,
                            neutro_run** out) {
  return guard([&] {
    need_out(out);
    const auto& cm0 = concept_of(m, "model");
    model::Model copy = m->m;
    if (degrade) copy.payload = cognitive::degrade(cm0);
    const auto& cm = std::get<cognitive::ConceptModel>(copy.payload);
    auto s0 = initial_state(cm.names(), on, state);
    std::optional<std::vector<std::size_t>> c;
    if (clamp)
      c = app::resolve_names(cm.names(), clamp, "concept");
    else if (copy.clamp)
      c = copy.clamp;
    auto run = cognitive::cm_run(cm, s0, c);
    *out = new neutro_run{std::move(copy), std::move(run), degrade != 0};
  });
}

neutro_status neutro_rm_run(const neutro_model* m, neutro_side side, const char* on, const char* state,
                            const char* clamp, neutro_run** out) {
  return guard([&] {
    need_out(out);
    const auto& rm = relational_of(m, "model");
    if (side != NEUTRO_SIDE_DOMAIN && side != NEUTRO_SIDE_RANGE) throw UsageError("unknown side");
    const auto s = side == NEUTRO_SIDE_DOMAIN ? cognitive::Side::Domain : cognitive::Side::Range;
    const auto& names = s == cognitive::Side::Domain ? rm.domain() : rm.range();
    auto s0 = initial_state(names, on, state);
    std::optional<std::vector<std::size_t>> c;
    if (clamp) c = app::resolve_names(names, clamp, "concept");
    auto run = cognitive::rm_run(rm, s0, s, c);
    *out = new neutro_run{m->m, std::move(run), false};
  });
}

void neutro_run_free(neutro_run* r) { delete r; }

neutro_status neutro_run_report(const neutro_run* r, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    const auto& run = need(r, "run");
    if (const auto* cm = std::get_if<cognitive::CmRun>(&run.run))
      *out = dup_string(app::cm_run_report(run.model, *cm, run.degraded, format_of(fmt)));
    else
      *out = dup_string(app::rm_run_report(run.model, std::get<cognitive::RmRun>(run.run), format_of(fmt)));
  });
}

neutro_status neutro_run_pattern(const neutro_run* r, neutro_pattern* out) {
  return guard([&] {
    need_out(out);
    const auto& run = need(r, "run");
    const auto& p = std::holds_alternative<cognitive::CmRun>(run.run) ? std::get<cognitive::CmRun>(run.run).pattern
                                                                       : std::get<cognitive::RmRun>(run.run).domain;
    *out = p.kind == cognitive::PatternKind::FixedPoint ? NEUTRO_PATTERN_FIXED_POINT : NEUTRO_PATTERN_LIMIT_CYCLE;
  });
}

neutro_status neutro_run_iterations(const neutro_run* r, size_t* out) {
  return guard([&] {
    need_out(out);
    const auto& run = need(r, "run");
    if (const auto* cm = std::get_if<cognitive::CmRun>(&run.run))
      *out = cm->iterations();
    else
      *out = std::get<cognitive::RmRun>(run.run).domain_trajectory.size() - 1;
  });
}

neutro_status neutro_run_state(const neutro_run* r, neutro_side side, char** out) {
  return guard([&] {
    need_out(out);
    const auto& run = need(r, "run");
    const cognitive::HiddenPattern* p = nullptr;
    if (const auto* cm = std::get_if<cognitive::CmRun>(&run.run)) {
      p = &cm->pattern;
    } else {
      const auto& rm = std::get<cognitive::RmRun>(run.run);
      p = side == NEUTRO_SIDE_RANGE ? &rm.range : &rm.domain;
    }
    *out = dup_string(cognitive::state_to_string(p->states.front()));
  });
}

neutro_status neutro_cm_balance(const neutro_model* m, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::cm_balance_report(concept_of(m, "model"), format_of(fmt)));
  });
}

neutro_status neutro_cm_convertible(const neutro_model* m, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::cm_convertible_report(concept_of(m, "model"), format_of(fmt)));
  });
}

neutro_status neutro_cm_degrade(const neutro_model* m, neutro_model** out) {
  return guard([&] {
    need_out(out);
    model::Model copy = need(m, "model").m;
    copy.payload = cognitive::degrade(concept_of(m, "model"));
    *out = wrap(std::move(copy));
  });
}

neutro_status neutro_cm_sweep(const neutro_model* m, const char* states, unsigned threads, neutro_format fmt,
                              char** out) {
  return guard([&] {
    need_out(out);
    const auto& cm = concept_of(m, "model");
    std::vector<cognitive::State> inputs;
    std::istringstream in{std::string(arg(states, "states"))};
    for (std::string line; std::getline(in, line);) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      inputs.push_back(cognitive::parse_state(line));
    }
    std::optional<std::vector<std::size_t>> clamp = m->m.clamp;
    std::vector<cognitive::CmRun> runs;
    if (clamp) {
      for (const auto& s : inputs) runs.push_back(cognitive::cm_run(cm, s, clamp));
    } else {
      runs = cognitive::cm_sweep(cm, inputs, threads);
    }
    *out = dup_string(app::cm_sweep_report(cm, inputs, runs, format_of(fmt)));
  });
}

neutro_status neutro_link(const neutro_model* const* chain, size_t count, int with_signed,
                          const neutro_model* printed, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    if (count > 0) need(chain, "chain");
    std::vector<NeutroMatrix> mats;
    for (size_t i = 0; i < count; ++i) mats.push_back(app::model_matrix(need(chain[i], "chain entry").m));
    std::optional<NeutroMatrix> p;
    if (printed) p = app::model_matrix(printed->m);
    *out = dup_string(app::link_report(mats, with_signed != 0, p, format_of(fmt)));
  });
}

// ---- values and matrices

neutro_status neutro_value_canonical(const char* token, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(NeutroNumber::parse(arg(token, "token")).to_string());
  });
}

neutro_status neutro_matrix_mul(const char* a, const char* b, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    auto ma = NeutroMatrix::parse(arg(a, "a"));
    auto mb = NeutroMatrix::parse(arg(b, "b"));
    *out = dup_string(app::matrix_product_report(ma, mb, format_of(fmt)));
  });
}

neutro_status neutro_matrix_rank(const char* a, neutro_format fmt, char** out) {
  return guard([&] {
    need_out(out);
    *out = dup_string(app::matrix_rank_report(NeutroMatrix::parse(arg(a, "a")), format_of(fmt)));
  });
}

}  // extern "C"
