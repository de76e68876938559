// neutro: command-line front end over the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "neutro/neutro.h"

namespace {

struct Failure {
  neutro_status status;
};

void check(neutro_status s) {
  if (s != NEUTRO_OK) throw Failure{s};
}

struct ModelDeleter {
  void operator()(neutro_model* m) const { neutro_model_free(m); }
};
using ModelPtr = std::unique_ptr<neutro_model, ModelDeleter>;

struct RunDeleter {
  void operator()(neutro_run* r) const { neutro_run_free(r); }
};
using RunPtr = std::unique_ptr<neutro_run, RunDeleter>;

std::string take(char* s) {
  std::string out(s);
  neutro_string_free(s);
  return out;
}

void print(char* s) { std::cout << take(s); }

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "neutro: not-found error: cannot open '" << path << "'\n";
    throw Failure{NEUTRO_E_NOT_FOUND};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelPtr load(const std::string& path, neutro_kind hint, bool csv = false) {
  std::string text = read_text(path);
  neutro_model* m = nullptr;
  check(csv ? neutro_model_load_csv(text.c_str(), hint, &m) : neutro_model_load_text(text.c_str(), hint, &m));
  return ModelPtr(m);
}

bool readable(const std::string& path) {
  if (path == "-") return true;
  std::ifstream in(path);
  return static_cast<bool>(in);
}

/// A file path, or a family name such as "petersen" or "complete:4".
ModelPtr load_graph(const std::string& arg) {
  if (readable(arg)) return load(arg, NEUTRO_KIND_GRAPH);
  neutro_model* m = nullptr;
  if (neutro_graph_generate(arg.c_str(), &m) == NEUTRO_OK) return ModelPtr(m);
  return load(arg, NEUTRO_KIND_GRAPH);
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neutrosophic graphs, relations and cognitive maps"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "plain";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"plain", "structured"}));
  app.set_version_flag("--version", std::string(neutro_version()));

  std::function<void()> action;
  auto fmt = [&] { return format == "structured" ? NEUTRO_FORMAT_STRUCTURED : NEUTRO_FORMAT_PLAIN; };

  // ---- graph
  auto* graph = app.add_subcommand("graph", "Classical graph algorithms");
  graph->require_subcommand(1);
  {
    auto* analyze = graph->add_subcommand("analyze", "Invariants of a graph file or named family");
    static std::string input;
    static std::uint64_t seed = 20240611ULL;
    static unsigned reps = 20;
    static bool degrees, connectivity, metrics, bipartite, euler, hamilton, coloring, polynomial, spanning, tutte;
    analyze->add_option("graph", input, "Edge-list file, model file, '-' or a family like petersen, complete:4")
        ->required();
    analyze->add_flag("--degrees", degrees);
    analyze->add_flag("--connectivity", connectivity);
    analyze->add_flag("--metrics", metrics);
    analyze->add_flag("--bipartite", bipartite);
    analyze->add_flag("--euler", euler);
    analyze->add_flag("--hamilton", hamilton);
    analyze->add_flag("--coloring", coloring);
    analyze->add_flag("--polynomial", polynomial);
    analyze->add_flag("--spanning-trees", spanning);
    analyze->add_flag("--tutte", tutte);
    analyze->add_option("--seed", seed, "Seed of the randomised 1-factor test")->capture_default_str();
    analyze->add_option("--reps", reps, "Repetitions of the 1-factor test")->capture_default_str();
    analyze->callback([&] {
      action = [&] {
        unsigned sections = (degrees ? NEUTRO_GRAPH_DEGREES : 0) | (connectivity ? NEUTRO_GRAPH_CONNECTIVITY : 0) |
                            (metrics ? NEUTRO_GRAPH_METRICS : 0) | (bipartite ? NEUTRO_GRAPH_BIPARTITE : 0) |
                            (euler ? NEUTRO_GRAPH_EULER : 0) | (hamilton ? NEUTRO_GRAPH_HAMILTON : 0) |
                            (coloring ? NEUTRO_GRAPH_COLORING : 0) | (polynomial ? NEUTRO_GRAPH_POLYNOMIAL : 0) |
                            (spanning ? NEUTRO_GRAPH_SPANNING_TREES : 0) | (tutte ? NEUTRO_GRAPH_TUTTE : 0);
        if (sections == 0) sections = NEUTRO_GRAPH_ALL;
        auto g = load_graph(input);
        char* out = nullptr;
        check(neutro_graph_analyze(g.get(), sections, seed, reps, fmt(), &out));
        print(out);
      };
    });

    auto* generate = graph->add_subcommand("generate", "Write a named family as a model file");
    static std::string family;
    generate->add_option("family", family)->required();
    generate->callback([&] {
      action = [&] {
        neutro_model* m = nullptr;
        check(neutro_graph_generate(family.c_str(), &m));
        ModelPtr g(m);
        char* out = nullptr;
        check(neutro_model_serialize(g.get(), &out));
        print(out);
      };
    });

    auto* transform = graph->add_subcommand("transform", "Complement, line graph or closure");
    static std::string op, tin;
    transform->add_option("op", op)->required()->check(CLI::IsMember({"complement", "line", "closure"}));
    transform->add_option("graph", tin)->required();
    transform->callback([&] {
      action = [&] {
        auto g = load_graph(tin);
        neutro_model* m = nullptr;
        check(neutro_graph_transform(g.get(), op.c_str(), &m));
        ModelPtr r(m);
        char* out = nullptr;
        check(neutro_model_serialize(r.get(), &out));
        print(out);
      };
    });
  }

  // ---- ngraph
  auto* ngraph = app.add_subcommand("ngraph", "Neutrosophic graphs");
  ngraph->require_subcommand(1);
  {
    static std::string input;
    auto report = [&](const char* name, const char* help, unsigned sections) {
      auto* sub = ngraph->add_subcommand(name, help);
      sub->add_option("graph", input, "Neutrosophic graph file or '-'")->required();
      sub->callback([&, sections] {
        action = [&, sections] {
          auto g = load(input, NEUTRO_KIND_NEUTRO_GRAPH);
          char* out = nullptr;
          check(neutro_ngraph_report(g.get(), sections, fmt(), &out));
          print(out);
        };
      });
    };
    report("classify", "Plain, vertex-, edge- or strong neutrosophic", NEUTRO_NGRAPH_CLASSIFY);
    report("color", "Neutrosophic vertex and edge colourings", NEUTRO_NGRAPH_COLORING);
    report("adjacency", "{0, 1, I} adjacency matrix", NEUTRO_NGRAPH_ADJACENCY);
    report("analyze", "Every neutrosophic graph report", NEUTRO_NGRAPH_ALL);

    auto* petersen = ngraph->add_subcommand("petersen", "Neutrosophic Petersen graph");
    static std::string kind = "edge";
    static std::size_t vk = 0, ek = 0;
    static bool show_report = false;
    petersen->add_option("kind", kind)->check(CLI::IsMember({"vertex", "edge", "strong"}))->capture_default_str();
    petersen->add_option("--vertices", vk, "Number of indeterminate vertices")->capture_default_str();
    petersen->add_option("--edges", ek, "Number of indeterminate edges")->capture_default_str();
    petersen->add_flag("--report", show_report, "Print the analysis instead of the model file");
    petersen->callback([&] {
      action = [&] {
        neutro_model* m = nullptr;
        check(neutro_ngraph_petersen(kind.c_str(), vk, ek, &m));
        ModelPtr g(m);
        char* out = nullptr;
        if (show_report)
          check(neutro_ngraph_report(g.get(), NEUTRO_NGRAPH_ALL, fmt(), &out));
        else
          check(neutro_model_serialize(g.get(), &out));
        print(out);
      };
    });

    auto* walk = ngraph->add_subcommand("walk", "Classify a walk given by vertex names");
    static std::string win, wtext;
    walk->add_option("graph", win)->required();
    walk->add_option("walk", wtext, "Vertex names, e.g. \"v1 N1 v2\"")->required();
    walk->callback([&] {
      action = [&] {
        auto g = load(win, NEUTRO_KIND_NEUTRO_GRAPH);
        char* out = nullptr;
        check(neutro_ngraph_walk(g.get(), wtext.c_str(), fmt(), &out));
        print(out);
      };
    });

    auto* iso = ngraph->add_subcommand("iso", "Isomorphism preserving vertex and edge kinds");
    static std::string ia, ib;
    iso->add_option("first", ia)->required();
    iso->add_option("second", ib)->required();
    iso->callback([&] {
      action = [&] {
        auto a = load(ia, NEUTRO_KIND_NEUTRO_GRAPH);
        auto b = load(ib, NEUTRO_KIND_NEUTRO_GRAPH);
        char* out = nullptr;
        check(neutro_ngraph_isomorphic(a.get(), b.get(), fmt(), &out));
        print(out);
      };
    });
  }

  // ---- rel
  auto* rel = app.add_subcommand("rel", "Fuzzy and neutrosophic relations");
  rel->require_subcommand(1);
  {
    static std::string p, q, epsilon, mapping;
    static bool as_model = false, strong = false;
    static auto emit_relation = [&](neutro_model* raw) {
      ModelPtr r(raw);
      char* out = nullptr;
      check(as_model ? neutro_model_serialize(r.get(), &out) : neutro_rel_report(r.get(), fmt(), &out));
      print(out);
    };

    auto* compose = rel->add_subcommand("compose", "Max-min composition P o Q");
    compose->add_option("p", p)->required();
    compose->add_option("q", q)->required();
    compose->add_flag("--model", as_model, "Print the result as a model file");
    compose->callback([&] {
      action = [&] {
        auto a = load(p, NEUTRO_KIND_RELATION), b = load(q, NEUTRO_KIND_RELATION);
        neutro_model* r = nullptr;
        check(neutro_rel_compose(a.get(), b.get(), &r));
        emit_relation(r);
      };
    });

    auto unary = [&](const char* name, const char* help, neutro_status (*fn)(const neutro_model*, neutro_model**)) {
      auto* sub = rel->add_subcommand(name, help);
      sub->add_option("relation", p)->required();
      sub->add_flag("--model", as_model, "Print the result as a model file");
      sub->callback([&, fn] {
        action = [&, fn] {
          auto a = load(p, NEUTRO_KIND_RELATION);
          neutro_model* r = nullptr;
          check(fn(a.get(), &r));
          emit_relation(r);
        };
      });
    };
    unary("closure", "Transitive closure", neutro_rel_closure);
    unary("inverse", "Inverse relation", neutro_rel_inverse);

    auto* props = rel->add_subcommand("props", "Three-valued relation properties");
    props->add_option("relation", p)->required();
    props->add_option("--epsilon", epsilon, "Threshold of epsilon-reflexivity (default 1/2)");
    props->callback([&] {
      action = [&] {
        auto a = load(p, NEUTRO_KIND_RELATION);
        char* out = nullptr;
        check(neutro_rel_properties(a.get(), opt(epsilon), fmt(), &out));
        print(out);
      };
    });

    auto* summary = rel->add_subcommand("summary", "Domain, range and height");
    summary->add_option("relation", p)->required();
    summary->callback([&] {
      action = [&] {
        auto a = load(p, NEUTRO_KIND_RELATION);
        char* out = nullptr;
        check(neutro_rel_summary(a.get(), fmt(), &out));
        print(out);
      };
    });

    auto* join = rel->add_subcommand("join", "Relational join and its projection");
    join->add_option("p", p)->required();
    join->add_option("q", q)->required();
    join->callback([&] {
      action = [&] {
        auto a = load(p, NEUTRO_KIND_RELATION), b = load(q, NEUTRO_KIND_RELATION);
        char* out = nullptr;
        check(neutro_rel_join(a.get(), b.get(), fmt(), &out));
        print(out);
      };
    });

    auto* hom = rel->add_subcommand("hom", "Check a homomorphism between square relations");
    hom->add_option("r", p)->required();
    hom->add_option("q", q)->required();
    hom->add_option("--map", mapping, "Pairs like \"a=alpha, b=beta\"")->required();
    hom->add_flag("--strong", strong);
    hom->callback([&] {
      action = [&] {
        auto a = load(p, NEUTRO_KIND_RELATION), b = load(q, NEUTRO_KIND_RELATION);
        char* out = nullptr;
        check(neutro_rel_homomorphism(a.get(), b.get(), mapping.c_str(), strong ? 1 : 0, fmt(), &out));
        print(out);
      };
    });
  }

  // ---- cm
  auto* cm = app.add_subcommand("cm", "Fuzzy and neutrosophic cognitive maps");
  cm->require_subcommand(1);
  {
    static std::string input, on, state, clamp, states_file;
    static bool degrade = false, from_csv = false;
    static unsigned threads = 0;
    static auto load_cm = [&] { return load(input, NEUTRO_KIND_CONCEPT_MODEL, from_csv); };

    auto* run = cm->add_subcommand("run", "Iterate a state vector to its hidden pattern");
    run->add_option("model", input)->required();
    auto* on_opt = run->add_option("--on", on, "Concepts switched on at the start, e.g. C1,C4");
    run->add_option("--state", state, "Full initial vector, e.g. \"1 0 I 0\"")->excludes(on_opt);
    run->add_option("--clamp", clamp, "Concepts held on after every step");
    run->add_flag("--degrade", degrade, "Replace every I by 0 first");
    run->add_flag("--from-csv", from_csv, "Read the model as a matrix CSV");
    run->callback([&] {
      action = [&] {
        auto m = load_cm();
        neutro_run* r = nullptr;
        check(neutro_cm_run(m.get(), opt(on), opt(state), opt(clamp), degrade ? 1 : 0, &r));
        RunPtr rp(r);
        char* out = nullptr;
        check(neutro_run_report(rp.get(), fmt(), &out));
        print(out);
      };
    });

    auto simple = [&](const char* name, const char* help,
                      neutro_status (*fn)(const neutro_model*, neutro_format, char**)) {
      auto* sub = cm->add_subcommand(name, help);
      sub->add_option("model", input)->required();
      sub->add_flag("--degrade", degrade, "Replace every I by 0 first");
      sub->add_flag("--from-csv", from_csv, "Read the model as a matrix CSV");
      sub->callback([&, fn] {
        action = [&, fn] {
          auto m = load_cm();
          if (degrade) {
            neutro_model* d = nullptr;
            check(neutro_cm_degrade(m.get(), &d));
            m.reset(d);
          }
          char* out = nullptr;
          check(fn(m.get(), fmt(), &out));
          print(out);
        };
      });
    };
    simple("balance", "Look for conflicting causal paths", neutro_cm_balance);
    simple("convertible", "Can the map be split into domain and range spaces", neutro_cm_convertible);

    auto* sweep = cm->add_subcommand("sweep", "Run many initial vectors, one per line");
    sweep->add_option("model", input)->required();
    sweep->add_option("states", states_file, "File of state vectors or '-'")->required();
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");
    sweep->add_flag("--degrade", degrade, "Replace every I by 0 first");
    sweep->add_flag("--from-csv", from_csv, "Read the model as a matrix CSV");
    sweep->callback([&] {
      action = [&] {
        auto m = load_cm();
        if (degrade) {
          neutro_model* d = nullptr;
          check(neutro_cm_degrade(m.get(), &d));
          m.reset(d);
        }
        std::string states = read_text(states_file);
        char* out = nullptr;
        check(neutro_cm_sweep(m.get(), states.c_str(), threads, fmt(), &out));
        print(out);
      };
    });

    auto* degr = cm->add_subcommand("degrade", "Print the model with every I replaced by 0");
    degr->add_option("model", input)->required();
    degr->add_flag("--from-csv", from_csv, "Read the model as a matrix CSV");
    degr->callback([&] {
      action = [&] {
        auto m = load_cm();
        neutro_model* d = nullptr;
        check(neutro_cm_degrade(m.get(), &d));
        ModelPtr dp(d);
        char* out = nullptr;
        check(neutro_model_serialize(dp.get(), &out));
        print(out);
      };
    });
  }

  // ---- rm
  auto* rm = app.add_subcommand("rm", "Fuzzy and neutrosophic relational maps");
  rm->require_subcommand(1);
  {
    static std::string input, side = "domain", on, state, clamp;
    static bool from_csv = false;
    auto* run = rm->add_subcommand("run", "Iterate between domain and range spaces");
    run->add_option("model", input)->required();
    run->add_option("--side", side, "Space of the initial vector")
        ->check(CLI::IsMember({"domain", "range"}))
        ->capture_default_str();
    auto* on_opt = run->add_option("--on", on, "Concepts on at the start");
    run->add_option("--state", state, "Full initial vector")->excludes(on_opt);
    run->add_option("--clamp", clamp, "Concepts held on after every step");
    run->add_flag("--from-csv", from_csv, "Read the model as a matrix CSV");
    run->callback([&] {
      action = [&] {
        auto m = load(input, NEUTRO_KIND_RELATIONAL_MODEL, from_csv);
        neutro_run* r = nullptr;
        check(neutro_rm_run(m.get(), side == "range" ? NEUTRO_SIDE_RANGE : NEUTRO_SIDE_DOMAIN, opt(on), opt(state),
                            opt(clamp), &r));
        RunPtr rp(r);
        char* out = nullptr;
        check(neutro_run_report(rp.get(), fmt(), &out));
        print(out);
      };
    });
  }

  // ---- link
  auto* link = app.add_subcommand("link", "Linked product of relational maps");
  {
    static std::vector<std::string> inputs;
    static std::string compare;
    static bool with_signed = false;
    link->add_option("models", inputs, "Two or more relational or concept models")->required();
    link->add_flag("--signed", with_signed, "Also show the sign-thresholded product");
    link->add_option("--compare", compare, "Matrix to diff the signed product against");
    link->callback([&] {
      action = [&] {
        std::vector<ModelPtr> models;
        std::vector<const neutro_model*> raw;
        for (const auto& path : inputs) {
          models.push_back(load(path, NEUTRO_KIND_RELATIONAL_MODEL));
          raw.push_back(models.back().get());
        }
        ModelPtr printed;
        if (!compare.empty()) printed = load(compare, NEUTRO_KIND_RELATIONAL_MODEL);
        char* out = nullptr;
        check(neutro_link(raw.data(), raw.size(), with_signed ? 1 : 0, printed.get(), fmt(), &out));
        print(out);
      };
    });
  }

  // ---- export
  auto* exp = app.add_subcommand("export", "Convert models to other formats");
  exp->require_subcommand(1);
  {
    static std::string input, kind;
    auto* dot = exp->add_subcommand("dot", "Graphviz rendering");
    dot->add_option("model", input)->required();
    dot->add_option("--kind", kind, "Kind of raw input without a model header")
        ->check(CLI::IsMember({"graph", "neutro-graph", "relation", "concept-model", "relational-model"}));
    dot->callback([&] {
      action = [&] {
        neutro_kind k = NEUTRO_KIND_ANY;
        const char* names[] = {"graph", "neutro-graph", "relation", "concept-model", "relational-model"};
        for (int i = 0; i < 5; ++i)
          if (kind == names[i]) k = static_cast<neutro_kind>(i + 1);
        auto m = load(input, k);
        char* out = nullptr;
        check(neutro_model_export_dot(m.get(), &out));
        print(out);
      };
    });
  }

  // ---- matrix / value
  auto* matrix = app.add_subcommand("matrix", "Neutrosophic matrix arithmetic");
  matrix->require_subcommand(1);
  {
    static std::string a, b;
    auto* mul = matrix->add_subcommand("mul", "Product A B");
    mul->add_option("a", a)->required();
    mul->add_option("b", b)->required();
    mul->callback([&] {
      action = [&] {
        std::string ta = read_text(a), tb = read_text(b);
        char* out = nullptr;
        check(neutro_matrix_mul(ta.c_str(), tb.c_str(), fmt(), &out));
        print(out);
      };
    });
    auto* rank = matrix->add_subcommand("rank", "Ranks of the split components");
    rank->add_option("a", a)->required();
    rank->callback([&] {
      action = [&] {
        std::string ta = read_text(a);
        char* out = nullptr;
        check(neutro_matrix_rank(ta.c_str(), fmt(), &out));
        print(out);
      };
    });
  }
  auto* value = app.add_subcommand("value", "Canonical form of a value such as -1+4I");
  {
    static std::string token;
    value->add_option("token", token)->required();
    value->callback([&] {
      action = [&] {
        char* out = nullptr;
        check(neutro_value_canonical(token.c_str(), &out));
        std::cout << take(out) << "\n";
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "neutro: usage error: " << e.what() << "\n";
    return NEUTRO_E_USAGE;
  }

  try {
    if (action) action();
  } catch (const Failure& f) {
    const char* msg = neutro_last_error();
    if (*msg) std::cerr << "neutro: " << neutro_status_name(f.status) << " error: " << msg << "\n";
    return f.status;
  }
  return 0;
}
