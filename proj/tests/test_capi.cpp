#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>

#include "neutro/neutro.h"

namespace {

std::string fixture(const char* name) { return std::string(FIXTURE_DIR) + "/" + name; }

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  neutro_string_free(s);
  return out;
}

struct ModelPtr {
  neutro_model* p = nullptr;
  ~ModelPtr() { neutro_model_free(p); }
};

struct RunPtr {
  neutro_run* p = nullptr;
  ~RunPtr() { neutro_run_free(p); }
};

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(neutro_version()).size() > 0);
  CHECK(std::string(neutro_status_name(NEUTRO_OK)) == "ok");
  CHECK(std::string(neutro_status_name(NEUTRO_E_PARSE)) == "parse");
  CHECK(std::string(neutro_status_name(NEUTRO_E_NULL)) == "null");
}

TEST_CASE("null arguments are reported, not dereferenced") {
  char* out = nullptr;
  CHECK(neutro_value_canonical(nullptr, &out) == NEUTRO_E_NULL);
  CHECK(neutro_value_canonical("1", nullptr) == NEUTRO_E_NULL);
  CHECK(std::string(neutro_last_error()).size() > 0);
  CHECK(neutro_model_serialize(nullptr, &out) == NEUTRO_E_NULL);
  CHECK(out == nullptr);
  neutro_model_free(nullptr);
  neutro_run_free(nullptr);
  neutro_string_free(nullptr);
}

TEST_CASE("values and matrices") {
  char* out = nullptr;
  REQUIRE(neutro_value_canonical(" -6I+2 ", &out) == NEUTRO_E_PARSE);
  REQUIRE(neutro_value_canonical("2-6I", &out) == NEUTRO_OK);
  CHECK(take(out) == "2-6I");

  REQUIRE(neutro_matrix_mul("-1, 2, -I\n3, I, 0\n", "I, 1, 2, 4\n1, I, 0, 2\n5, -2, 3I, -I\n", NEUTRO_FORMAT_STRUCTURED,
                            &out) == NEUTRO_OK);
  auto text = take(out);
  CHECK(text.find("product.row1=2-6I -1+4I -2-3I I") != std::string::npos);
  CHECK(text.find("product.row2=4I 3+I 6 12+2I") != std::string::npos);

  CHECK(neutro_matrix_mul("1, 2\n", "1, 2\n", NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_E_SHAPE);
  CHECK(std::string(neutro_last_error()).find("1x2") != std::string::npos);

  REQUIRE(neutro_matrix_rank("1, I\nI, 1\n", NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_OK);
  CHECK(take(out).find("invertible: no") != std::string::npos);
}

TEST_CASE("loading models") {
  ModelPtr m;
  REQUIRE(neutro_model_load_file(fixture("childlabor-ncm.model").c_str(), NEUTRO_KIND_ANY, &m.p) == NEUTRO_OK);
  neutro_kind kind;
  REQUIRE(neutro_model_kind(m.p, &kind) == NEUTRO_OK);
  CHECK(kind == NEUTRO_KIND_CONCEPT_MODEL);

  char* out = nullptr;
  REQUIRE(neutro_model_serialize(m.p, &out) == NEUTRO_OK);
  auto text = take(out);
  ModelPtr again;
  REQUIRE(neutro_model_load_text(text.c_str(), NEUTRO_KIND_ANY, &again.p) == NEUTRO_OK);
  REQUIRE(neutro_model_serialize(again.p, &out) == NEUTRO_OK);
  CHECK(take(out) == text);

  neutro_model* missing = nullptr;
  CHECK(neutro_model_load_file("/nonexistent/file.model", NEUTRO_KIND_ANY, &missing) == NEUTRO_E_NOT_FOUND);
  CHECK(missing == nullptr);
  CHECK(neutro_model_load_text("0, 1\n1, 0\n", NEUTRO_KIND_ANY, &missing) == NEUTRO_E_PARSE);
  ModelPtr raw;
  CHECK(neutro_model_load_text("0, 1\n1, 0\n", NEUTRO_KIND_CONCEPT_MODEL, &raw.p) == NEUTRO_OK);
  ModelPtr csv;
  CHECK(neutro_model_load_csv("A, B\n0, 1\nI, 0\n", NEUTRO_KIND_CONCEPT_MODEL, &csv.p) == NEUTRO_OK);
  CHECK(neutro_model_load_csv("0 1\n", NEUTRO_KIND_GRAPH, &missing) == NEUTRO_E_DOMAIN);
}

TEST_CASE("kind mismatches are domain errors") {
  ModelPtr g;
  REQUIRE(neutro_graph_generate("petersen", &g.p) == NEUTRO_OK);
  RunPtr run;
  CHECK(neutro_cm_run(g.p, "1", nullptr, nullptr, 0, &run.p) == NEUTRO_E_DOMAIN);
  CHECK(std::string(neutro_last_error()).find("expected a concept-model") != std::string::npos);
}

TEST_CASE("graph analysis through the interface") {
  ModelPtr g;
  REQUIRE(neutro_graph_generate("petersen", &g.p) == NEUTRO_OK);
  char* out = nullptr;
  REQUIRE(neutro_graph_analyze(g.p, NEUTRO_GRAPH_COLORING | NEUTRO_GRAPH_METRICS, 20240611, 20,
                               NEUTRO_FORMAT_STRUCTURED, &out) == NEUTRO_OK);
  auto text = take(out);
  CHECK(text.find("chromatic_number=3") != std::string::npos);
  CHECK(text.find("chromatic_index=4") != std::string::npos);
  CHECK(text.find("girth=5") != std::string::npos);

  ModelPtr line;
  REQUIRE(neutro_graph_transform(g.p, "line", &line.p) == NEUTRO_OK);
  CHECK(neutro_graph_transform(g.p, "square", &line.p) == NEUTRO_E_USAGE);
  neutro_model* bad = nullptr;
  CHECK(neutro_graph_generate("complete:x", &bad) == NEUTRO_E_PARSE);
}

TEST_CASE("cognitive runs through the interface") {
  ModelPtr m;
  REQUIRE(neutro_model_load_file(fixture("childlabor-ncm.model").c_str(), NEUTRO_KIND_ANY, &m.p) == NEUTRO_OK);
  RunPtr run;
  REQUIRE(neutro_cm_run(m.p, "C1", nullptr, nullptr, 0, &run.p) == NEUTRO_OK);
  neutro_pattern pattern;
  REQUIRE(neutro_run_pattern(run.p, &pattern) == NEUTRO_OK);
  CHECK(pattern == NEUTRO_PATTERN_FIXED_POINT);
  size_t iterations = 0;
  REQUIRE(neutro_run_iterations(run.p, &iterations) == NEUTRO_OK);
  CHECK(iterations <= 3);
  char* out = nullptr;
  REQUIRE(neutro_run_state(run.p, NEUTRO_SIDE_DOMAIN, &out) == NEUTRO_OK);
  CHECK(take(out) == "1 I 0 1 1 0 0");
  REQUIRE(neutro_run_report(run.p, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_OK);
  CHECK(take(out).find("hidden pattern: fixed point 1 I 0 1 1 0 0") != std::string::npos);

  RunPtr both;
  CHECK(neutro_cm_run(m.p, "C1", "1 0 0 0 0 0 0", nullptr, 0, &both.p) == NEUTRO_E_USAGE);
  CHECK(neutro_cm_run(m.p, nullptr, nullptr, nullptr, 0, &both.p) == NEUTRO_E_USAGE);
  CHECK(neutro_cm_run(m.p, "C42", nullptr, nullptr, 0, &both.p) == NEUTRO_E_NOT_FOUND);
  CHECK(neutro_cm_run(m.p, nullptr, "1 0", nullptr, 0, &both.p) == NEUTRO_E_SHAPE);

  REQUIRE(neutro_cm_sweep(m.p, "1 0 0 0 0 0 0\n0 1 0 0 0 0 0\n", 2, NEUTRO_FORMAT_STRUCTURED, &out) == NEUTRO_OK);
  CHECK(take(out).size() > 0);
  REQUIRE(neutro_cm_convertible(m.p, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_OK);
  CHECK(take(out).find("convertible: no") != std::string::npos);
}

TEST_CASE("relational runs and linking") {
  ModelPtr rm;
  REQUIRE(neutro_model_load_file(fixture("employer-frm.model").c_str(), NEUTRO_KIND_ANY, &rm.p) == NEUTRO_OK);
  RunPtr run;
  REQUIRE(neutro_rm_run(rm.p, NEUTRO_SIDE_DOMAIN, "D1", nullptr, nullptr, &run.p) == NEUTRO_OK);
  char* out = nullptr;
  REQUIRE(neutro_run_state(run.p, NEUTRO_SIDE_RANGE, &out) == NEUTRO_OK);
  CHECK(take(out) == "0 0 0 0 1");

  ModelPtr a, b, printed;
  REQUIRE(neutro_model_load_file(fixture("linked-cg.model").c_str(), NEUTRO_KIND_ANY, &a.p) == NEUTRO_OK);
  REQUIRE(neutro_model_load_file(fixture("linked-cp.model").c_str(), NEUTRO_KIND_ANY, &b.p) == NEUTRO_OK);
  REQUIRE(neutro_model_load_file(fixture("linked-gp-printed.model").c_str(), NEUTRO_KIND_ANY, &printed.p) ==
          NEUTRO_OK);
  const neutro_model* chain[] = {a.p, b.p};
  REQUIRE(neutro_link(chain, 2, 1, printed.p, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_OK);
  auto text = take(out);
  CHECK(text.find("shape: 4x5") != std::string::npos);
  CHECK(text.find("of 20 signed entries agree") != std::string::npos);
  CHECK(neutro_link(chain, 1, 0, nullptr, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_E_DOMAIN);
}

TEST_CASE("relations through the interface") {
  ModelPtr r, q;
  REQUIRE(neutro_model_load_file(fixture("hom-r.model").c_str(), NEUTRO_KIND_ANY, &r.p) == NEUTRO_OK);
  REQUIRE(neutro_model_load_file(fixture("hom-q.model").c_str(), NEUTRO_KIND_ANY, &q.p) == NEUTRO_OK);
  char* out = nullptr;
  REQUIRE(neutro_rel_homomorphism(r.p, q.p, "a=alpha, b=beta, c=gamma, d=delta", 1, NEUTRO_FORMAT_STRUCTURED, &out) ==
          NEUTRO_OK);
  CHECK(take(out).find("holds=true") != std::string::npos);
  CHECK(neutro_rel_homomorphism(r.p, q.p, "a=alpha", 0, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_E_NOT_FOUND);
  CHECK(neutro_rel_properties(r.p, "2", NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_E_DOMAIN);

  ModelPtr closed;
  REQUIRE(neutro_rel_closure(r.p, &closed.p) == NEUTRO_OK);
  REQUIRE(neutro_rel_properties(closed.p, nullptr, NEUTRO_FORMAT_PLAIN, &out) == NEUTRO_OK);
  CHECK(take(out).find("transitive: true") != std::string::npos);
}

TEST_CASE("last error is per thread") {
  char* out = nullptr;
  CHECK(neutro_value_canonical("bad", &out) == NEUTRO_E_PARSE);
  std::string other;
  std::thread t([&] { other = neutro_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(neutro_last_error()).size() > 0);
}
