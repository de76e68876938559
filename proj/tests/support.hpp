#pragma once

// Generators and brute-force oracles shared by the test binaries. Nothing
// here calls into the algorithms under test beyond the data types.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "neutro/cognitive.hpp"
#include "neutro/core.hpp"
#include "neutro/graph.hpp"
#include "neutro/model.hpp"
#include "neutro/relation.hpp"

namespace neutro::test {

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline model::Model load_fixture(const std::string& name) { return model::parse_model(read_file(fixture_path(name))); }

// ---------------------------------------------------------------------------
// Q(I)

inline Rational random_rational(std::mt19937_64& rng) {
  long long num = static_cast<long long>(rng() % 21) - 10;
  long long den = static_cast<long long>(rng() % 4) + 1;
  return Rational(num, den);
}

inline NeutroNumber random_number(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return NeutroNumber(random_rational(rng));
    case 1: return NeutroNumber(0, random_rational(rng));
    default: return NeutroNumber(random_rational(rng), random_rational(rng));
  }
}

inline NeutroMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::vector<NeutroNumber> e;
  for (std::size_t k = 0; k < r * c; ++k) e.push_back(random_number(rng));
  return NeutroMatrix(r, c, std::move(e));
}

// Product computed componentwise on (a, a + b) over Q, then mapped back.
inline NeutroMatrix split_product(const NeutroMatrix& a, const NeutroMatrix& b) {
  NeutroMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational p = 0, q = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const auto &x = a(i, k), &y = b(k, j);
        p += x.real() * y.real();
        q += (x.real() + x.indet()) * (y.real() + y.indet());
      }
      out(i, j) = NeutroNumber(p, q - p);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Graphs

inline graph::Graph random_simple_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<graph::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return graph::Graph(n, edges);
}

inline graph::Graph random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<graph::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(rng() % v, v);
  return graph::Graph(n, edges);
}

// Number of proper colourings with colours 0..k-1, by exhaustive assignment.
inline std::uint64_t count_colorings(const graph::Graph& g, unsigned k) {
  std::size_t n = g.vertex_count();
  std::vector<unsigned> col(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (const auto& e : g.edges())
        if (col[e.u] == col[e.v]) return;
      ++count;
      return;
    }
    for (unsigned c = 0; c < k; ++c) {
      col[v] = c;
      rec(v + 1);
    }
  };
  if (n == 0) return 1;
  if (k == 0) return 0;
  rec(0);
  return count;
}

// Kirchhoff: any cofactor of the Laplacian, by exact Gaussian elimination.
inline Rational matrix_tree_count(const graph::Graph& g) {
  std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  std::vector<std::vector<Rational>> L(n, std::vector<Rational>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    L[e.u][e.u] += 1;
    L[e.v][e.v] += 1;
    L[e.u][e.v] -= 1;
    L[e.v][e.u] -= 1;
  }
  std::size_t m = n - 1;
  Rational det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && L[piv][c] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != c) {
      std::swap(L[piv], L[c]);
      det = -det;
    }
    det *= L[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      Rational f = L[r][c] / L[c][c];
      for (std::size_t k = c; k < m; ++k) L[r][k] -= f * L[c][k];
    }
  }
  return det;
}

inline bool has_perfect_matching_brute(const graph::Graph& g) {
  std::size_t n = g.vertex_count();
  if (n % 2) return false;
  std::vector<bool> used(n, false);
  std::function<bool()> rec = [&]() -> bool {
    std::size_t u = 0;
    while (u < n && used[u]) ++u;
    if (u == n) return true;
    used[u] = true;
    for (std::size_t v = u + 1; v < n; ++v)
      if (!used[v] && g.has_edge(u, v)) {
        used[v] = true;
        if (rec()) return true;
        used[v] = false;
      }
    used[u] = false;
    return false;
  };
  return rec();
}

// ---------------------------------------------------------------------------
// Relations

inline relation::FuzzyValue random_grade(std::mt19937_64& rng, bool allow_indet) {
  static const Rational levels[] = {0, Rational(1, 5), Rational(1, 2), Rational(4, 5), 1};
  Rational m = levels[rng() % 5];
  if (allow_indet && m != 0 && rng() % 3 == 0) return relation::FuzzyValue::indeterminate(m);
  return relation::FuzzyValue(m);
}

inline std::vector<std::string> labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

inline relation::Relation random_relation(std::mt19937_64& rng, const std::vector<std::string>& rows,
                                          const std::vector<std::string>& cols, bool allow_indet,
                                          bool crisp = false) {
  std::vector<relation::FuzzyValue> v;
  for (std::size_t k = 0; k < rows.size() * cols.size(); ++k) {
    if (crisp)
      v.emplace_back(static_cast<long long>(rng() % 3 == 0));
    else
      v.push_back(random_grade(rng, allow_indet));
  }
  return relation::Relation(rows, cols, v);
}

// Smallest transitive crisp superrelation, as the intersection of every
// transitive relation containing `bits` (n <= 4, bit i*n+j).
inline std::uint32_t crisp_closure_brute(std::uint32_t bits, std::size_t n) {
  auto transitive = [n](std::uint32_t r) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r >> (i * n + j) & 1)
          for (std::size_t k = 0; k < n; ++k)
            if ((r >> (j * n + k) & 1) && !(r >> (i * n + k) & 1)) return false;
    return true;
  };
  std::vector<std::size_t> free;
  for (std::size_t b = 0; b < n * n; ++b)
    if (!(bits >> b & 1)) free.push_back(b);
  std::uint32_t best = (1u << (n * n)) - 1;
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    std::uint32_t r = bits;
    for (std::size_t t = 0; t < free.size(); ++t)
      if (mask >> t & 1) r |= 1u << free[t];
    if (transitive(r)) best &= r;
  }
  return best;
}

// Real-valued fuzzy closure rebuilt from alpha cuts: entry (i, j) is the
// largest alpha whose crisp cut closure contains (i, j).
inline relation::Relation fuzzy_closure_by_cuts(const relation::Relation& r) {
  std::size_t n = r.rows();
  std::set<Rational> alphas;
  for (const auto& v : r.values())
    if (!v.is_zero()) alphas.insert(v.magnitude());
  std::vector<Rational> best(n * n, 0);
  for (const auto& a : alphas) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r(i, j).magnitude() >= a) bits |= 1u << (i * n + j);
    std::uint32_t c = crisp_closure_brute(bits, n);
    for (std::size_t b = 0; b < n * n; ++b)
      if (c >> b & 1) best[b] = std::max(best[b], a);
  }
  std::vector<relation::FuzzyValue> v;
  for (const auto& m : best) v.emplace_back(m);
  return relation::Relation(r.row_labels(), r.col_labels(), v);
}

// ---------------------------------------------------------------------------
// Cognitive maps: plain integer FCM engine for I-free models.

struct PlainFcmResult {
  std::vector<std::vector<int>> trajectory;
  std::vector<std::vector<int>> cycle;
};

inline PlainFcmResult plain_fcm_run(const std::vector<std::vector<int>>& w, std::vector<int> s,
                                    const std::vector<std::size_t>& clamp) {
  std::size_t n = w.size();
  for (auto c : clamp) s[c] = 1;
  PlainFcmResult res;
  res.trajectory.push_back(s);
  while (true) {
    std::vector<int> next(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      int sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += s[i] * w[i][j];
      next[j] = sum > 0 ? 1 : 0;
    }
    for (auto c : clamp) next[c] = 1;
    auto seen = std::find(res.trajectory.begin(), res.trajectory.end(), next) - res.trajectory.begin();
    bool repeated = static_cast<std::size_t>(seen) < res.trajectory.size();
    res.trajectory.push_back(next);
    if (repeated) {
      res.cycle.assign(res.trajectory.begin() + seen, res.trajectory.end() - 1);
      return res;
    }
    s = next;
  }
}

inline std::vector<std::vector<int>> integer_weights(const NeutroMatrix& m) {
  std::vector<std::vector<int>> w(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w[i][j] = static_cast<int>(m(i, j).real());
  return w;
}

inline cognitive::State to_state(const std::vector<int>& v) {
  cognitive::State s;
  for (int x : v) s.push_back(x ? cognitive::Activation::On : cognitive::Activation::Off);
  return s;
}

// One synchronous update with clamping, evaluated over Q(I) from the
// definitions: raw = sum s_i * w_ij, then a > 0 -> 1, a = 0 < b -> I.
inline cognitive::State step_oracle(const NeutroMatrix& w, const cognitive::State& s,
                                    const std::vector<std::size_t>& clamp) {
  cognitive::State out(w.cols(), cognitive::Activation::Off);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    Rational a = 0, b = 0;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (s[i] == cognitive::Activation::Off) continue;
      const auto& x = w(i, j);
      if (s[i] == cognitive::Activation::On) {
        a += x.real();
        b += x.indet();
      } else {
        b += x.real() + x.indet();
      }
    }
    if (a > 0)
      out[j] = cognitive::Activation::On;
    else if (a == 0 && b > 0)
      out[j] = cognitive::Activation::Indeterminate;
  }
  for (auto c : clamp) out[c] = cognitive::Activation::On;
  return out;
}

inline const char* concept_fixtures[] = {
    "childlabor-fcm.model", "childlabor-ncm.model", "childlabor-expert2-fcm.model", "childlabor-expert2-ncm.model",
    "hacking-ncm.model",    "transit-fcm.model",    "web-ncm.model",
};

}  // namespace neutro::test
