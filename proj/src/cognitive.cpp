#include "neutro/cognitive.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "neutro/error.hpp"
#include "neutro/graph.hpp"
#include "text_util.hpp"

namespace neutro::cognitive {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("C" + std::to_string(i + 1));
  return names;
}

void check_names(const std::vector<std::string>& names, std::string_view what) {
  for (const auto& n : names)
    if (n.empty() || n.find_first_of(", \t\r\n#") != std::string::npos)
      throw DomainError(std::string(what) + " name '" + n + "' is empty or contains a separator");
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw DomainError("duplicate " + std::string(what) + " name '" + *dup + "'");
}

std::size_t find_name(const std::vector<std::string>& names, std::string_view name, std::string_view what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
  // 1-based positions are accepted when no concept carries that name.
  std::size_t pos = 0;
  bool digits = !name.empty();
  for (char c : name) {
    if (c < '0' || c > '9') {
      digits = false;
      break;
    }
    pos = pos * 10 + static_cast<std::size_t>(c - '0');
  }
  if (digits && pos >= 1 && pos <= names.size()) return pos - 1;
  throw NotFoundError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

/// s * M thresholded, recording mixed raw values.
State step(const State& s, const NeutroMatrix& m, std::size_t step_index, std::size_t note_offset,
           std::vector<ThresholdNote>& notes) {
  std::vector<NeutroNumber> v;
  v.reserve(s.size());
  for (Activation a : s) v.push_back(activation_value(a));
  auto raw = row_times(v, m);
  State out(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    out[j] = threshold(raw[j]);
    if (raw[j].real() != 0 && raw[j].indet() != 0) notes.push_back({step_index, note_offset + j, raw[j], out[j]});
  }
  return out;
}

void apply_clamp(State& s, const std::vector<std::size_t>& clamp) {
  for (std::size_t i : clamp) s[i] = Activation::On;
}

std::vector<std::size_t> default_clamp(const State& s0) {
  std::vector<std::size_t> clamp;
  for (std::size_t i = 0; i < s0.size(); ++i)
    if (s0[i] == Activation::On) clamp.push_back(i);
  return clamp;
}

void check_clamp(const std::vector<std::size_t>& clamp, std::size_t n) {
  for (std::size_t i : clamp)
    if (i >= n) throw NotFoundError("clamp index " + std::to_string(i + 1) + " exceeds " + std::to_string(n));
}

HiddenPattern pattern_from(const std::vector<State>& cycle_states, std::size_t entry) {
  HiddenPattern p;
  p.steps_to_enter = entry;
  const bool constant =
      std::all_of(cycle_states.begin(), cycle_states.end(), [&](const State& s) { return s == cycle_states.front(); });
  if (constant) {
    p.kind = PatternKind::FixedPoint;
    p.states = {cycle_states.front()};
  } else {
    p.kind = PatternKind::LimitCycle;
    p.states = cycle_states;
  }
  return p;
}

std::size_t step_bound(std::size_t n) {
  // 3^n + 1, saturated.
  std::size_t bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (bound > (static_cast<std::size_t>(-1) - 1) / 3) return static_cast<std::size_t>(-1);
    bound *= 3;
  }
  return bound + 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Activations

char activation_char(Activation a) noexcept {
  switch (a) {
    case Activation::Off: return '0';
    case Activation::On: return '1';
    case Activation::Indeterminate: return 'I';
  }
  return '?';
}

NeutroNumber activation_value(Activation a) {
  switch (a) {
    case Activation::Off: return 0;
    case Activation::On: return 1;
    case Activation::Indeterminate: return NeutroNumber::indeterminate();
  }
  return 0;
}

std::string state_to_string(const State& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += activation_char(s[i]);
  }
  return out;
}

State parse_state(std::string_view text) {
  std::string copy(text);
  std::replace(copy.begin(), copy.end(), ',', ' ');
  State s;
  std::size_t pos = 0;
  for (auto word : detail::split_words(copy)) {
    pos = static_cast<std::size_t>(word.data() - copy.data());
    if (word == "0") s.push_back(Activation::Off);
    else if (word == "1") s.push_back(Activation::On);
    else if (word == "I") s.push_back(Activation::Indeterminate);
    else throw ParseError("state entries must be 0, 1 or I, got '" + std::string(word) + "'", pos);
  }
  if (s.empty()) throw ParseError("empty state vector", 0);
  return s;
}

Activation threshold(const NeutroNumber& raw) {
  if (raw.real() > 0) return Activation::On;
  if (raw.real() == 0 && raw.indet() > 0) return Activation::Indeterminate;
  return Activation::Off;
}

NeutroNumber sign_threshold(const NeutroNumber& raw) {
  if (raw.real() > 0) return 1;
  if (raw.real() < 0) return -1;
  if (raw.indet() != 0) return NeutroNumber::indeterminate();
  return 0;
}

void check_simple_weights(const NeutroMatrix& m, std::string_view what) {
  const NeutroNumber one(1), minus(-1), indet = NeutroNumber::indeterminate();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& x = m(i, j);
      if (!x.is_zero() && x != one && x != minus && x != indet)
        throw DomainError(std::string(what) + " weight (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is " + x.to_string() + ", expected -1, 0, 1 or I");
    }
}

// ---------------------------------------------------------------------------
// Models

ConceptModel::ConceptModel(std::vector<std::string> names, NeutroMatrix weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (!weights_.is_square()) throw ShapeError("concept weights must be square, got " + weights_.shape());
  if (names_.size() != weights_.rows())
    throw ShapeError(std::to_string(names_.size()) + " concept names for a " + weights_.shape() + " weight matrix");
  check_names(names_, "concept");
  check_simple_weights(weights_, "concept");
}

ConceptModel::ConceptModel(NeutroMatrix weights) : ConceptModel(default_names(weights.rows()), std::move(weights)) {}

std::size_t ConceptModel::index_of(std::string_view name) const { return find_name(names_, name, "concept"); }

bool ConceptModel::is_fuzzy() const {
  return std::all_of(weights_.entries().begin(), weights_.entries().end(),
                     [](const NeutroNumber& x) { return x.is_determinate(); });
}

RelationalModel::RelationalModel(std::vector<std::string> domain, std::vector<std::string> range, NeutroMatrix weights)
    : domain_(std::move(domain)), range_(std::move(range)), weights_(std::move(weights)) {
  if (domain_.size() != weights_.rows() || range_.size() != weights_.cols())
    throw ShapeError(std::to_string(domain_.size()) + " domain and " + std::to_string(range_.size()) +
                     " range names for a " + weights_.shape() + " weight matrix");
  check_names(domain_, "domain");
  check_names(range_, "range");
  for (const auto& d : domain_)
    if (std::find(range_.begin(), range_.end(), d) != range_.end())
      throw DomainError("'" + d + "' names both a domain and a range concept");
  check_simple_weights(weights_, "relational");
}

std::size_t RelationalModel::domain_index(std::string_view name) const {
  return find_name(domain_, name, "domain concept");
}

std::size_t RelationalModel::range_index(std::string_view name) const {
  return find_name(range_, name, "range concept");
}

ConceptModel lift(const RelationalModel& m) {
  const std::size_t a = m.domain().size(), b = m.range().size();
  NeutroMatrix w(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) w(i, a + j) = m.weights()(i, j);
  std::vector<std::string> names = m.domain();
  names.insert(names.end(), m.range().begin(), m.range().end());
  return ConceptModel(std::move(names), std::move(w));
}

// ---------------------------------------------------------------------------
// Runs

CmRun cm_run(const ConceptModel& m, const State& s0, std::optional<std::vector<std::size_t>> clamp) {
  if (s0.size() != m.size())
    throw ShapeError("state of length " + std::to_string(s0.size()) + " for a model with " +
                     std::to_string(m.size()) + " concepts");
  CmRun run;
  run.initial = s0;
  run.clamp = clamp ? std::move(*clamp) : default_clamp(s0);
  check_clamp(run.clamp, m.size());

  State current = s0;
  apply_clamp(current, run.clamp);
  std::map<State, std::size_t> seen;
  const std::size_t bound = step_bound(m.size());
  while (true) {
    auto [it, fresh] = seen.emplace(current, run.trajectory.size());
    run.trajectory.push_back(current);
    if (!fresh) {
      const std::size_t entry = it->second;
      std::vector<State> cycle(run.trajectory.begin() + static_cast<std::ptrdiff_t>(entry), run.trajectory.end() - 1);
      run.pattern = pattern_from(cycle, entry);
      return run;
    }
    if (run.trajectory.size() > bound) throw std::logic_error("cognitive map run exceeded the state-space bound");
    current = step(current, m.weights(), run.trajectory.size(), 0, run.notes);
    apply_clamp(current, run.clamp);
  }
}

bool is_fixed_point(const ConceptModel& m, const State& f, const std::vector<std::size_t>& clamp) {
  std::vector<ThresholdNote> ignored;
  State next = step(f, m.weights(), 0, 0, ignored);
  apply_clamp(next, clamp);
  return next == f;
}

std::vector<CmRun> cm_sweep(const ConceptModel& m, const std::vector<State>& inputs, unsigned threads) {
  std::vector<std::optional<CmRun>> slots(inputs.size());
  std::vector<std::exception_ptr> errors(inputs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, inputs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        slots[i] = cm_run(m, inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CmRun> out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

ConceptModel degrade(const ConceptModel& m) {
  NeutroMatrix w = m.weights();
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) = w(i, j).real();
  return ConceptModel(m.names(), std::move(w));
}

// ---------------------------------------------------------------------------
// Balance

const char* path_sign_name(PathSign s) noexcept {
  switch (s) {
    case PathSign::Positive: return "+";
    case PathSign::Negative: return "-";
    case PathSign::Indeterminate: return "I";
  }
  return "?";
}

namespace {

int sign_of(const NeutroNumber& w) {
  if (!w.is_determinate()) return 2;
  return w.real() > 0 ? 0 : 1;
}

int sign_product(int a, int b) {
  if (a == 2 || b == 2) return 2;
  return a ^ b;
}

}  // namespace

BalanceReport balance(const ConceptModel& m, std::size_t max_concepts) {
  const std::size_t n = m.size();
  if (n > max_concepts || n > 20)
    throw SizeGuardError("balance check enumerates paths and is limited to " + std::to_string(max_concepts) +
                         " concepts (model has " + std::to_string(n) + ")");
  const auto& w = m.weights();
  const std::size_t full = std::size_t{1} << n;
  BalanceReport report;
  // signs[mask * n + v]: bit s set when a simple path from `src` over exactly
  // `mask` ends at v with sign s.
  std::vector<std::uint8_t> signs(full * n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(signs.begin(), signs.end(), 0);
    for (std::size_t v = 0; v < n; ++v)
      if (v != src && !w(src, v).is_zero())
        signs[((std::size_t{1} << src) | (std::size_t{1} << v)) * n + v] |= std::uint8_t(1u << sign_of(w(src, v)));
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!(mask >> src & 1)) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint8_t here = signs[mask * n + v];
        if (!here) continue;
        for (std::size_t x = 0; x < n; ++x) {
          if (mask >> x & 1 || w(v, x).is_zero()) continue;
          const int edge = sign_of(w(v, x));
          for (int s = 0; s < 3; ++s)
            if (here >> s & 1) signs[(mask | (std::size_t{1} << x)) * n + x] |= std::uint8_t(1u << sign_product(s, edge));
        }
      }
    }
    for (std::size_t dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      std::uint8_t all = 0;
      for (std::size_t mask = 0; mask < full; ++mask) all |= signs[mask * n + dst];
      const bool pos = all & 1, neg = all & 2, ind = all & 4;
      if (!((pos && neg) || (ind && (pos || neg)))) continue;
      int first = pos ? 0 : 1;
      int second = (pos && neg) ? 1 : 2;
      auto trace = [&](int sign) {
        std::size_t mask = 0;
        for (std::size_t k = 0; k < full; ++k)
          if (signs[k * n + dst] >> sign & 1) {
            mask = k;
            break;
          }
        std::vector<std::size_t> path{dst};
        std::size_t v = dst;
        int s = sign;
        while (v != src) {
          const std::size_t prev_mask = mask & ~(std::size_t{1} << v);
          bool found = false;
          for (std::size_t u = 0; u < n && !found; ++u) {
            if (!(prev_mask >> u & 1) || w(u, v).is_zero()) continue;
            const int edge = sign_of(w(u, v));
            if (u == src) {
              if (prev_mask != (std::size_t{1} << src) || edge != s) continue;
              found = true;
            }
            for (int t = 0; t < 3 && !found; ++t)
              if (sign_product(t, edge) == s && (signs[prev_mask * n + u] >> t & 1)) {
                s = t;
                found = true;
              }
            if (found) {
              path.push_back(u);
              v = u;
              mask = prev_mask;
            }
          }
          if (!found) throw std::logic_error("balance witness reconstruction failed");
        }
        std::reverse(path.begin(), path.end());
        return path;
      };
      report.balanced = false;
      report.witness = BalanceWitness{src, dst, trace(first), static_cast<PathSign>(first), trace(second),
                                      static_cast<PathSign>(second)};
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Relational maps

RmRun rm_run(const RelationalModel& m, const State& s0, Side side, std::optional<std::vector<std::size_t>> clamp) {
  const NeutroMatrix forward = side == Side::Domain ? m.weights() : nm_transpose(m.weights());
  const NeutroMatrix back = nm_transpose(forward);
  const std::size_t start_size = forward.rows();
  const std::size_t offset_start = side == Side::Domain ? 0 : m.domain().size();
  const std::size_t offset_other = side == Side::Domain ? m.domain().size() : 0;
  if (s0.size() != start_size)
    throw ShapeError("state of length " + std::to_string(s0.size()) + " for a " +
                     (side == Side::Domain ? "domain" : "range") + " of " + std::to_string(start_size) + " concepts");
  RmRun run;
  run.side = side;
  run.initial = s0;
  run.clamp = clamp ? std::move(*clamp) : default_clamp(s0);
  check_clamp(run.clamp, start_size);

  std::vector<State> starts, others;
  State x = s0;
  apply_clamp(x, run.clamp);
  std::map<std::pair<State, State>, std::size_t> seen;
  const std::size_t bound = step_bound(forward.rows() + forward.cols());
  while (true) {
    State y = step(x, forward, starts.size(), offset_other, run.notes);
    auto [it, fresh] = seen.emplace(std::pair(x, y), starts.size());
    starts.push_back(x);
    others.push_back(y);
    if (!fresh) {
      const std::size_t entry = it->second;
      std::vector<State> cyc_a(starts.begin() + static_cast<std::ptrdiff_t>(entry), starts.end() - 1);
      std::vector<State> cyc_b(others.begin() + static_cast<std::ptrdiff_t>(entry), others.end() - 1);
      HiddenPattern pa = pattern_from(cyc_a, entry), pb = pattern_from(cyc_b, entry);
      if (side == Side::Domain) {
        run.domain_trajectory = std::move(starts);
        run.range_trajectory = std::move(others);
        run.domain = std::move(pa);
        run.range = std::move(pb);
      } else {
        run.range_trajectory = std::move(starts);
        run.domain_trajectory = std::move(others);
        run.range = std::move(pa);
        run.domain = std::move(pb);
      }
      return run;
    }
    if (starts.size() > bound) throw std::logic_error("relational map run exceeded the state-space bound");
    x = step(y, back, starts.size(), offset_start, run.notes);
    apply_clamp(x, run.clamp);
  }
}

// ---------------------------------------------------------------------------
// Linking and conversion

LinkResult link(const std::vector<NeutroMatrix>& chain) {
  if (chain.size() < 2) throw DomainError("linking needs at least two matrices");
  auto shapes = [&] {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? " -> " : "") + chain[i].shape();
    return s;
  };
  NeutroMatrix acc = chain[0];
  std::vector<bool> transposed;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const auto& next = chain[i];
    if (acc.cols() == next.rows()) {
      acc = nm_mul(acc, next);
      transposed.push_back(false);
    } else if (acc.rows() == next.rows()) {
      acc = nm_mul(nm_transpose(acc), next);
      transposed.push_back(true);
    } else {
      throw ShapeError("cannot link step " + std::to_string(i + 1) + " (accumulated " + acc.shape() + " with " +
                       next.shape() + "); chain shapes: " + shapes());
    }
  }
  NeutroMatrix sig = acc;
  for (std::size_t r = 0; r < sig.rows(); ++r)
    for (std::size_t c = 0; c < sig.cols(); ++c) sig(r, c) = sign_threshold(acc(r, c));
  return {std::move(acc), std::move(sig), std::move(transposed)};
}

ConvertReport frm_convertible(const ConceptModel& m) {
  const std::size_t n = m.size();
  std::vector<graph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!m.weights()(i, j).is_zero() || !m.weights()(j, i).is_zero()) edges.emplace_back(i, j);
  graph::Graph support(n, std::move(edges), {false, true});
  auto b = graph::is_bipartite(support);
  ConvertReport r;
  r.convertible = b.bipartite;
  r.domain = std::move(b.part_a);
  r.range = std::move(b.part_b);
  r.odd_cycle = std::move(b.odd_cycle);
  return r;
}

}  // namespace neutro::cognitive
