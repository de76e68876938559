#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/core.hpp"

namespace neutro::cognitive {

enum class Activation : std::uint8_t { Off = 0, On = 1, Indeterminate = 2 };

using State = std::vector<Activation>;

char activation_char(Activation a) noexcept;
NeutroNumber activation_value(Activation a);
/// "1 I 0 1 1 0 0".
std::string state_to_string(const State& s);
/// Whitespace- or comma-separated tokens from {0, 1, I}.
State parse_state(std::string_view text);

/// a > 0 -> 1; a = 0 and b > 0 -> I; otherwise 0, for raw = a + bI.
Activation threshold(const NeutroNumber& raw);
/// a > 0 -> 1; a < 0 -> -1; a = 0 and b != 0 -> I; otherwise 0.
NeutroNumber sign_threshold(const NeutroNumber& raw);

/// Entries must be -1, 0, 1 or I.
void check_simple_weights(const NeutroMatrix& m, std::string_view what);

class ConceptModel {
 public:
  ConceptModel(std::vector<std::string> names, NeutroMatrix weights);
  /// Concepts named C1..Cn.
  explicit ConceptModel(NeutroMatrix weights);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const NeutroMatrix& weights() const noexcept { return weights_; }
  /// Accepts a concept name or a 1-based position ("3").
  std::size_t index_of(std::string_view name) const;
  /// True when no entry involves I.
  bool is_fuzzy() const;

  friend bool operator==(const ConceptModel&, const ConceptModel&) = default;

 private:
  std::vector<std::string> names_;
  NeutroMatrix weights_;
};

class RelationalModel {
 public:
  RelationalModel(std::vector<std::string> domain, std::vector<std::string> range, NeutroMatrix weights);

  const std::vector<std::string>& domain() const noexcept { return domain_; }
  const std::vector<std::string>& range() const noexcept { return range_; }
  const NeutroMatrix& weights() const noexcept { return weights_; }
  std::size_t domain_index(std::string_view name) const;
  std::size_t range_index(std::string_view name) const;

  friend bool operator==(const RelationalModel&, const RelationalModel&) = default;

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> range_;
  NeutroMatrix weights_;
};

/// Square block form [[0, W], [0, 0]] on domain followed by range concepts.
ConceptModel lift(const RelationalModel& m);

enum class PatternKind { FixedPoint, LimitCycle };

struct HiddenPattern {
  PatternKind kind = PatternKind::FixedPoint;
  std::vector<State> states;  // one state for a fixed point
  std::size_t steps_to_enter = 0;
};

/// A coordinate whose raw value mixed a nonzero real part with an I part.
struct ThresholdNote {
  std::size_t step = 0;   // index of the produced state in the trajectory
  std::size_t index = 0;  // coordinate
  NeutroNumber raw;
  Activation result = Activation::Off;
};

struct CmRun {
  State initial;
  std::vector<std::size_t> clamp;
  /// Starts with the clamped initial state and ends with the first repeated state.
  std::vector<State> trajectory;
  HiddenPattern pattern;
  std::vector<ThresholdNote> notes;

  std::size_t iterations() const { return trajectory.empty() ? 0 : trajectory.size() - 1; }
};

/// Without an explicit clamp set, the coordinates on in s0 are clamped.
CmRun cm_run(const ConceptModel& m, const State& s0, std::optional<std::vector<std::size_t>> clamp = std::nullopt);

/// clamp(threshold(f * M)) == f.
bool is_fixed_point(const ConceptModel& m, const State& f, const std::vector<std::size_t>& clamp);

/// Runs every input independently on up to `threads` workers; results keep input order.
std::vector<CmRun> cm_sweep(const ConceptModel& m, const std::vector<State>& inputs, unsigned threads = 0);

/// Replaces every I entry by 0.
ConceptModel degrade(const ConceptModel& m);

enum class PathSign { Positive, Negative, Indeterminate };

const char* path_sign_name(PathSign s) noexcept;

struct BalanceWitness {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<std::size_t> first;
  PathSign first_sign = PathSign::Positive;
  std::vector<std::size_t> second;
  PathSign second_sign = PathSign::Positive;
};

struct BalanceReport {
  bool balanced = true;
  std::optional<BalanceWitness> witness;
};

BalanceReport balance(const ConceptModel& m, std::size_t max_concepts = 12);

enum class Side { Domain, Range };

struct RmRun {
  Side side = Side::Domain;
  State initial;
  std::vector<std::size_t> clamp;
  std::vector<State> domain_trajectory;
  std::vector<State> range_trajectory;
  HiddenPattern domain;
  HiddenPattern range;
  std::vector<ThresholdNote> notes;  // domain coordinates first, range offset by |domain|
};

/// Starting on `side`, alternately maps through W and its transpose; the run
/// stops when the (domain, range) pair repeats.
RmRun rm_run(const RelationalModel& m, const State& s0, Side side,
             std::optional<std::vector<std::size_t>> clamp = std::nullopt);

struct LinkResult {
  NeutroMatrix raw;
  NeutroMatrix signed_matrix;
  std::vector<bool> transposed;  // per step after the first: accumulator transposed
};

/// Multiplies left to right. Each step uses acc * next when acc.cols ==
/// next.rows, otherwise acc^T * next when the row counts agree.
LinkResult link(const std::vector<NeutroMatrix>& chain);

struct ConvertReport {
  bool convertible = false;
  std::vector<std::size_t> domain;
  std::vector<std::size_t> range;
  std::vector<std::size_t> odd_cycle;
};

/// Bipartiteness of the support graph (signs and I ignored).
ConvertReport frm_convertible(const ConceptModel& m);

}  // namespace neutro::cognitive
