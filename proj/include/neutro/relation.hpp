#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/rational.hpp"

namespace neutro::relation {

/// Membership grade: a rational m in [0, 1], or m·I for m in (0, 1].
/// 0·I is stored as the real 0.
class FuzzyValue {
 public:
  FuzzyValue() = default;
  FuzzyValue(Rational magnitude, bool indeterminate = false);
  FuzzyValue(long long magnitude) : FuzzyValue(Rational(magnitude)) {}

  static FuzzyValue indeterminate(Rational magnitude = 1) { return {std::move(magnitude), true}; }

  const Rational& magnitude() const noexcept { return m_; }
  bool is_indeterminate() const noexcept { return indet_; }
  bool is_zero() const noexcept { return m_ == 0; }

  /// "0", "0.3", "1", "I", "0.5I".
  std::string to_string() const;
  /// Same grammar as neutrosophic numbers, restricted to pure real or pure
  /// indeterminate values with magnitude in [0, 1].
  static FuzzyValue parse(std::string_view token);

  friend bool operator==(const FuzzyValue&, const FuzzyValue&) = default;

 private:
  Rational m_{0};
  bool indet_ = false;
};

/// 0 annihilates; otherwise an indeterminate operand yields min(magnitudes)·I.
FuzzyValue lattice_min(const FuzzyValue& x, const FuzzyValue& y);
/// Larger magnitude wins; a real value beats an indeterminate one of equal magnitude.
FuzzyValue lattice_max(const FuzzyValue& x, const FuzzyValue& y);

enum class Truth { False, True, Indeterminate };

const char* truth_name(Truth t) noexcept;
Truth truth_not(Truth a);
Truth truth_and(Truth a, Truth b);
Truth truth_or(Truth a, Truth b);

/// Three-valued comparisons: a clause touching an indeterminate grade is
/// indeterminate unless it is decided by identity or by a real 0.
Truth value_eq(const FuzzyValue& a, const FuzzyValue& b);
Truth value_ge(const FuzzyValue& a, const FuzzyValue& b);
Truth value_positive(const FuzzyValue& a);

/// Binary relation R(X, Y) given by its membership matrix.
class Relation {
 public:
  Relation(std::vector<std::string> row_labels, std::vector<std::string> col_labels, std::vector<FuzzyValue> values);
  /// Square relation with default labels x1..xn.
  static Relation square(std::size_t n, std::vector<FuzzyValue> values);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  bool is_square() const noexcept { return rows_.size() == cols_.size(); }
  const std::vector<std::string>& row_labels() const noexcept { return rows_; }
  const std::vector<std::string>& col_labels() const noexcept { return cols_; }
  const std::vector<FuzzyValue>& values() const noexcept { return values_; }

  const FuzzyValue& operator()(std::size_t r, std::size_t c) const { return values_[r * cols_.size() + c]; }
  FuzzyValue& operator()(std::size_t r, std::size_t c) { return values_[r * cols_.size() + c]; }

  std::size_t row_index(std::string_view label) const;
  std::size_t col_index(std::string_view label) const;

  /// CSV text: a header row "label, y1, ..., yk" (the first cell is ignored on
  /// input and may be empty), then "x, v1, ..., vk" per row.
  std::string to_text() const;
  static Relation parse(std::string_view text);

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<FuzzyValue> values_;
};

struct DomRanHeight {
  std::vector<FuzzyValue> domain;  // per row
  std::vector<FuzzyValue> range;   // per column
  FuzzyValue height;
};

DomRanHeight dom_ran_height(const Relation& r);

Relation inverse(const Relation& r);

/// r_ij = max_k min(p_ik, q_kj). The middle label lists must agree.
Relation maxmin_compose(const Relation& p, const Relation& q);

/// Elementwise lattice_max; shapes and labels must agree.
Relation lattice_union(const Relation& a, const Relation& b);

struct JoinTable {
  std::vector<std::string> x, y, z;
  std::vector<FuzzyValue> values;  // index (i * |y| + j) * |z| + k

  const FuzzyValue& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values[(i * y.size() + j) * z.size() + k];
  }
  /// One line "x, y, z, value" per triple with a nonzero value.
  std::string to_text() const;
};

/// R(x, y, z) = min(P(x, y), Q(y, z)).
JoinTable relational_join(const Relation& p, const Relation& q);
/// max over the middle coordinate.
Relation project_join(const JoinTable& t);

struct PropertyReport {
  Truth reflexive = Truth::False;
  Truth epsilon_reflexive = Truth::False;
  Truth irreflexive = Truth::False;
  Truth anti_reflexive = Truth::False;
  Truth symmetric = Truth::False;
  Truth asymmetric = Truth::False;
  Truth antisymmetric = Truth::False;
  Truth transitive = Truth::False;
  Truth anti_transitive = Truth::False;
  Truth compatibility = Truth::False;
  Truth partial_order = Truth::False;
};

/// Requires a square relation and 0 < epsilon < 1.
PropertyReport properties(const Relation& r, const Rational& epsilon = Rational(1, 2));

/// Iterates R <- max(R, R o R) to a fixpoint.
Relation transitive_closure(const Relation& r);

struct HomomorphismViolation {
  std::string clause;  // "order", "forward" or "backward"
  std::size_t a = 0;   // row/column indices in X (order, forward) or Y (backward)
  std::size_t b = 0;
  Truth truth = Truth::False;
};

struct HomomorphismReport {
  Truth holds = Truth::True;
  std::vector<HomomorphismViolation> violations;
};

/// h[i] is the index in Y of the image of x_i. The strong variant adds the
/// two support implications.
HomomorphismReport check_homomorphism(const std::vector<std::size_t>& h, const Relation& r, const Relation& q,
                                      bool strong);

}  // namespace neutro::relation
