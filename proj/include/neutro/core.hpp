#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/rational.hpp"

namespace neutro {

/// Exact element a + bI of the ring Q(I), where I*I = I.
///
/// Values are canonical pairs: the pure indeterminate is (0, 1) and zero is
/// (0, 0). The ring has zero divisors, e.g. I * (1 - I) = 0.
class NeutroNumber {
 public:
  NeutroNumber() = default;
  NeutroNumber(Rational real, Rational indet = 0) : real_(std::move(real)), indet_(std::move(indet)) {}
  NeutroNumber(long long real) : real_(real) {}

  static NeutroNumber indeterminate() { return {0, 1}; }

  const Rational& real() const noexcept { return real_; }
  const Rational& indet() const noexcept { return indet_; }

  bool is_zero() const { return real_ == 0 && indet_ == 0; }
  bool is_determinate() const { return indet_ == 0; }

  NeutroNumber operator-() const { return {-real_, -indet_}; }

  friend NeutroNumber operator+(const NeutroNumber& x, const NeutroNumber& y) {
    return {x.real_ + y.real_, x.indet_ + y.indet_};
  }
  friend NeutroNumber operator-(const NeutroNumber& x, const NeutroNumber& y) {
    return {x.real_ - y.real_, x.indet_ - y.indet_};
  }
  // (a + bI)(c + dI) = ac + (ad + bc + bd)I
  friend NeutroNumber operator*(const NeutroNumber& x, const NeutroNumber& y) {
    return {x.real_ * y.real_, x.real_ * y.indet_ + x.indet_ * y.real_ + x.indet_ * y.indet_};
  }
  NeutroNumber& operator+=(const NeutroNumber& y) { return *this = *this + y; }
  NeutroNumber& operator*=(const NeutroNumber& y) { return *this = *this * y; }

  friend bool operator==(const NeutroNumber& x, const NeutroNumber& y) {
    return x.real_ == y.real_ && x.indet_ == y.indet_;
  }
  friend bool operator!=(const NeutroNumber& x, const NeutroNumber& y) { return !(x == y); }

  /// Canonical text: "0", "I", "-I", "2I", "0.5I", "-1+4I", "2-6I".
  std::string to_string() const;

  /// Parses the grammar `[-]a | [-]bI | [-]a(+|-)bI`, with a and b decimal or
  /// p/q rationals. Surrounding whitespace is ignored.
  static NeutroNumber parse(std::string_view token);

 private:
  Rational real_{0};
  Rational indet_{0};
};

std::ostream& operator<<(std::ostream& os, const NeutroNumber& x);

NeutroNumber nn_add(const NeutroNumber& x, const NeutroNumber& y);
NeutroNumber nn_mul(const NeutroNumber& x, const NeutroNumber& y);

/// Image of a + bI under the ring isomorphism Q(I) -> Q x Q, a+bI -> (a, a+b).
struct SplitPair {
  Rational first;
  Rational second;

  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

SplitPair split(const NeutroNumber& x);
NeutroNumber unsplit(const SplitPair& p);

/// Dense row-major matrix over Q(I). Always at least 1x1.
class NeutroMatrix {
 public:
  NeutroMatrix(std::size_t rows, std::size_t cols);
  NeutroMatrix(std::size_t rows, std::size_t cols, std::vector<NeutroNumber> entries);
  NeutroMatrix(std::initializer_list<std::initializer_list<NeutroNumber>> rows);

  static NeutroMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const NeutroNumber& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  NeutroNumber& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const NeutroNumber& at(std::size_t r, std::size_t c) const;

  const std::vector<NeutroNumber>& entries() const noexcept { return entries_; }

  /// "RxC", used in shape diagnostics.
  std::string shape() const;

  friend bool operator==(const NeutroMatrix&, const NeutroMatrix&) = default;

  /// Matrix text format: entries comma-separated, rows newline-separated.
  std::string to_text() const;
  static NeutroMatrix parse(std::string_view text);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<NeutroNumber> entries_;
};

NeutroMatrix nm_mul(const NeutroMatrix& a, const NeutroMatrix& b);
NeutroMatrix nm_transpose(const NeutroMatrix& a);

/// Row vector times matrix; the vector length must equal a.rows().
std::vector<NeutroNumber> row_times(const std::vector<NeutroNumber>& v, const NeutroMatrix& a);

struct RankReport {
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
  bool invertible = false;
};

/// Ranks of the two split components, computed by exact elimination over Q.
/// The matrix is invertible over Q(I) iff it is square and both ranks are full.
RankReport nm_rank(const NeutroMatrix& a);

enum class ScalarBase { OrdinaryField, NeutrosophicField };

/// Dimension of Q(I)^n over Q (2n) or over Q(I) itself (n).
std::size_t neutro_dimension(std::size_t n, ScalarBase base);

}  // namespace neutro
