#include "neutro/core.hpp"

#include <ostream>
#include <sstream>

#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro {

namespace {

std::string coefficient_prefix(const Rational& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return format_rational(c);
}

Rational parse_indet_coefficient(std::string_view text, std::size_t offset) {
  // "" -> 1, "-" -> -1, "+" -> 1, otherwise a signed rational.
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  return parse_rational(text, offset);
}

}  // namespace

std::string NeutroNumber::to_string() const {
  if (indet_ == 0) return format_rational(real_);
  if (real_ == 0) return coefficient_prefix(indet_) + "I";
  std::string out = format_rational(real_);
  if (indet_ > 0) {
    out += "+" + coefficient_prefix(indet_);
  } else {
    out += "-" + coefficient_prefix(Rational(-indet_));
  }
  return out + "I";
}

NeutroNumber NeutroNumber::parse(std::string_view token) {
  const std::size_t lead = detail::leading_space(token);
  std::string_view s = detail::trim(token);
  if (s.empty()) throw ParseError("empty value", 0);

  if (s.back() != 'I') {
    if (auto pos = s.find('I'); pos != std::string_view::npos)
      throw ParseError("indeterminate term must come last", lead + pos);
    return {parse_rational(s, lead), 0};
  }

  std::string_view body = s.substr(0, s.size() - 1);
  if (auto pos = body.find('I'); pos != std::string_view::npos)
    throw ParseError("more than one indeterminate term", lead + pos);

  // A sign past the first character separates the real and indeterminate terms.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split_at = i;
      break;
    }
  }
  if (split_at == std::string_view::npos) return {0, parse_indet_coefficient(body, lead)};

  std::string_view real_part = body.substr(0, split_at);
  std::string_view indet_part = body.substr(split_at);
  if (indet_part.size() > 1 && (indet_part[1] == '+' || indet_part[1] == '-'))
    throw ParseError("doubled sign", lead + split_at + 1);
  return {parse_rational(real_part, lead), parse_indet_coefficient(indet_part, lead + split_at)};
}

std::ostream& operator<<(std::ostream& os, const NeutroNumber& x) { return os << x.to_string(); }

NeutroNumber nn_add(const NeutroNumber& x, const NeutroNumber& y) { return x + y; }
NeutroNumber nn_mul(const NeutroNumber& x, const NeutroNumber& y) { return x * y; }

SplitPair split(const NeutroNumber& x) { return {x.real(), x.real() + x.indet()}; }
NeutroNumber unsplit(const SplitPair& p) { return {p.first, p.second - p.first}; }

NeutroMatrix::NeutroMatrix(std::size_t rows, std::size_t cols)
    : NeutroMatrix(rows, cols, std::vector<NeutroNumber>(rows * cols)) {}

NeutroMatrix::NeutroMatrix(std::size_t rows, std::size_t cols, std::vector<NeutroNumber> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must be at least 1x1, got " + shape());
  if (entries_.size() != rows_ * cols_)
    throw ShapeError("matrix " + shape() + " needs " + std::to_string(rows_ * cols_) + " entries, got " +
                     std::to_string(entries_.size()));
}

NeutroMatrix::NeutroMatrix(std::initializer_list<std::initializer_list<NeutroNumber>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix must be at least 1x1, got " + shape());
}

NeutroMatrix NeutroMatrix::identity(std::size_t n) {
  NeutroMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const NeutroNumber& NeutroMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw ShapeError("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
  return (*this)(r, c);
}

std::string NeutroMatrix::shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

std::string NeutroMatrix::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += '\n';
  }
  return out;
}

NeutroMatrix NeutroMatrix::parse(std::string_view text) {
  std::vector<NeutroNumber> entries;
  std::size_t rows = 0, cols = 0;
  for (const auto& line : detail::split_lines(text)) {
    if (detail::trim(line.text).empty()) continue;
    auto fields = detail::split_fields(line.text, ',');
    if (rows == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ShapeError("row " + std::to_string(rows + 1) + " has " + std::to_string(fields.size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (const auto& f : fields) {
      try {
        entries.push_back(NeutroNumber::parse(f.text));
      } catch (const ParseError& e) {
        throw ParseError("bad matrix entry '" + std::string(detail::trim(f.text)) + "' on line " +
                             std::to_string(line.number),
                         line.offset + f.offset + e.position());
      }
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("empty matrix", 0);
  return NeutroMatrix(rows, cols, std::move(entries));
}

NeutroMatrix nm_mul(const NeutroMatrix& a, const NeutroMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("cannot multiply " + a.shape() + " by " + b.shape() + ": inner dimensions differ");
  NeutroMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const NeutroNumber& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

NeutroMatrix nm_transpose(const NeutroMatrix& a) {
  NeutroMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

std::vector<NeutroNumber> row_times(const std::vector<NeutroNumber>& v, const NeutroMatrix& a) {
  if (v.size() != a.rows())
    throw ShapeError("vector of length " + std::to_string(v.size()) + " cannot multiply " + a.shape());
  std::vector<NeutroNumber> out(a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[k] * a(k, j);
  }
  return out;
}

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RankReport nm_rank(const NeutroMatrix& a) {
  std::vector<std::vector<Rational>> first(a.rows(), std::vector<Rational>(a.cols()));
  std::vector<std::vector<Rational>> second = first;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      SplitPair p = split(a(i, j));
      first[i][j] = p.first;
      second[i][j] = p.second;
    }
  RankReport report;
  report.rank_first = rational_rank(std::move(first));
  report.rank_second = rational_rank(std::move(second));
  report.invertible = a.is_square() && report.rank_first == a.rows() && report.rank_second == a.rows();
  return report;
}

std::size_t neutro_dimension(std::size_t n, ScalarBase base) {
  if (n == 0) throw DomainError("dimension is defined for n >= 1");
  return base == ScalarBase::NeutrosophicField ? n : 2 * n;
}

}  // namespace neutro
