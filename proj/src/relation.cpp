#include "neutro/relation.hpp"

#include <algorithm>

#include "neutro/core.hpp"
#include "neutro/error.hpp"
#include "text_util.hpp"

namespace neutro::relation {

// ---------------------------------------------------------------------------
// Values

FuzzyValue::FuzzyValue(Rational magnitude, bool indeterminate) : m_(std::move(magnitude)), indet_(indeterminate) {
  if (m_ < 0 || m_ > 1) throw DomainError("membership grade " + format_rational(m_) + " lies outside [0, 1]");
  if (m_ == 0) indet_ = false;
}

std::string FuzzyValue::to_string() const {
  if (!indet_) return format_rational(m_);
  return m_ == 1 ? "I" : format_rational(m_) + "I";
}

FuzzyValue FuzzyValue::parse(std::string_view token) {
  NeutroNumber x = NeutroNumber::parse(token);
  if (x.real() != 0 && x.indet() != 0)
    throw ParseError("membership grade '" + std::string(detail::trim(token)) + "' mixes real and indeterminate parts",
                     0);
  const bool indet = x.indet() != 0;
  Rational m = indet ? x.indet() : x.real();
  if (m < 0 || m > 1)
    throw ParseError("membership grade '" + std::string(detail::trim(token)) + "' lies outside [0, 1]", 0);
  return {m, indet};
}

FuzzyValue lattice_min(const FuzzyValue& x, const FuzzyValue& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const Rational& m = std::min(x.magnitude(), y.magnitude());
  return {m, x.is_indeterminate() || y.is_indeterminate()};
}

FuzzyValue lattice_max(const FuzzyValue& x, const FuzzyValue& y) {
  if (x.magnitude() != y.magnitude()) return x.magnitude() > y.magnitude() ? x : y;
  return x.is_indeterminate() ? y : x;
}

// ---------------------------------------------------------------------------
// Three-valued logic

const char* truth_name(Truth t) noexcept {
  switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

Truth truth_not(Truth a) {
  if (a == Truth::Indeterminate) return a;
  return a == Truth::True ? Truth::False : Truth::True;
}

Truth truth_and(Truth a, Truth b) {
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::Indeterminate || b == Truth::Indeterminate) return Truth::Indeterminate;
  return Truth::True;
}

Truth truth_or(Truth a, Truth b) { return truth_not(truth_and(truth_not(a), truth_not(b))); }

namespace {

Truth from_bool(bool b) { return b ? Truth::True : Truth::False; }

}  // namespace

Truth value_eq(const FuzzyValue& a, const FuzzyValue& b) {
  if (!a.is_indeterminate() && !b.is_indeterminate()) return from_bool(a.magnitude() == b.magnitude());
  if (a == b) return Truth::True;
  return Truth::Indeterminate;
}

Truth value_ge(const FuzzyValue& a, const FuzzyValue& b) {
  if (!a.is_indeterminate() && !b.is_indeterminate()) return from_bool(a.magnitude() >= b.magnitude());
  if (b.is_zero() || a == b) return Truth::True;
  return Truth::Indeterminate;
}

Truth value_positive(const FuzzyValue& a) {
  if (a.is_indeterminate()) return Truth::Indeterminate;
  return from_bool(a.magnitude() > 0);
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                   std::vector<FuzzyValue> values)
    : rows_(std::move(row_labels)), cols_(std::move(col_labels)), values_(std::move(values)) {
  if (rows_.empty() || cols_.empty()) throw ShapeError("relation needs at least one row and one column");
  if (values_.size() != rows_.size() * cols_.size())
    throw ShapeError("relation " + std::to_string(rows_.size()) + "x" + std::to_string(cols_.size()) + " needs " +
                     std::to_string(rows_.size() * cols_.size()) + " grades, got " + std::to_string(values_.size()));
  auto check_unique = [](std::vector<std::string> labels, const char* side) {
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    if (dup != labels.end()) throw DomainError(std::string("duplicate ") + side + " label '" + *dup + "'");
  };
  check_unique(rows_, "row");
  check_unique(cols_, "column");
}

Relation Relation::square(std::size_t n, std::vector<FuzzyValue> values) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Relation(labels, labels, std::move(values));
}

std::size_t Relation::row_index(std::string_view label) const {
  auto it = std::find(rows_.begin(), rows_.end(), label);
  if (it == rows_.end()) throw NotFoundError("no row labelled '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - rows_.begin());
}

std::size_t Relation::col_index(std::string_view label) const {
  auto it = std::find(cols_.begin(), cols_.end(), label);
  if (it == cols_.end()) throw NotFoundError("no column labelled '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - cols_.begin());
}

std::string Relation::to_text() const {
  std::string out = "R";
  for (const auto& c : cols_) out += ", " + c;
  out += '\n';
  for (std::size_t r = 0; r < rows(); ++r) {
    out += rows_[r];
    for (std::size_t c = 0; c < cols(); ++c) out += ", " + (*this)(r, c).to_string();
    out += '\n';
  }
  return out;
}

Relation Relation::parse(std::string_view text) {
  std::vector<detail::Line> lines;
  for (const auto& line : detail::split_lines(text))
    if (!detail::trim(line.text).empty() && detail::trim(line.text)[0] != '#') lines.push_back(line);
  if (lines.empty()) throw ParseError("empty relation", 0);

  auto header = detail::split_names(lines[0].text);
  if (header.size() < 2) throw ParseError("relation header needs a corner cell and at least one column label",
                                          lines[0].offset);
  std::vector<std::string> cols(header.begin() + 1, header.end());
  std::vector<std::string> rows;
  std::vector<FuzzyValue> values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    auto fields = detail::split_fields(line.text, ',');
    if (fields.size() != cols.size() + 1)
      throw ShapeError("relation row on line " + std::to_string(line.number) + " has " +
                       std::to_string(fields.size() - 1) + " grades, expected " + std::to_string(cols.size()));
    rows.emplace_back(detail::trim(fields[0].text));
    for (std::size_t f = 1; f < fields.size(); ++f) {
      try {
        values.push_back(FuzzyValue::parse(fields[f].text));
      } catch (const ParseError& e) {
        throw ParseError("bad grade '" + std::string(detail::trim(fields[f].text)) + "' on line " +
                             std::to_string(line.number),
                         line.offset + fields[f].offset + e.position());
      }
    }
  }
  if (rows.empty()) throw ParseError("relation has no rows", lines[0].offset);
  return Relation(std::move(rows), std::move(cols), std::move(values));
}

// ---------------------------------------------------------------------------
// Operations

DomRanHeight dom_ran_height(const Relation& r) {
  DomRanHeight out;
  out.domain.assign(r.rows(), FuzzyValue{});
  out.range.assign(r.cols(), FuzzyValue{});
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      out.domain[i] = lattice_max(out.domain[i], r(i, j));
      out.range[j] = lattice_max(out.range[j], r(i, j));
      out.height = lattice_max(out.height, r(i, j));
    }
  return out;
}

Relation inverse(const Relation& r) {
  std::vector<FuzzyValue> values;
  for (std::size_t j = 0; j < r.cols(); ++j)
    for (std::size_t i = 0; i < r.rows(); ++i) values.push_back(r(i, j));
  return Relation(r.col_labels(), r.row_labels(), std::move(values));
}

Relation maxmin_compose(const Relation& p, const Relation& q) {
  if (p.cols() != q.rows())
    throw DomainError("cannot compose " + std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " with " +
                      std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
  if (p.col_labels() != q.row_labels()) throw DomainError("composition needs matching middle labels");
  std::vector<FuzzyValue> values;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      FuzzyValue acc;
      for (std::size_t k = 0; k < p.cols(); ++k) acc = lattice_max(acc, lattice_min(p(i, k), q(k, j)));
      values.push_back(acc);
    }
  return Relation(p.row_labels(), q.col_labels(), std::move(values));
}

Relation lattice_union(const Relation& a, const Relation& b) {
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels())
    throw DomainError("union needs relations on the same label sets");
  std::vector<FuzzyValue> values;
  for (std::size_t i = 0; i < a.values().size(); ++i) values.push_back(lattice_max(a.values()[i], b.values()[i]));
  return Relation(a.row_labels(), a.col_labels(), std::move(values));
}

std::string JoinTable::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      for (std::size_t k = 0; k < z.size(); ++k) {
        const auto& v = (*this)(i, j, k);
        if (!v.is_zero()) out += x[i] + ", " + y[j] + ", " + z[k] + ", " + v.to_string() + "\n";
      }
  return out;
}

JoinTable relational_join(const Relation& p, const Relation& q) {
  if (p.cols() != q.rows() || p.col_labels() != q.row_labels())
    throw DomainError("join needs the middle set of both relations to agree");
  JoinTable t{p.row_labels(), p.col_labels(), q.col_labels(), {}};
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      for (std::size_t k = 0; k < q.cols(); ++k) t.values.push_back(lattice_min(p(i, j), q(j, k)));
  return t;
}

Relation project_join(const JoinTable& t) {
  std::vector<FuzzyValue> values;
  for (std::size_t i = 0; i < t.x.size(); ++i)
    for (std::size_t k = 0; k < t.z.size(); ++k) {
      FuzzyValue acc;
      for (std::size_t j = 0; j < t.y.size(); ++j) acc = lattice_max(acc, t(i, j, k));
      values.push_back(acc);
    }
  return Relation(t.x, t.z, std::move(values));
}

PropertyReport properties(const Relation& r, const Rational& epsilon) {
  if (!r.is_square())
    throw DomainError("properties need a square relation, got " + std::to_string(r.rows()) + "x" +
                      std::to_string(r.cols()));
  if (epsilon <= 0 || epsilon >= 1) throw DomainError("epsilon must lie strictly between 0 and 1");
  const std::size_t n = r.rows();
  const FuzzyValue one(1), eps(epsilon);
  PropertyReport p;
  Truth refl = Truth::True, eps_refl = Truth::True, anti_refl = Truth::True;
  for (std::size_t x = 0; x < n; ++x) {
    refl = truth_and(refl, value_eq(r(x, x), one));
    eps_refl = truth_and(eps_refl, value_ge(r(x, x), eps));
    anti_refl = truth_and(anti_refl, truth_not(value_eq(r(x, x), one)));
  }
  Truth sym = Truth::True, antisym = Truth::True;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      sym = truth_and(sym, value_eq(r(x, y), r(y, x)));
      if (x != y) antisym = truth_and(antisym, truth_not(truth_and(value_positive(r(x, y)), value_positive(r(y, x)))));
    }
  Relation comp = maxmin_compose(r, r);
  Truth trans = Truth::True, anti_trans = Truth::True;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      Truth ge = value_ge(r(x, z), comp(x, z));
      trans = truth_and(trans, ge);
      anti_trans = truth_and(anti_trans, truth_not(ge));
    }
  p.reflexive = refl;
  p.epsilon_reflexive = eps_refl;
  p.irreflexive = truth_not(refl);
  p.anti_reflexive = anti_refl;
  p.symmetric = sym;
  p.asymmetric = truth_not(sym);
  p.antisymmetric = antisym;
  p.transitive = trans;
  p.anti_transitive = anti_trans;
  p.compatibility = truth_and(refl, sym);
  p.partial_order = truth_and(refl, truth_and(antisym, trans));
  return p;
}

Relation transitive_closure(const Relation& r) {
  if (!r.is_square()) throw DomainError("transitive closure needs a square relation");
  if (r.row_labels() != r.col_labels()) throw DomainError("transitive closure needs a relation on one label set");
  Relation current = r;
  while (true) {
    Relation next = lattice_union(current, maxmin_compose(current, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

HomomorphismReport check_homomorphism(const std::vector<std::size_t>& h, const Relation& r, const Relation& q,
                                      bool strong) {
  if (!r.is_square() || !q.is_square()) throw DomainError("homomorphism check needs square relations");
  if (h.size() != r.rows())
    throw DomainError("map covers " + std::to_string(h.size()) + " of " + std::to_string(r.rows()) + " elements");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] >= q.rows())
      throw DomainError("image of '" + r.row_labels()[i] + "' is outside the target set");
  HomomorphismReport rep;
  auto record = [&](const char* clause, std::size_t a, std::size_t b, Truth t) {
    rep.holds = truth_and(rep.holds, t);
    if (t != Truth::True) rep.violations.push_back({clause, a, b, t});
  };
  const std::size_t n = r.rows();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) record("order", a, b, value_ge(q(h[a], h[b]), r(a, b)));
  if (!strong) return rep;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      record("forward", a, b, truth_or(truth_not(value_positive(r(a, b))), value_positive(q(h[a], h[b]))));
  for (std::size_t y1 = 0; y1 < q.rows(); ++y1)
    for (std::size_t y2 = 0; y2 < q.rows(); ++y2) {
      Truth clause = Truth::True;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (h[a] == y1 && h[b] == y2)
            clause = truth_and(clause, truth_or(truth_not(value_positive(q(y1, y2))), value_positive(r(a, b))));
      record("backward", y1, y2, clause);
    }
  return rep;
}

}  // namespace neutro::relation
