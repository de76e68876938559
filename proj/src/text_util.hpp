#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace neutro::detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline std::size_t leading_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = leading_space(s);
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

struct Line {
  std::string_view text;
  std::size_t offset;  // byte offset of the line start
  std::size_t number;  // 1-based
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back({text.substr(start, end - start), start, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

struct Field {
  std::string_view text;
  std::size_t offset;  // relative to the split input
};

inline std::vector<Field> split_fields(std::string_view text, char sep) {
  std::vector<Field> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) {
      fields.push_back({text.substr(start), start});
      break;
    }
    fields.push_back({text.substr(start, end - start), start});
    start = end + 1;
  }
  return fields;
}

/// Splits on commas and trims each piece; drops nothing.
inline std::vector<std::string> split_names(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& f : split_fields(text, ',')) out.emplace_back(trim(f.text));
  return out;
}

inline std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

}  // namespace neutro::detail
