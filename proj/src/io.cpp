// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include "minhit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "minhit/errors.hpp"

namespace minhit {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

SetFamily parse_instance(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> sets;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  constexpr std::uint64_t kMaxId = 2147483647;  // 2^31 - 1

  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;

    std::size_t col = 0;
    while (col < line.size() && is_space(line[col])) ++col;
    if (col == line.size() || line[col] == '#') continue;

    std::vector<std::uint32_t> set;
    while (col < line.size()) {
      if (is_space(line[col])) {
        ++col;
        continue;
      }
      std::size_t start = col;
      std::uint64_t value = 0;
      while (col < line.size() && !is_space(line[col])) {
        char c = line[col];
        if (c < '0' || c > '9')
          throw ParseError(line_no, col + 1, "expected a non-negative integer");
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (value > kMaxId)
          throw ParseError(line_no, start + 1, "identifier exceeds 2^31-1");
        ++col;
      }
      set.push_back(static_cast<std::uint32_t>(value));
    }
    sets.push_back(std::move(set));
  }
  return SetFamily::from_external(sets);
}

std::string write_instance(const SetFamily& family) {
  std::ostringstream os;
  for (const ElementSet& s : family.sets()) {
    std::vector<std::uint32_t> ids;
    s.for_each([&](std::size_t x) { ids.push_back(family.element_names()[x]); });
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) os << ' ';
      os << ids[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string write_mhses(const EnumerationResult& result,
                        const std::vector<std::uint32_t>& element_names,
                        bool with_count, std::string_view empty_repr) {
  std::ostringstream os;
  for (const ElementSet& h : result.mhses) {
    if (h.empty()) {
      os << empty_repr << '\n';
      continue;
    }
    std::vector<std::uint32_t> ids;
    h.for_each([&](std::size_t x) { ids.push_back(element_names.at(x)); });
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) os << ' ';
      os << ids[i];
    }
    os << '\n';
  }
  if (with_count) os << "c count=" << result.mhses.size() << '\n';
  return os.str();
}

std::string write_stats_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream os;
  os << "instance,engine,num_sets,universe,avg_disjunction,mhs_count,time_ms,"
        "decisions,status\n";
  for (const CsvRow& r : rows) {
    char dis[32];
    std::snprintf(dis, sizeof dis, "%.3f", r.istats.avg_disjunction);
    os << r.instance << ',' << r.engine << ',' << r.istats.num_sets << ','
       << r.istats.universe_size << ',' << dis << ',';
    if (r.mhs_count) os << *r.mhs_count;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.time_ms);
    os << ',' << ms << ',' << r.decisions << ',' << r.status << '\n';
  }
  return os.str();
}

}  // namespace minhit
