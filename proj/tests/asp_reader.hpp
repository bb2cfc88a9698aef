// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <optional>
#include <regex>
#include <string>
#include <vector>

// Strict test-only reader for the emitted ASP-Core-2 subset. Each rule line
// must match `h(INT)( \| h(INT))*\.` and the final line must be `#show h/1.`.
namespace minhit::test {

struct ReadProgram {
  std::vector<std::vector<std::uint32_t>> heads;  // external ids per rule
};

inline std::optional<ReadProgram> read_asp_core2(const std::string& text) {
  static const std::regex rule_re(R"(h\((\d+)\)( \| h\(\d+\))*\.)");
  ReadProgram out;
  std::size_t pos = 0;
  bool saw_show = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) return std::nullopt;  // missing trailing LF
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (saw_show) return std::nullopt;  // nothing may follow the directive
    if (line == "#show h/1.") {
      saw_show = true;
      continue;
    }
    if (!std::regex_match(line, rule_re)) return std::nullopt;
    std::vector<std::uint32_t> head;
    static const std::regex atom_re(R"(h\((\d+)\))");
    for (auto it = std::sregex_iterator(line.begin(), line.end(), atom_re);
         it != std::sregex_iterator(); ++it)
      head.push_back(static_cast<std::uint32_t>(std::stoul((*it)[1])));
    out.heads.push_back(std::move(head));
  }
  if (!saw_show) return std::nullopt;
  return out;
}

}  // namespace minhit::test
