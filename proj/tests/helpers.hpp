// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

#include "minhit/core.hpp"
#include "minhit/element_set.hpp"
#include "minhit/set_family.hpp"

namespace minhit::test {

inline SetFamily paper_family() {
  return SetFamily::from_external({{1, 2}, {3}, {2, 3, 4}});
}

/// Builds an ElementSet over fam's universe from external identifiers.
inline ElementSet es(const SetFamily& fam, std::initializer_list<std::uint32_t> ids) {
  ElementSet out(fam.universe_size());
  for (std::uint32_t id : ids) {
    const auto& names = fam.element_names();
    auto it = std::find(names.begin(), names.end(), id);
    if (it == names.end()) throw std::runtime_error("unknown element id in test");
    out.insert(static_cast<std::size_t>(it - names.begin()));
  }
  return out;
}

/// Result as sorted lists of external identifiers, for readable comparisons.
inline std::vector<std::vector<std::uint32_t>> external(
    const std::vector<ElementSet>& sets, const SetFamily& fam) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const ElementSet& s : sets) {
    std::vector<std::uint32_t> row;
    s.for_each([&](std::size_t x) { row.push_back(fam.element_names()[x]); });
    std::sort(row.begin(), row.end());
    out.push_back(std::move(row));
  }
  return out;
}

/// Seeded random instance over dense identifiers 0..universe-1.
inline SetFamily random_family(std::mt19937_64& rng, std::size_t max_universe,
                               std::size_t max_sets, std::size_t max_set_size) {
  std::size_t universe = 1 + rng() % max_universe;
  std::size_t num_sets = 1 + rng() % max_sets;
  std::vector<std::vector<std::uint32_t>> sets(num_sets);
  for (auto& s : sets) {
    std::size_t size = 1 + rng() % std::min(max_set_size, universe);
    while (s.size() < size) {
      std::uint32_t x = static_cast<std::uint32_t>(rng() % universe);
      if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
    }
  }
  return SetFamily::from_external(sets);
}

}  // namespace minhit::test
