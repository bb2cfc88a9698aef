// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#include "minhit/core.hpp"

#include <algorithm>
#include <chrono>

#include "minhit/errors.hpp"

namespace minhit {

bool is_hitting_set(const SetFamily& family, const ElementSet& h) {
  for (const ElementSet& s : family.sets())
    if (!s.intersects(h)) return false;
  return true;
}

bool is_minimal_hitting_set(const SetFamily& family, const ElementSet& h) {
  if (!is_hitting_set(family, h)) return false;
  ElementSet probe = h;
  bool minimal = true;
  h.for_each([&](std::size_t x) {
    if (!minimal) return;
    probe.erase(x);
    if (is_hitting_set(family, probe)) minimal = false;
    probe.insert(x);
  });
  return minimal;
}

std::map<std::size_t, std::optional<std::size_t>> critical_witnesses(
    const SetFamily& family, const ElementSet& h) {
  if (!is_hitting_set(family, h))
    throw PreconditionError("critical_witnesses: h is not a hitting set");
  std::map<std::size_t, std::optional<std::size_t>> out;
  h.for_each([&](std::size_t x) { out[x] = std::nullopt; });
  for (std::size_t i = 0; i < family.sets().size(); ++i) {
    ElementSet inter = family.sets()[i] & h;
    if (inter.count() == 1) {
      std::size_t only = inter.indices().front();
      if (!out[only]) out[only] = i;
    }
  }
  return out;
}

EnumerationResult brute_force_mhs(const SetFamily& family, std::size_t cap) {
  const std::size_t u = family.universe_size();
  if (u > cap) throw OracleTooLargeError(u, cap);

  auto start = std::chrono::steady_clock::now();
  // With u <= cap <= 20 everything fits in one machine word.
  std::vector<std::uint32_t> masks;
  masks.reserve(family.num_sets());
  for (const ElementSet& s : family.sets()) {
    std::uint32_t m = 0;
    s.for_each([&](std::size_t x) { m |= std::uint32_t{1} << x; });
    masks.push_back(m);
  }

  auto hits_all = [&](std::uint32_t h) {
    for (std::uint32_t m : masks)
      if (!(m & h)) return false;
    return true;
  };

  EnumerationResult result;
  for (std::uint32_t h = 0; h < (std::uint32_t{1} << u); ++h) {
    if (!hits_all(h)) continue;
    bool minimal = true;
    for (std::uint32_t bit = h; bit; bit &= bit - 1) {
      std::uint32_t lowest = bit & -bit;
      if (hits_all(h & ~lowest)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    ElementSet es(u);
    for (std::size_t x = 0; x < u; ++x)
      if (h & (std::uint32_t{1} << x)) es.insert(x);
    result.mhses.push_back(std::move(es));
  }
  result.mhses = canonicalize(std::move(result.mhses));
  result.stats.engine = "oracle";
  result.stats.emitted = result.mhses.size();
  result.stats.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<ElementSet> canonicalize(std::vector<ElementSet> sets) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
  keyed.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) keyed.emplace_back(sets[i].indices(), i);
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<ElementSet> out;
  out.reserve(keyed.size());
  for (const auto& [key, i] : keyed) out.push_back(std::move(sets[i]));
  return out;
}

InstanceStats instance_stats(const SetFamily& family) {
  InstanceStats st;
  st.num_sets = family.num_sets();
  st.universe_size = family.universe_size();
  if (st.num_sets > 0) {
    std::size_t total = 0;
    for (const ElementSet& s : family.sets()) total += s.count();
    st.avg_disjunction = static_cast<double>(total) / static_cast<double>(st.num_sets);
  }
  return st;
}

}  // namespace minhit
