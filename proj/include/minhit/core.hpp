// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minhit/element_set.hpp"
#include "minhit/set_family.hpp"

namespace minhit {

/// Counters and timing for one engine run. `decisions` counts solver calls
/// for the blocking engine, recursion nodes for mmcs, and minimization passes
/// for berge.
struct EngineStats {
  std::string engine;
  std::chrono::duration<double> wall_time{0};
  std::uint64_t decisions = 0;
  std::uint64_t emitted = 0;
};

/// Canonical collection of minimal hitting sets plus run statistics.
struct EnumerationResult {
  std::vector<ElementSet> mhses;
  EngineStats stats;
  bool partial = false;
};

struct InstanceStats {
  std::size_t num_sets = 0;
  std::size_t universe_size = 0;
  double avg_disjunction = 0.0;  // dis = sum |S_i| / |S|, 0 for an empty family
  std::optional<std::uint64_t> mhs_count;
};

inline constexpr std::size_t kDefaultOracleCap = 20;

/// True iff h intersects every set of the family (vacuously true when the
/// family has no sets).
bool is_hitting_set(const SetFamily& family, const ElementSet& h);

/// True iff h hits every set and no single-element removal keeps it hitting.
/// Single removals suffice: the hitting constraint is monotone, so any proper
/// hitting subset implies some one-element-smaller hitting subset.
bool is_minimal_hitting_set(const SetFamily& family, const ElementSet& h);

/// For each x in h, the index of some set hit only by x, or nullopt when x is
/// non-critical. h is minimal iff every entry is present. Throws
/// PreconditionError when h is not a hitting set.
std::map<std::size_t, std::optional<std::size_t>> critical_witnesses(
    const SetFamily& family, const ElementSet& h);

/// Exhaustive oracle: scans all 2^|U| subsets and keeps the minimal hitting
/// sets, in canonical order. Refuses universes above `cap` with
/// OracleTooLargeError. The empty family yields exactly {empty set}.
EnumerationResult brute_force_mhs(const SetFamily& family,
                                  std::size_t cap = kDefaultOracleCap);

/// Dedupe + sort into canonical (lexicographic index-sequence) order.
std::vector<ElementSet> canonicalize(std::vector<ElementSet> sets);

InstanceStats instance_stats(const SetFamily& family);

}  // namespace minhit
