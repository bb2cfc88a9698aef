// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minhit/core.hpp"
#include "minhit/element_set.hpp"
#include "minhit/set_family.hpp"

namespace minhit {

enum class EngineKind { blocking, berge, mmcs };

std::string to_string(EngineKind kind);
std::optional<EngineKind> engine_from_string(const std::string& name);

inline constexpr std::size_t kDefaultBergeCap = 10'000'000;

/// Streaming consumer for engine output. `on_mhs` receives each minimal
/// hitting set exactly once and returns false to request a stop (honored
/// within one further emission). `should_stop`, when set, is polled at
/// branch/emission boundaries for cooperative cancellation.
struct EmitSink {
  std::function<bool(const ElementSet&)> on_mhs;
  std::function<bool()> should_stop;

  bool emit(const ElementSet& s) const { return on_mhs ? on_mhs(s) : true; }
  bool cancelled() const { return should_stop && should_stop(); }
};

/// SAT-style enumeration: repeatedly find a model of the monotone clause
/// system with a DPLL search, shrink it to a minimal hitting set, emit, and
/// add a blocking clause. `decisions` counts solver calls (#MHS + 1: one SAT
/// call per emission plus the final UNSAT).
EngineStats enumerate_blocking(const SetFamily& family, const EmitSink& sink);

/// Berge dualization: folds the sets one by one, maintaining the minimal
/// transversals of the processed prefix. Throws BergeCapError when the
/// intermediate collection exceeds `cap`. Emits in canonical order.
EngineStats enumerate_berge(const SetFamily& family, const EmitSink& sink,
                            std::size_t cap = kDefaultBergeCap);

/// One Berge fold step: T must be the minimal transversals of the prefix;
/// returns the minimal transversals after also covering `next`.
std::vector<ElementSet> berge_step(const std::vector<ElementSet>& transversals,
                                   const ElementSet& next, std::size_t universe_size);

/// MMCS depth-first search over growing partial transversals, with critical
/// set bookkeeping and candidate pruning. `decisions` counts recursion nodes.
EngineStats enumerate_mmcs(const SetFamily& family, const EmitSink& sink);

/// Uniform facade: dispatches, collects, canonicalizes. `limit` truncates the
/// enumeration and flags the result partial.
EnumerationResult enumerate(const SetFamily& family, EngineKind kind,
                            std::optional<std::uint64_t> limit = std::nullopt,
                            std::size_t berge_cap = kDefaultBergeCap);

/// Post-filters a canonical result: size bound, required subset, and, when
/// weights are given, restriction to the minimum-total-weight survivors
/// (all ties kept). Filtering applies to the globally minimal hitting sets;
/// survivors are not re-minimized.
EnumerationResult filter_and_optimize(const EnumerationResult& result,
                                      std::optional<std::size_t> size_bound,
                                      const std::optional<ElementSet>& required,
                                      const std::optional<std::vector<double>>& weights);

}  // namespace minhit
