// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minhit/engines.hpp"
#include "minhit/io.hpp"
#include "minhit/set_family.hpp"

namespace minhit {

/// Per-run budgets. Time is enforced cooperatively (checks at branch and
/// emission boundaries); memory limiting is left to the environment except
/// for Berge's self-reported intermediate cap.
struct RunBudget {
  double time_limit_s = 1000.0;
  std::optional<std::uint64_t> emit_limit;
  std::size_t berge_cap = kDefaultBergeCap;
};

/// Parameters for the seeded random instance generator.
struct GenSpec {
  std::size_t universe_size = 0;
  std::size_t num_sets = 0;
  std::size_t set_size_min = 1;
  std::size_t set_size_max = 1;
  std::uint64_t seed = 0;
};

/// Deterministic per seed: num_sets uniform random subsets with sizes drawn
/// from [set_size_min, set_size_max]. Throws PreconditionError on an
/// infeasible spec.
SetFamily gen_random(const GenSpec& spec);

/// Runs every (instance, engine) pair under the budget and returns one CSV
/// row each; per-run failures become rows with status=error, never abort the
/// suite. `jobs` workers run instances in parallel; row order is the input
/// cartesian order regardless.
std::vector<CsvRow> run_suite(const std::vector<std::pair<std::string, SetFamily>>& instances,
                              const std::vector<EngineKind>& engines,
                              const RunBudget& budget, std::size_t jobs = 1);

/// Cactus-plot data for one engine's rows: ok times sorted ascending; the
/// k-th pair is (k, k-th smallest time_ms).
std::vector<std::pair<std::size_t, double>> cactus_data(const std::vector<CsvRow>& rows);

struct SummaryRow {
  std::string bucket_kind;  // num_sets | dis
  double bucket_lo = 0.0;
  double bucket_hi = 0.0;
  std::string engine;
  std::size_t solved = 0;
  std::size_t total = 0;
};

/// Powers-of-ten buckets over |S| and dis, per engine.
std::vector<SummaryRow> summarize(const std::vector<CsvRow>& rows);

std::string write_summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace minhit
