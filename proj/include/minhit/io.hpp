// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minhit/core.hpp"
#include "minhit/set_family.hpp"

namespace minhit {

/// Parses instance text: one set per line, whitespace-separated non-negative
/// integers; `#`-prefixed lines and blank lines are ignored. Identifiers
/// above 2^31-1 are rejected. Errors carry 1-based line/column.
SetFamily parse_instance(std::string_view text);

/// Renders a family back into instance format (original identifiers,
/// ascending within each line).
std::string write_instance(const SetFamily& family);

/// One MHS per line, ascending original identifiers, space separated.
/// The empty set renders as `empty_repr` (default: a blank line). With
/// `with_count`, appends a `c count=<N>` trailer.
std::string write_mhses(const EnumerationResult& result,
                        const std::vector<std::uint32_t>& element_names,
                        bool with_count = false, std::string_view empty_repr = "");

/// One row of the harness CSV.
struct CsvRow {
  std::string instance;
  std::string engine;
  InstanceStats istats;
  std::optional<std::uint64_t> mhs_count;
  double time_ms = 0.0;
  std::uint64_t decisions = 0;
  std::string status;  // ok | timeout | memout | partial | error
};

/// Header `instance,engine,num_sets,universe,avg_disjunction,mhs_count,
/// time_ms,decisions,status`, then one row per run.
std::string write_stats_csv(const std::vector<CsvRow>& rows);

}  // namespace minhit
