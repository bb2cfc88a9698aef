// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minhit/core.hpp"
#include "minhit/element_set.hpp"
#include "minhit/engines.hpp"
#include "minhit/set_family.hpp"

namespace minhit {

/// Atoms are identified by the dense element index they encode; atom sets
/// (heads, bodies, interpretations) reuse ElementSet over the atom universe.
using Interpretation = ElementSet;

/// A grounded disjunctive rule: head \/ ... <- body_pos, not body_neg.
/// Rules produced by dlp() have empty bodies and a non-empty head.
struct Rule {
  ElementSet head;
  ElementSet body_pos;
  ElementSet body_neg;

  bool operator==(const Rule&) const = default;
};

struct DisjunctiveProgram {
  std::size_t atom_count = 0;
  std::vector<Rule> rules;

  bool operator==(const DisjunctiveProgram&) const = default;
};

/// One disjunctive fact per set: the head holds the atoms of the set's
/// elements, the body is empty.
DisjunctiveProgram dlp(const SetFamily& family);

/// Rule satisfaction: m |= r iff (head u body_neg) intersects m, or some
/// positive body atom is outside m. m |= p iff it satisfies every rule.
bool satisfies(const Interpretation& m, const DisjunctiveProgram& p);

/// Gelfond-Lifschitz reduct: keeps rules whose negative body avoids m,
/// stripped of their negative bodies.
DisjunctiveProgram gl_reduct(const DisjunctiveProgram& p, const Interpretation& m);

/// Answer-set check for negation-free, body-free programs (the class dlp
/// emits): m models p and no single-atom removal models the reduct. Throws
/// UnsupportedProgramError for any rule with a non-empty body.
bool is_answer_set(const DisjunctiveProgram& p, const Interpretation& m);

/// Runs a native enumeration engine on the family a dlp image encodes and
/// returns its answer sets as interpretations.
EnumerationResult answer_sets_via_engine(const DisjunctiveProgram& p, EngineKind engine);

/// Reconstructs the set family a dlp image encodes (identity element names).
SetFamily family_from_program(const DisjunctiveProgram& p);

/// ASP-Core-2 text: one `h(N1) | h(N2) | ... .` line per rule using the
/// original external identifiers (ascending), then `#show h/1.`. UTF-8, LF,
/// trailing newline.
std::string emit_asp_core2(const DisjunctiveProgram& p,
                           const std::vector<std::uint32_t>& element_names);

}  // namespace minhit
